#include "incevolkov/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "incevolkov/errors.hpp"

namespace incevolkov::eigensolve {

Symmetrized symmetrize(const inceop::TridiagonalOperator& op) {
    const int dim = op.dim();
    Symmetrized out;
    out.matrix.diag = op.diag;
    out.matrix.off.assign(dim > 0 ? dim - 1 : 0, 0.0);
    out.scale.assign(dim, 1.0);
    for (int i = 0; i + 1 < dim; ++i) {
        const double up = op.super[i];
        const double down = op.sub[i];
        const double product = up * down;
        if (product > 0.0) {
            out.matrix.off[i] = std::copysign(std::sqrt(product), up);
            out.scale[i + 1] = out.scale[i] * std::sqrt(up / down);
        } else if (up == 0.0 && down == 0.0) {
            out.scale[i + 1] = out.scale[i];
        } else {
            throw StructuralError("operator is not symmetrizable: super*sub = " +
                                  std::to_string(product) + " at row " + std::to_string(i));
        }
    }
    return out;
}

SymmetricEigenpairs implicit_ql(const SymmetricTridiagonal& s) {
    const int n = s.dim();
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(s.diag.data(), n);
    // e[i] couples rows i and i+1; e[n-1] is scratch.
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    for (int i = 0; i + 1 < n; ++i) e[i] = s.off[i];
    Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);

    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_sweeps = 60;
    double f = 0.0;
    double tst1 = 0.0;
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        int m = l;
        while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;
        if (m > l) {
            int sweeps = 0;
            do {
                if (++sweeps > max_sweeps) {
                    throw ConvergenceError("implicit QL did not converge for eigenvalue " +
                                           std::to_string(l));
                }
                // Wilkinson-type shift from the leading 2x2 block.
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                const double el1 = e[l + 1];
                double sn = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = sn;
                    g = c * e[i];
                    h = c * p;
                    r = std::hypot(p, e[i]);
                    e[i + 1] = sn * r;
                    sn = e[i] / r;
                    c = p / r;
                    p = c * d[i] - sn * g;
                    d[i + 1] = h + sn * (c * g + sn * d[i]);
                    for (int k = 0; k < n; ++k) {
                        h = z(k, i + 1);
                        z(k, i + 1) = sn * z(k, i) + c * h;
                        z(k, i) = c * z(k, i) - sn * h;
                    }
                }
                p = -sn * s2 * c3 * el1 * e[l] / dl1;
                e[l] = sn * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
    SymmetricEigenpairs out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = d[order[j]];
        out.vectors.col(j) = z.col(order[j]);
    }
    return out;
}

int SpectralDecomposition::column_of_label(int k) const {
    for (int j = 0; j < dim(); ++j) {
        if (k_labels[j] == k) return j;
    }
    throw DomainError("no eigenpair with label k = " + std::to_string(k));
}

double SpectralDecomposition::min_relative_gap() const {
    if (dim() < 2) return 1.0;
    const double spread = etas[dim() - 1] - etas[0];
    if (spread <= 0.0) return 0.0;
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j + 1 < dim(); ++j) gap = std::min(gap, etas[j + 1] - etas[j]);
    return gap / spread;
}

namespace {

// Solves (T - shift) x = rhs for the nonsymmetric tridiagonal T by Gaussian
// elimination with partial pivoting. Zero pivots are nudged to `tiny`.
Eigen::VectorXd shifted_solve(const inceop::TridiagonalOperator& op, double shift,
                              Eigen::VectorXd rhs, double tiny) {
    const int n = op.dim();
    // Rows hold up to three nonzeros after pivoting: u0 (diag), u1, u2.
    Eigen::VectorXd u0(n), u1 = Eigen::VectorXd::Zero(n), u2 = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd lower = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        u0[i] = op.diag[i] - shift;
        if (i + 1 < n) u1[i] = op.super[i];
    }
    std::vector<bool> swapped(n, false);
    for (int i = 0; i + 1 < n; ++i) {
        const double below = op.sub[i];
        if (std::abs(below) > std::abs(u0[i])) {
            // Swap rows i and i+1.
            const double r0 = below, r1 = u0[i + 1], r2 = i + 2 < n ? u1[i + 1] : 0.0;
            const double s0 = u0[i], s1 = u1[i], s2 = u2[i];
            u0[i] = r0;
            u1[i] = r1;
            u2[i] = r2;
            const double factor = s0 / r0;
            lower[i] = factor;
            swapped[i] = true;
            u0[i + 1] = s1 - factor * r1;
            if (i + 2 < n) u1[i + 1] = s2 - factor * r2;
            std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= factor * rhs[i];
        } else {
            if (u0[i] == 0.0) u0[i] = tiny;
            const double factor = below / u0[i];
            lower[i] = factor;
            u0[i + 1] -= factor * u1[i];
            rhs[i + 1] -= factor * rhs[i];
        }
    }
    if (u0[n - 1] == 0.0) u0[n - 1] = tiny;
    Eigen::VectorXd x(n);
    for (int i = n - 1; i >= 0; --i) {
        double acc = rhs[i];
        if (i + 1 < n) acc -= u1[i] * x[i + 1];
        if (i + 2 < n) acc -= u2[i] * x[i + 2];
        x[i] = acc / u0[i];
    }
    return x;
}

double operator_norm_bound(const inceop::TridiagonalOperator& op) {
    double bound = 0.0;
    for (int i = 0; i < op.dim(); ++i) {
        double row = std::abs(op.diag[i]);
        if (i + 1 < op.dim()) row += std::abs(op.super[i]);
        if (i > 0) row += std::abs(op.sub[i - 1]);
        bound = std::max(bound, row);
    }
    return bound;
}

}  // namespace

SpectralDecomposition solve_spectrum(const inceop::TridiagonalOperator& op) {
    const Symmetrized sym = symmetrize(op);
    const SymmetricEigenpairs pairs = implicit_ql(sym.matrix);
    const int n = op.dim();

    SpectralDecomposition out;
    out.family = op.family;
    out.a = op.a;
    out.etas = pairs.values;
    out.scale = Eigen::Map<const Eigen::VectorXd>(sym.scale.data(), n);
    out.vectors.resize(n, n);
    out.k_labels.resize(n);
    const double norm_bound = std::max(1.0, operator_norm_bound(op));
    const double tiny = std::numeric_limits<double>::epsilon() * norm_bound;
    const Eigen::VectorXd weight = out.scale.cwiseAbs2();
    // Inverse iteration mixes in neighbours at a rate of eps / relative gap.
    constexpr double cluster_gap = 1e-3;
    int cluster_start = 0;
    for (int j = 0; j < n; ++j) {
        // S y = eta y  =>  T (D^-1 y) = eta (D^-1 y). The division amplifies
        // rounding where the scale is small, so one step of inverse iteration
        // on T itself restores a small residual in the coefficient basis.
        Eigen::VectorXd v = pairs.vectors.col(j).cwiseQuotient(out.scale);
        v /= v.norm();
        if (op.a != 0.0 && n > 1) {
            v = shifted_solve(op, out.etas[j], v, tiny);
            v /= v.norm();
        }
        // Inverse iteration keeps each vector inside its cluster's invariant
        // subspace; restore D-weighted orthogonality within the cluster.
        if (j > 0 && out.etas[j] - out.etas[j - 1] > cluster_gap * norm_bound) cluster_start = j;
        for (int i = cluster_start; i < j; ++i) {
            const Eigen::VectorXd prev = out.vectors.col(i);
            v -= (prev.cwiseProduct(weight).dot(v) / prev.cwiseProduct(weight).dot(prev)) * prev;
        }
        v /= v.norm();
        Eigen::Index largest = 0;
        v.cwiseAbs().maxCoeff(&largest);
        if (v[largest] < 0) v = -v;
        out.vectors.col(j) = v;
        out.k_labels[j] = n - j;
    }
    return out;
}

int sturm_count(const SymmetricTridiagonal& s, double x) {
    const int n = s.dim();
    constexpr double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double pivot = 1.0;
    for (int i = 0; i < n; ++i) {
        const double coupling = i > 0 ? s.off[i - 1] * s.off[i - 1] : 0.0;
        pivot = (s.diag[i] - x) - (i > 0 ? coupling / pivot : 0.0);
        if (pivot == 0.0) pivot = -tiny;
        if (pivot < 0.0) ++count;
    }
    return count;
}

std::vector<double> sturm_bisection_oracle(const SymmetricTridiagonal& s, double tol,
                                           int max_iterations) {
    if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
    const int n = s.dim();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(s.off[i - 1]);
        if (i + 1 < n) radius += std::abs(s.off[i]);
        lo = std::min(lo, s.diag[i] - radius);
        hi = std::max(hi, s.diag[i] + radius);
    }
    const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    lo -= pad;
    hi += pad;

    std::vector<double> values(n);
    for (int k = 0; k < n; ++k) {
        // Invariant: count(left) <= k < count(right).
        double left = lo, right = hi;
        int iterations = 0;
        while (right - left > tol) {
            const double mid = 0.5 * (left + right);
            if (mid <= left || mid >= right) break;  // adjacent doubles
            if (++iterations > max_iterations) {
                throw ConvergenceError("Sturm bisection exceeded its iteration budget at k = " +
                                       std::to_string(k));
            }
            if (sturm_count(s, mid) > k) {
                right = mid;
            } else {
                left = mid;
            }
        }
        values[k] = 0.5 * (left + right);
    }
    return values;
}

std::vector<PairSplitting> pair_splittings(const SpectralDecomposition& d) {
    std::vector<PairSplitting> pairs;
    const int n = d.dim();
    // Start below the topmost eigenvalue, which is unpaired for odd pair counts.
    for (int hi = n - 2; hi >= 1; hi -= 2) {
        PairSplitting p;
        p.upper_k = d.k_labels[hi];
        p.eta_high = d.etas[hi];
        p.eta_low = d.etas[hi - 1];
        p.splitting = p.eta_high - p.eta_low;
        const double next = hi + 1 < n ? d.etas[hi + 1] - p.eta_high : 0.0;
        const double prev = hi - 2 >= 0 ? p.eta_low - d.etas[hi - 2] : 0.0;
        const double spacing = std::max(next, prev);
        p.relative_splitting = spacing > 0 ? p.splitting / spacing : 0.0;
        pairs.push_back(p);
    }
    return pairs;
}

}  // namespace incevolkov::eigensolve
