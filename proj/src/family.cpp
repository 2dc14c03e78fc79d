#include "incevolkov/family.hpp"

#include <sstream>

#include "incevolkov/errors.hpp"

namespace incevolkov {

bool is_dirac(FamilyKind kind) {
    return kind == FamilyKind::DiracPlus || kind == FamilyKind::DiracMinus;
}

bool is_cosine(FamilyKind kind) {
    return kind == FamilyKind::KgCosEven || kind == FamilyKind::KgCosOdd;
}

bool is_sine(FamilyKind kind) {
    return kind == FamilyKind::KgSinEven || kind == FamilyKind::KgSinOdd;
}

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::DiracPlus: return "dirac-plus";
        case FamilyKind::DiracMinus: return "dirac-minus";
        case FamilyKind::KgCosEven: return "kg-cos-even";
        case FamilyKind::KgCosOdd: return "kg-cos-odd";
        case FamilyKind::KgSinOdd: return "kg-sin-odd";
        case FamilyKind::KgSinEven: return "kg-sin-even";
    }
    return "unknown";
}

FamilyKind parse_family(std::string_view name) {
    if (name == "dirac") return FamilyKind::DiracPlus;
    for (FamilyKind kind : all_family_kinds) {
        if (family_name(kind) == name) return kind;
    }
    throw DomainError("unknown solution family '" + std::string(name) + "'");
}

int SolutionFamily::q() const {
    switch (kind) {
        case FamilyKind::DiracPlus:
        case FamilyKind::DiracMinus: return 2 * n - 1;
        case FamilyKind::KgCosEven:
        case FamilyKind::KgSinEven: return 2 * n;
        case FamilyKind::KgCosOdd:
        case FamilyKind::KgSinOdd: return 2 * n + 1;
    }
    return 0;
}

int SolutionFamily::dimension() const {
    switch (kind) {
        case FamilyKind::DiracPlus:
        case FamilyKind::DiracMinus: return 2 * n;
        case FamilyKind::KgCosEven:
        case FamilyKind::KgCosOdd:
        case FamilyKind::KgSinOdd: return n + 1;
        case FamilyKind::KgSinEven: return n;
    }
    return 0;
}

std::vector<double> SolutionFamily::basis_frequencies() const {
    std::vector<double> r;
    r.reserve(static_cast<std::size_t>(dimension()));
    switch (kind) {
        case FamilyKind::DiracPlus:
            for (int m = -n + 1; m <= n; ++m) r.push_back(m);
            break;
        case FamilyKind::DiracMinus:
            for (int m = -n; m <= n - 1; ++m) r.push_back(m);
            break;
        case FamilyKind::KgCosEven:
            for (int m = 0; m <= n; ++m) r.push_back(m);
            break;
        case FamilyKind::KgSinEven:
            for (int m = 1; m <= n; ++m) r.push_back(m);
            break;
        case FamilyKind::KgCosOdd:
        case FamilyKind::KgSinOdd:
            for (int j = 0; j <= n; ++j) r.push_back(j + 0.5);
            break;
    }
    return r;
}

std::string SolutionFamily::basis_description() const {
    std::ostringstream out;
    switch (kind) {
        case FamilyKind::DiracPlus:
            out << "exp(-i r xi), r = " << -n + 1 << ".." << n;
            break;
        case FamilyKind::DiracMinus:
            out << "exp(-i r xi), r = " << -n << ".." << n - 1;
            break;
        case FamilyKind::KgCosEven: out << "cos(r xi), r = 0.." << n; break;
        case FamilyKind::KgSinEven: out << "sin(r xi), r = 1.." << n; break;
        case FamilyKind::KgCosOdd: out << "cos(r xi), r = 1/2.." << n << "+1/2"; break;
        case FamilyKind::KgSinOdd: out << "sin(r xi), r = 1/2.." << n << "+1/2"; break;
    }
    return out.str();
}

SolutionFamily make_family(FamilyKind kind, int n) {
    if (n < 1) throw DomainError("quantum number n must be >= 1, got " + std::to_string(n));
    return SolutionFamily{kind, n};
}

}  // namespace incevolkov
