#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace incevolkov {

// The six finite-polynomial solution classes. Dirac families use the
// exponential basis exp(-i r xi); Klein-Gordon families use cos/sin of
// integer (Even) or half-integer (Odd) multiples of xi.
enum class FamilyKind {
    DiracPlus,
    DiracMinus,
    KgCosEven,
    KgCosOdd,
    KgSinOdd,
    KgSinEven,
};

inline constexpr FamilyKind all_family_kinds[] = {
    FamilyKind::DiracPlus, FamilyKind::DiracMinus, FamilyKind::KgCosEven,
    FamilyKind::KgCosOdd,  FamilyKind::KgSinOdd,   FamilyKind::KgSinEven,
};

bool is_dirac(FamilyKind kind);
bool is_cosine(FamilyKind kind);
bool is_sine(FamilyKind kind);

std::string_view family_name(FamilyKind kind);
// Accepts the names produced by family_name ("dirac-plus", "kg-cos-even", ...)
// plus the shorthand "dirac" for dirac-plus. Throws DomainError otherwise.
FamilyKind parse_family(std::string_view name);

struct SolutionFamily {
    FamilyKind kind{FamilyKind::DiracPlus};
    int n{1};

    // Ince parameter of the terminating recurrence:
    //   Dirac: q = 2n - 1, even-q KG: q = 2n, odd-q KG: q = 2n + 1.
    int q() const;
    int dimension() const;
    // Harmonic numbers r of the basis functions in xi, in storage order.
    // Half-integers for the odd-q KG families.
    std::vector<double> basis_frequencies() const;
    std::string basis_description() const;
};

SolutionFamily make_family(FamilyKind kind, int n);

}  // namespace incevolkov
