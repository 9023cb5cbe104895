#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hypertorsion/numtheory.hpp"
#include "hypertorsion/torsion.hpp"

namespace hypertorsion {

/// eps an n-th root of unity other than 1, eta = 1/(eps - 1).
struct RootLabel {
    Elem eps;
    Elem eta;
};

/// Labels for every eps in nth_roots_of_unity(f, n), in the same order.
/// The etas are the roots of ((x+1)^n - x^n)/n; the product identity is
/// checked before returning.
std::vector<RootLabel> eta_roots(const Field& f, std::uint64_t n);

/// prod over i in idx of (x - eta_i)
Poly eta_poly(const Field& f, const std::vector<RootLabel>& roots, std::span<const std::size_t> idx);

/// A decorated pair up to the scalar mu: the family member for mu is
/// (mu u1, u2 / mu) with a1 = 0, a2 = -1.
struct PairTemplate {
    Poly u1;
    Poly u2;
};

PairCert instantiate(const PairTemplate& t, const Elem& mu);

struct CoprimeTemplate {
    std::vector<std::size_t> I;           // indices into the root list
    std::vector<std::size_t> complement;
    PairTemplate pair;                    // (H_I, n H_{complement})
    std::size_t symmetry_class;
};

struct CoprimeFamilies {
    unsigned g = 0;
    std::vector<RootLabel> roots;
    std::vector<CoprimeTemplate> templates;
    std::size_t class_count = 0;
};

/// All C(2g, g) subset templates for char(f) not dividing 2g+1. Classes
/// identify I with its complement (the swap/sign orbit of a decoration).
CoprimeFamilies nice_pairs_coprime(const Field& f, unsigned g);

/// 2g+1 = p^k (2l+1) with p not dividing 2l+1.
struct CharSplit {
    std::uint64_t p = 0;
    unsigned k = 0;
    unsigned l = 0;
    std::uint64_t pk = 1;
    unsigned g() const { return static_cast<unsigned>((pk * (2 * l + 1) - 1) / 2); }
};

std::optional<CharSplit> char_split(std::uint64_t p, unsigned g);

/// Multiplicities on the (2l+1)-th roots of unity, in root-list order.
struct AdmissibleFn {
    CharSplit split;
    std::vector<std::uint64_t> values;

    std::uint64_t degree() const;
    /// eps -> p^k - values(eps)
    AdmissibleFn bar() const;
    friend bool operator==(const AdmissibleFn& a, const AdmissibleFn& b) { return a.values == b.values; }
};

enum class AdmissibleCheck { ok, out_of_range, all_divisible_by_p, degree_too_large };
AdmissibleCheck check_admissible(const AdmissibleFn& u);

/// Every admissible function, lexicographic in the values.
std::vector<AdmissibleFn> admissible_enum(const CharSplit& s);

/// The functions taking (p^k+1)/2 on an l-subset I and (p^k-1)/2 on its
/// complement, one per subset in lexicographic order.
std::vector<AdmissibleFn> upsilon_ij_family(const CharSplit& s);

/// (Upsilon_u, (2l+1) Upsilon_{bar u}); checks that Upsilon_u divides
/// (x+1)^(2g+1) - x^(2g+1) and the product identity.
PairTemplate upsilon_template(const Field& f, const std::vector<RootLabel>& roots, const AdmissibleFn& u);

/// One curve family: a g-subset of root indices (char not dividing 2g+1) or
/// an admissible function, plus the scalar mu once chosen.
struct FamilyIndex {
    std::variant<std::vector<std::size_t>, AdmissibleFn> regime;
    std::optional<Elem> mu;
};

/// The template of a family, built over f for genus g. Checks that the
/// regime matches the characteristic.
PairTemplate family_template(const Field& f, unsigned g, const FamilyIndex& fam);

class ScanExhausted : public InsufficientField {
public:
    using InsufficientField::InsufficientField;
};

struct GoodMu {
    Elem mu;
    PairCert cert;
    EnhancedCurve enhanced;
    std::size_t rejected = 0;
};

/// First candidate mu whose curve is squarefree with nondegenerate P, Q.
/// Throws ScanExhausted when none works.
GoodMu find_good_mu(const Field& f, unsigned g, const PairTemplate& t, std::span<const Elem> candidates);

/// Fixed scan order: nonzero elements by index for finite fields,
/// 1, -1, 2, -2, ... for Q. At most limit entries.
std::vector<Elem> mu_candidates(const Field& f, std::size_t limit);

struct RationalFourTorsion {
    TotientPartition partition;
    PairCert cert;
    Elem mu;
    EnhancedCurve enhanced;
    std::array<AffinePoint, 4> points;  // P, iota P, Q, iota Q
};

/// Curve over Q with four rational points of order 2g+1, from a totient
/// partition of the divisors of 2g+1. s1 overrides the searched partition.
RationalFourTorsion rational_four_torsion(unsigned g, std::optional<std::vector<std::uint64_t>> s1 = std::nullopt,
                                          std::size_t mu_limit = 200);

} // namespace hypertorsion
