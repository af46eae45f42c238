#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hec/newton.hpp"

namespace hec {

/* Candidate Weil polynomial data for a g-dimensional isogeny class:
     x^(2g) + a_1 x^(2g-1) + ... + a_g x^g + a_{g-1} q x^(g-1) + ... + q^g.
   Nothing is validated at construction; is_weil_poly decides whether
   all complex roots have modulus sqrt(q). */
struct WeilPoly {
    int g = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> a;  // a[i-1] = a_i, i = 1..g
};

/// Coefficient parities (n_1, ..., n_g); bit i-1 holds n_i.
struct ResiduePattern {
    int g = 0;
    std::uint32_t bits = 0;

    int at(int i) const { return (bits >> (i - 1)) & 1; }  // n_i, 1-indexed
    friend bool operator==(const ResiduePattern&, const ResiduePattern&) = default;
};

/// Largest index i with a_i odd, or 0 when all are even. Equals the
/// 2-rank of any abelian variety in the class.
int two_rank(const WeilPoly& w);
int two_rank(const ResiduePattern& p);

ResiduePattern pattern_of(const WeilPoly& w);
/// Bits concatenated n_1 first ("011" for (0,1,1)).
std::string pattern_str(const ResiduePattern& p);
ResiduePattern pattern_parse(const std::string& s);
/// Orders patterns by their printed form.
bool pattern_less(const ResiduePattern& a, const ResiduePattern& b);

/// Full monic coefficient list, leading term first (length 2g+1).
std::vector<bigint> expand_coeffs(const WeilPoly& w);

/// Coefficients b_1..b_g of the real Weil polynomial
/// h(y) = prod (y - (alpha_i + q/alpha_i)), computed from the power
/// sums of the Frobenius eigenvalues.
std::vector<bigint> real_weil_coeffs(const WeilPoly& w);

/// Exact test that every complex root has modulus sqrt(q): the real
/// Weil polynomial must be totally real with all roots of
/// H(y) = Res_x(h(x), y - x^2) inside [0, 4q]. Decided by Sturm chains
/// over exact integers; roots exactly at the endpoints are accepted.
bool is_weil_poly(const WeilPoly& w);

/// The exact inequality region cut out by genus-3 Weil polynomials
/// (all comparisons in squared integer form; no floating point).
bool in_w3_region(std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t q);

}  // namespace hec
