#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "hec/newton.hpp"

namespace hec {

/* Lattice counts of the genus-3 Weil coefficient region, tabulated by
   the parity class of (s, t, u). Index: (s mod 2) << 2 | (t mod 2) << 1
   | (u mod 2). The u-interval per (s, t) column is intersected in
   closed form, so a full table costs O(q^(3/2)) instead of O(q^3). */
struct ClassCountTable {
    std::int64_t q = 0;
    std::array<std::uint64_t, 8> counts{};
    std::uint64_t total = 0;

    std::uint64_t at(int r1, int r2, int r3) const {
        return counts[static_cast<std::size_t>((r1 << 2) | (r2 << 1) | r3)];
    }
};

ClassCountTable w3_class_counts(std::int64_t q, int jobs = 1);

/// The obstructed share of the genus-3 parity classes: numerator is
/// classes (0,1,1) + (1,0,1); the ordinary denominator keeps u odd.
struct Tau3 {
    std::uint64_t numerator = 0;
    std::uint64_t ordinary = 0;
    std::uint64_t total = 0;

    bigrat over_ordinary() const { return bigrat(numerator, ordinary); }
    bigrat over_all() const { return bigrat(numerator, total); }
};

Tau3 tau3(const ClassCountTable& table);

/// The isogeny-class count estimate
///   I(g, q) = (2^g/g! * prod_{i=1}^g (2i/(2i-1))^(g+1-i)) r(q) q^(g(g+1)/4)
/// with r(q) = phi(q)/q, kept exact as coeff * q^(half_exp/2).
struct IsogenyEstimate {
    bigrat coeff;
    std::int64_t q = 0;
    int half_exp = 0;  // exponent of sqrt(q)

    double approx() const;
};

IsogenyEstimate isogeny_count_estimate(int g, std::int64_t q);

/// CSV row (with header): q, the eight class counts, total, tau3
/// numerator and both denominators.
std::string table_csv_header();
std::string table_csv_row(const ClassCountTable& table);

}  // namespace hec
