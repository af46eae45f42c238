#pragma once

#include <cstdint>
#include <vector>

#include "hec/polyring.hpp"

namespace hec {

/* GF(2) coordinates of a polynomial of degree <= 2g+2 over GF(2^n):
   coordinate i*n + j is the coefficient of alpha^j x^i, packed into one
   128-bit word. Ambient dimension (2g+3)n stays within 128 bits for
   every supported run (g <= 4, n <= 11). */
using bitvec = unsigned __int128;

int bv_dim(int g, int n);
bitvec bv_pack(const Poly& f, int g);
Poly bv_unpack(bitvec w, int g, const Field& F);
int bv_poly_deg(bitvec w, int n);  // degree of the packed polynomial, -1 if zero

/// Row-reduced GF(2) subspace of a fixed ambient dimension.
class Subspace {
public:
    Subspace(int dim, std::vector<bitvec> rows, std::vector<int> pivots)
        : dim_(dim), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<bitvec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    bool contains(bitvec w) const { return reduce(w) == 0; }

    /// Canonical coset representative: eliminates every pivot coordinate.
    /// reduce(w) == reduce(w') iff w + w' lies in the subspace.
    bitvec reduce(bitvec w) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if ((w >> pivots_[i]) & 1) w ^= rows_[i];
        return w;
    }

private:
    int dim_;
    std::vector<bitvec> rows_;   // reduced echelon form
    std::vector<int> pivots_;    // ascending
};

/// Reduced echelon span by Gaussian elimination (empty input = zero space).
Subspace subspace_span(int dim, const std::vector<bitvec>& gens);

/* The canonical transversal of V/U: every assignment of the non-pivot
   coordinates with pivot coordinates zero, exactly 2^(dim - rank(U))
   representatives, enumerated in lexicographic order of the free
   coordinate word. */
class CosetTransversal {
public:
    CosetTransversal(int dim, const Subspace& U);

    std::uint64_t size() const { return 1ull << free_pos_.size(); }
    bitvec rep(std::uint64_t index) const;
    /// Inverse of rep() on canonical representatives.
    std::uint64_t index_of(bitvec canonical_rep) const;
    const std::vector<int>& free_positions() const { return free_pos_; }

private:
    std::vector<int> free_pos_;  // non-pivot coordinates, ascending
};

}  // namespace hec
