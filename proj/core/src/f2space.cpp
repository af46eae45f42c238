#include "hec/f2space.hpp"

#include <algorithm>
#include <stdexcept>

namespace hec {

int bv_dim(int g, int n) {
    const int dim = (2 * g + 3) * n;
    if (dim > 127) throw std::domain_error("(2g+3)n exceeds the 128-bit row width");
    return dim;
}

bitvec bv_pack(const Poly& f, int g) {
    const int n = f.field().n();
    if (f.deg() > 2 * g + 2) throw std::domain_error("polynomial too large to pack");
    bitvec w = 0;
    for (int i = 0; i <= f.deg(); ++i)
        w |= static_cast<bitvec>(f.coeff(i)) << (i * n);
    return w;
}

Poly bv_unpack(bitvec w, int g, const Field& F) {
    const int n = F.n();
    const fe mask = static_cast<fe>((1u << n) - 1);
    std::vector<fe> c(static_cast<std::size_t>(2 * g + 3), 0u);
    for (int i = 0; i <= 2 * g + 2; ++i)
        c[static_cast<std::size_t>(i)] = static_cast<fe>(w >> (i * n)) & mask;
    return Poly(F, std::move(c));
}

int bv_poly_deg(bitvec w, int n) {
    if (w == 0) return Poly::kNegInfDeg;
    const auto hi = static_cast<std::uint64_t>(w >> 64);
    const int top = hi ? 127 - __builtin_clzll(hi)
                       : 63 - __builtin_clzll(static_cast<std::uint64_t>(w));
    return top / n;
}

Subspace subspace_span(int dim, const std::vector<bitvec>& gens) {
    if (dim < 0 || dim > 127) throw std::domain_error("ambient dimension out of range");
    std::vector<bitvec> rows;
    std::vector<int> pivots;
    for (bitvec g : gens) {
        // Eliminate with the existing rows, then insert if independent.
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((g >> pivots[i]) & 1) g ^= rows[i];
        if (g == 0) continue;
        int p = 0;
        for (int b = dim - 1; b >= 0; --b)
            if ((g >> b) & 1) {
                p = b;
                break;
            }
        // Back-substitute to keep reduced echelon form.
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((rows[i] >> p) & 1) rows[i] ^= g;
        auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
        const auto pos = static_cast<std::size_t>(it - pivots.begin());
        pivots.insert(it, p);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), g);
    }
    return Subspace(dim, std::move(rows), std::move(pivots));
}

CosetTransversal::CosetTransversal(int dim, const Subspace& U) {
    if (U.rank() > dim) throw std::domain_error("rank exceeds ambient dimension");
    const auto& piv = U.pivots();
    std::size_t pi = 0;
    for (int b = 0; b < dim; ++b) {
        if (pi < piv.size() && piv[pi] == b) {
            ++pi;
            continue;
        }
        free_pos_.push_back(b);
    }
    if (free_pos_.size() >= 64) throw std::domain_error("transversal too large to index");
}

bitvec CosetTransversal::rep(std::uint64_t index) const {
    bitvec w = 0;
    for (std::size_t j = 0; j < free_pos_.size(); ++j)
        if ((index >> j) & 1) w |= static_cast<bitvec>(1) << free_pos_[j];
    return w;
}

std::uint64_t CosetTransversal::index_of(bitvec canonical_rep) const {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < free_pos_.size(); ++j)
        if ((canonical_rep >> free_pos_[j]) & 1) idx |= 1ull << j;
    return idx;
}

}  // namespace hec
