#include "hec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hec/census.hpp"
#include "hec/moebius.hpp"
#include "hec/weil.hpp"

namespace hec {

namespace {

// Union-find with path compression.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
};

std::uint64_t pack_poly64(const Poly& f, int max_coeffs, int n) {
    std::uint64_t w = 0;
    for (int i = 0; i < max_coeffs; ++i)
        w |= static_cast<std::uint64_t>(f.coeff(i)) << (i * n);
    return w;
}

void check_budget(int g, const Field& F) {
    const double pairs = std::pow(static_cast<double>(F.q()), 3 * g + 4);
    if (pairs > static_cast<double>(1ull << 24))
        throw std::domain_error("brute-force budget exceeded: q^(3g+4) = 2^" +
                                std::to_string(std::log2(pairs)));
}

}  // namespace

std::uint64_t BruteCensus::key(const Poly& v, const Poly& u) const {
    const int n = field_->n();
    // v has <= g+2 coefficients, u <= 2g+3; both fit one word at oracle sizes.
    return pack_poly64(v, g_ + 2, n) << 32 | pack_poly64(u, 2 * g_ + 3, n);
}

BruteCensus::BruteCensus(int g, const Field& F) : g_(g), field_(&F) {
    // The forced monic rescaling needs no gcd hypothesis, so the oracle
    // also covers parameters the fast path rejects.
    check_budget(g, F);
    if ((2 * g + 3) * F.n() > 32 || (g + 2) * F.n() > 32)
        throw std::domain_error("oracle packing exceeds 32 bits per polynomial");

    // All monic v of degree <= g+1 against all u of degree <= 2g+2.
    std::vector<Poly> vs;
    for (int d = 0; d <= g + 1; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<fe> c(static_cast<std::size_t>(d) + 1, 0u);
            std::uint64_t t = idx;
            for (int i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<fe>(t % F.q());
                t /= F.q();
            }
            c[static_cast<std::size_t>(d)] = 1;
            vs.emplace_back(F, std::move(c));
        }
    }
    std::uint64_t u_count = 1;
    for (int i = 0; i < 2 * g + 3; ++i) u_count *= F.q();
    for (const Poly& v : vs) {
        for (std::uint64_t idx = 0; idx < u_count; ++idx) {
            std::vector<fe> c(static_cast<std::size_t>(2 * g + 3), 0u);
            std::uint64_t t = idx;
            for (int i = 0; i < 2 * g + 3; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<fe>(t % F.q());
                t /= F.q();
            }
            Poly u(F, std::move(c));
            if (!is_hyperelliptic(v, u, g)) continue;
            index_.emplace(key(v, u), static_cast<int>(pairs_.size()));
            pairs_.emplace_back(v, u);
        }
    }

    // Close under the generator moves.
    UnionFind uf(pairs_.size());
    std::vector<ProjMatrix> gens = {{1, 1, 0, 1}, {0, 1, 1, 0}};
    if (F.q() > 2) gens.push_back({F.gen(), 0, 0, 1});
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const Poly& v = pairs_[i].first;
        const Poly& u = pairs_[i].second;
        // r-moves: u + r^2 + rv for the basis r = alpha^j x^k.
        for (int kdeg = 0; kdeg <= g + 1; ++kdeg) {
            fe aj = 1;
            for (int j = 0; j < F.n(); ++j) {
                const Poly r = Poly::monomial(F, aj, kdeg);
                const Poly u2 = p_add(u, p_add(p_mul(r, r), p_mul(r, v)));
                auto it = index_.find(key(v, u2));
                if (it == index_.end()) throw std::logic_error("r-move left the census");
                uf.unite(static_cast<int>(i), it->second);
                aj = F.mul(aj, F.gen());
            }
        }
        // Matrix moves with the rescaling that keeps v monic:
        // v -> lambda psi_{g+1}(A, v), u -> lambda^2 psi_{2g+2}(A, u).
        for (const ProjMatrix& A : gens) {
            const Poly w = psi_m(A, v, g + 1);
            const fe lambda = F.inv(w.lead());
            const Poly v2 = p_scale(w, lambda);
            const Poly u2 = p_scale(psi_m(A, u, 2 * g + 2), F.mul(lambda, lambda));
            auto it = index_.find(key(v2, u2));
            if (it == index_.end()) throw std::logic_error("matrix move left the census");
            uf.unite(static_cast<int>(i), it->second);
        }
    }

    class_id_.assign(pairs_.size(), -1);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const int root = uf.find(static_cast<int>(i));
        if (class_id_[static_cast<std::size_t>(root)] == -1)
            class_id_[static_cast<std::size_t>(root)] = num_classes_++;
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        class_id_[i] = class_id_[static_cast<std::size_t>(uf.find(static_cast<int>(i)))];
}

int BruteCensus::class_of(const Poly& v, const Poly& u) const {
    auto it = index_.find(key(v, u));
    return it == index_.end() ? -1 : class_id_[static_cast<std::size_t>(it->second)];
}

std::vector<CurveRecord> BruteCensus::representatives() const {
    std::vector<int> best(static_cast<std::size_t>(num_classes_), -1);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const auto cls = static_cast<std::size_t>(class_id_[i]);
        if (best[cls] == -1) {
            best[cls] = static_cast<int>(i);
            continue;
        }
        const auto& cur = pairs_[static_cast<std::size_t>(best[cls])];
        const auto& cand = pairs_[i];
        const bool smaller = cand.first == cur.first ? poly_less(cand.second, cur.second)
                                                     : poly_less(cand.first, cur.first);
        if (smaller) best[cls] = static_cast<int>(i);
    }
    std::vector<CurveRecord> out;
    out.reserve(static_cast<std::size_t>(num_classes_));
    for (int idx : best)
        out.push_back(CurveRecord{g_, field_, pairs_[static_cast<std::size_t>(idx)].first,
                                  pairs_[static_cast<std::size_t>(idx)].second, {}, {}, -1});
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

std::vector<CurveRecord> brute_enumerate(int g, const Field& F) {
    return BruteCensus(g, F).representatives();
}

ClassCountTable brute_w3_scan(std::int64_t q) {
    if (q < 2 || q > 8 || (q & (q - 1)) != 0)
        throw std::domain_error("brute_w3_scan supports q in {2, 4, 8}");
    ClassCountTable table;
    table.q = q;
    /* Box limits: the root bound |e_k| <= C(6,k) q^(k/2) confines every
       Weil triple to |s| <= 6 sqrt(q), |t| <= 15q, |u| <= 20 q^(3/2);
       the u range is widened to the coarse linear radius so the scan
       also covers everything the region predicate could accept. */
    const double sq = std::sqrt(static_cast<double>(q));
    const auto s_max = static_cast<std::int64_t>(std::floor(6 * sq));
    const auto u_root_bound = static_cast<std::int64_t>(std::ceil(20 * q * sq));
    for (std::int64_t s = -s_max; s <= s_max; ++s) {
        for (std::int64_t t = -15 * q; t <= 15 * q; ++t) {
            std::int64_t u_box = u_root_bound;
            if (t + q >= 0)
                u_box = std::max(u_box, 2 * q * std::abs(s) +
                                            static_cast<std::int64_t>(std::ceil(
                                                2 * sq * static_cast<double>(t + q))) +
                                            1);
            for (std::int64_t u = -u_box; u <= u_box; ++u) {
                if (!is_weil_poly(WeilPoly{3, q, {s, t, u}})) continue;
                const std::size_t idx =
                    static_cast<std::size_t>(((s & 1) << 2) | ((t & 1) << 1) | (u & 1));
                ++table.counts[idx];
                ++table.total;
            }
        }
    }
    return table;
}

}  // namespace hec
