#include "hec/census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace hec {

bool record_less(const CurveRecord& a, const CurveRecord& b) {
    if (a.v == b.v) return poly_less(a.u, b.u);
    return poly_less(a.v, b.v);
}

bool is_hyperelliptic(const Poly& v, const Poly& u, int g) {
    const Field& F = v.field();
    if (!v.is_monic()) throw std::domain_error("v must be monic");
    const int d = std::max(2 * v.deg(), u.deg());
    if (d < 2 * g + 1 || d > 2 * g + 2) return false;
    // Smoothness: gcd(v, u'^2 + v'^2 u) = 1 (gcd(v, 0) = v, so a zero
    // witness passes only for v = 1).
    const Poly du = p_derivative(u);
    const Poly dv = p_derivative(v);
    const Poly witness = p_add(p_mul(du, du), p_mul(p_mul(dv, dv), u));
    if (p_gcd(v, witness).deg() != 0) return false;
    // Branch behaviour at infinity when v has low degree.
    if (v.deg() < g + 1) {
        const fe a21 = u.coeff(2 * g + 1);
        const fe a22 = u.coeff(2 * g + 2);
        const fe bg = v.coeff(g);
        if (F.mul(a21, a21) == F.mul(a22, F.mul(bg, bg))) return false;
    }
    return true;
}

namespace {

/* The map w -> reduce(pack(psi_{2g+2}(A, unpack(w)))) is GF(2)-linear
   on V, so each stabilizer element becomes a bit-matrix whose rows are
   pre-reduced images of the coordinate basis. Applying it is a handful
   of XORs per set bit. */
struct StabMatrix {
    std::vector<bitvec> col;  // image of basis vector e_k, already reduced

    bitvec apply(bitvec w) const {
        bitvec r = 0;
        int k = 0;
        while (w) {
            if (w & 1) r ^= col[static_cast<std::size_t>(k)];
            w >>= 1;
            ++k;
        }
        return r;
    }
};

StabMatrix stab_matrix(const ProjMatrix& A, const Subspace& U, int g, const Field& F) {
    const int n = F.n();
    const int dim = bv_dim(g, n);
    StabMatrix M;
    M.col.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i <= 2 * g + 2; ++i) {
        // psi is F_q-linear: transform x^i once, then scale by alpha^j.
        const Poly img = psi_m(A, Poly::monomial(F, 1, i), 2 * g + 2);
        fe scale = 1;
        for (int j = 0; j < n; ++j) {
            M.col[static_cast<std::size_t>(i * n + j)] =
                U.reduce(bv_pack(p_scale(img, scale), g));
            scale = F.mul(scale, F.gen());
        }
    }
    return M;
}

}  // namespace

std::vector<CurveRecord> enumerate_for_v(const Poly& v, int g, const Field& F,
                                         VStats* stats) {
    require_genus_field(g, F);
    if (!v.is_monic() || v.deg() > g + 1)
        throw std::domain_error("enumerate_for_v requires monic v of degree <= g+1");
    const int n = F.n();
    const int dim = bv_dim(g, n);

    // U_v = span{alpha^j x^i v + alpha^(2j) x^(2i)} = {r v + r^2}.
    std::vector<bitvec> gens;
    gens.reserve(static_cast<std::size_t>(g + 2) * n);
    for (int i = 0; i <= g + 1; ++i) {
        fe aj = 1;
        for (int j = 0; j < n; ++j) {
            const Poly r = Poly::monomial(F, aj, i);
            gens.push_back(bv_pack(p_add(p_mul(r, v), p_mul(r, r)), g));
            aj = F.mul(aj, F.gen());
        }
    }
    const Subspace U = subspace_span(dim, gens);
    const CosetTransversal T(dim, U);

    std::vector<StabMatrix> stab;
    for (const ProjMatrix& A : stabilizer(v, g, F)) stab.push_back(stab_matrix(A, U, g, F));

    if (stats) {
        stats->transversal_size = T.size();
        stats->dim_u = U.rank();
    }

    const int vdeg2 = 2 * v.deg();
    std::vector<bool> visited(T.size(), false);
    std::vector<CurveRecord> out;
    std::vector<std::uint64_t> orbit;
    for (std::uint64_t idx = 0; idx < T.size(); ++idx) {
        if (visited[idx]) continue;
        const bitvec w0 = T.rep(idx);

        // Orbit of the coset under the stabilizer; single pass, since
        // the stabilizer acts on V/U as a group.
        orbit.clear();
        for (const StabMatrix& M : stab) {
            const std::uint64_t j = T.index_of(M.apply(w0));
            if (!visited[j]) {
                visited[j] = true;
                orbit.push_back(j);
            }
        }

        const bool window_ok = [&] {
            const int d = std::max(vdeg2, bv_poly_deg(w0, n));
            return d >= 2 * g + 1 && d <= 2 * g + 2;
        }();
        if (!window_ok) {
            if (stats) stats->discarded_cosets += orbit.size();
            continue;
        }
        if (stats) {
            stats->kept_cosets += orbit.size();
            ++stats->candidate_classes;
        }

        // Keep the minimal member of the orbit that satisfies the
        // degree window; the validity check is coset-invariant, so it
        // runs once on the kept member.
        bitvec best = 0;
        bool have = false;
        for (std::uint64_t j : orbit) {
            const bitvec wj = T.rep(j);
            const int d = std::max(vdeg2, bv_poly_deg(wj, n));
            if (d < 2 * g + 1 || d > 2 * g + 2) continue;
            const Poly cand = bv_unpack(wj, g, F);
            if (!have || poly_less(cand, bv_unpack(best, g, F))) {
                best = wj;
                have = true;
            }
        }
        const Poly u = bv_unpack(best, g, F);
        if (is_hyperelliptic(v, u, g)) {
            out.push_back(CurveRecord{g, &F, v, u, {}, {}, -1});
            if (stats) ++stats->curves;
        }
    }
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

std::vector<CurveRecord> enumerate_genus(int g, const Field& F, int jobs) {
    require_genus_field(g, F);
    const std::vector<Poly> reps = monic_orbit_reps(g, F);
    std::vector<std::vector<CurveRecord>> parts(reps.size());
    if (jobs <= 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < reps.size(); ++i)
            parts[i] = enumerate_for_v(reps[i], g, F);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < reps.size(); i = next.fetch_add(1))
                parts[i] = enumerate_for_v(reps[i], g, F);
        };
        std::vector<std::thread> pool;
        const int t = std::min<int>(jobs, static_cast<int>(reps.size()));
        pool.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<CurveRecord> out;
    for (auto& part : parts)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

}  // namespace hec
