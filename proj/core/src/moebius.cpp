#include "hec/moebius.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hec {

fe pm_det(const ProjMatrix& A, const Field& F) {
    return F.mul(A.a, A.d) ^ F.mul(A.b, A.c);
}

ProjMatrix pm_mul(const ProjMatrix& A, const ProjMatrix& B, const Field& F) {
    return {static_cast<fe>(F.mul(A.a, B.a) ^ F.mul(A.b, B.c)),
            static_cast<fe>(F.mul(A.a, B.b) ^ F.mul(A.b, B.d)),
            static_cast<fe>(F.mul(A.c, B.a) ^ F.mul(A.d, B.c)),
            static_cast<fe>(F.mul(A.c, B.b) ^ F.mul(A.d, B.d))};
}

ProjMatrix pm_scale(const ProjMatrix& A, fe lambda, const Field& F) {
    return {F.mul(A.a, lambda), F.mul(A.b, lambda), F.mul(A.c, lambda), F.mul(A.d, lambda)};
}

ProjMatrix pm_canonical(const ProjMatrix& A, const Field& F) {
    fe lead = A.a ? A.a : A.b ? A.b : A.c ? A.c : A.d;
    if (lead == 0) throw std::domain_error("zero matrix has no class");
    return pm_scale(A, F.inv(lead), F);
}

std::string pm_str(const ProjMatrix& A) {
    std::ostringstream os;
    os << A.a << ',' << A.b << ',' << A.c << ',' << A.d;
    return os.str();
}

std::vector<ProjMatrix> pgl2_classes(const Field& F) {
    const std::uint64_t q = F.q();
    std::vector<ProjMatrix> out;
    out.reserve(q * q * q - q);
    // a = 1: b, c free, d != bc.
    for (fe b = 0; b < q; ++b)
        for (fe c = 0; c < q; ++c) {
            const fe bc = F.mul(b, c);
            for (fe d = 0; d < q; ++d)
                if (d != bc) out.push_back({1, b, c, d});
        }
    // a = 0, b = 1: c != 0, d free.
    for (fe c = 1; c < q; ++c)
        for (fe d = 0; d < q; ++d) out.push_back({0, 1, c, d});
    return out;
}

Poly psi_m(const ProjMatrix& A, const Poly& f, int m) {
    const Field& F = f.field();
    if (f.deg() > m) throw std::domain_error("psi_m requires deg f <= m");
    if (pm_det(A, F) == 0) throw std::domain_error("singular matrix");
    const Poly num(F, {A.b, A.a});  // ax + b
    const Poly den(F, {A.d, A.c});  // cx + d
    // Powers num^i and den^(m-i), accumulated in one pass.
    std::vector<Poly> den_pow(static_cast<std::size_t>(m) + 1, Poly::one(F));
    for (int i = 1; i <= m; ++i)
        den_pow[static_cast<std::size_t>(i)] = p_mul(den_pow[static_cast<std::size_t>(i - 1)], den);
    Poly acc(F);
    Poly num_pow = Poly::one(F);
    for (int i = 0; i <= f.deg(); ++i) {
        if (f.coeff(i) != 0)
            acc = p_add(acc, p_scale(p_mul(num_pow, den_pow[static_cast<std::size_t>(m - i)]),
                                     f.coeff(i)));
        if (i < f.deg()) num_pow = p_mul(num_pow, num);
    }
    return acc;
}

void require_genus_field(int g, const Field& F) {
    if (!genus_field_compatible(g, F)) {
        std::ostringstream os;
        os << "gcd(g+1, 2^n - 1) = gcd(" << g + 1 << ", " << F.q() - 1 << ") = "
           << detail::gcd_u64(static_cast<std::uint64_t>(g) + 1, F.q() - 1) << " != 1";
        throw std::domain_error(os.str());
    }
}

Poly act_monic(const ProjMatrix& A, const Poly& f, int g) {
    const Field& F = f.field();
    require_genus_field(g, F);
    if (!f.is_monic() || f.deg() > g + 1)
        throw std::domain_error("act_monic requires a monic polynomial of degree <= g+1");
    Poly w = psi_m(A, f, g + 1);
    // Rescaling by lead^{-1} corresponds to the unique matrix scaling by
    // the (g+1)-th root of lead^{-1}, which exists by the gcd condition.
    return p_scale(w, F.inv(w.lead()));
}

namespace {

// Generators of PGL_2: shear, diagonal by the group generator, inversion.
std::vector<ProjMatrix> pgl2_generators(const Field& F) {
    std::vector<ProjMatrix> gens = {{1, 1, 0, 1}, {0, 1, 1, 0}};
    if (F.q() > 2) gens.push_back({F.gen(), 0, 0, 1});
    return gens;
}

struct PolyOrder {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

}  // namespace

std::vector<Poly> monic_orbit(const Poly& f, int g) {
    const Field& F = f.field();
    const auto gens = pgl2_generators(F);
    std::map<Poly, bool, PolyOrder> seen;
    std::deque<Poly> queue{f};
    seen.emplace(f, true);
    while (!queue.empty()) {
        Poly cur = queue.front();
        queue.pop_front();
        for (const ProjMatrix& A : gens) {
            Poly img = act_monic(A, cur, g);
            if (seen.emplace(img, true).second) queue.push_back(img);
        }
    }
    std::vector<Poly> orbit;
    orbit.reserve(seen.size());
    for (auto& kv : seen) orbit.push_back(kv.first);
    return orbit;  // sorted by the canonical order
}

std::vector<Poly> monic_orbit_reps(int g, const Field& F) {
    require_genus_field(g, F);
    // Enumerate X, all monic polynomials of degree <= g+1, in canonical
    // order; breadth-first closure assigns each orbit its minimal element.
    std::vector<Poly> all;
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
            all.emplace_back(F, std::move(c));
        }
    }
    std::sort(all.begin(), all.end(), poly_less);

    std::map<Poly, bool, PolyOrder> visited;
    std::vector<Poly> reps;
    std::size_t covered = 0;
    for (const Poly& f : all) {
        if (visited.count(f)) continue;
        reps.push_back(f);  // minimal in its orbit: everything smaller is visited
        auto orbit = monic_orbit(f, g);
        for (const Poly& p : orbit) visited.emplace(p, true);
        covered += orbit.size();
    }
    if (covered != all.size())
        throw std::logic_error("orbit closure does not partition X");
    return reps;
}

std::vector<ProjMatrix> stabilizer(const Poly& v, int g, const Field& F) {
    require_genus_field(g, F);
    if (!v.is_monic() || v.deg() > g + 1)
        throw std::domain_error("stabilizer requires a monic polynomial of degree <= g+1");
    std::vector<ProjMatrix> stab;
    for (const ProjMatrix& A : pgl2_classes(F)) {
        Poly w = psi_m(A, v, g + 1);
        // Class fixes v iff psi(A, v) is proportional to v.
        const fe lead = w.lead();
        if (p_scale(w, F.inv(lead)) != v) continue;
        // Rescale so the representative fixes v exactly:
        // psi(mu A, v) = mu^(g+1) psi(A, v), so mu^(g+1) = lead^{-1}.
        const fe mu = F.root_m(F.inv(lead), static_cast<std::uint32_t>(g) + 1);
        stab.push_back(pm_scale(A, mu, F));
    }
    return stab;
}

}  // namespace hec
