#include "hec/zeta.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace hec {

namespace {

const Field& extension_of(const Field& F, int k) {
    if (k == 1) return F;
    if (!F.conway())
        throw std::domain_error("extension counts need a Conway base field");
    const int nk = F.n() * k;
    if (nk > Field::kMaxDegree)
        throw std::domain_error("extension degree " + std::to_string(nk) +
                                " exceeds the supported field table");
    return Field::get(nk);
}

Poly embed_poly(const Poly& f, const Field& E) {
    if (&f.field() == &E) return f;
    std::vector<fe> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = embed(f.coeffs()[i], f.field(), E);
    return Poly(E, std::move(c));
}

}  // namespace

std::int64_t count_points(const Poly& v, const Poly& u, int g, int k) {
    const Field& F = v.field();
    const Field& E = extension_of(F, k);
    const Poly ve = embed_poly(v, E);
    const Poly ue = embed_poly(u, E);
    std::int64_t total = 0;
    for (fe x = 0; x < E.q(); ++x) {
        const fe vx = p_eval(ve, x, E);
        if (vx == 0) {
            ++total;  // unique y = sqrt(u(x))
        } else {
            const fe ux = p_eval(ue, x, E);
            const fe w = E.mul(ux, E.inv(E.mul(vx, vx)));
            if (E.trace(w) == 0) total += 2;
        }
    }
    // Chart at infinity: s^2 + v*(0) s = u*(0) with v*(0), u*(0) the
    // top formal coefficients of v and u.
    const fe vinf = embed(v.coeff(g + 1), F, E);
    const fe uinf = embed(u.coeff(2 * g + 2), F, E);
    if (vinf == 0) {
        ++total;
    } else {
        const fe w = E.mul(uinf, E.inv(E.mul(vinf, vinf)));
        if (E.trace(w) == 0) total += 2;
    }
    return total;
}

std::int64_t count_points(const CurveRecord& c, int k) {
    return count_points(c.v, c.u, c.g, k);
}

std::int64_t count_weierstrass(const Poly& v, int g, int k) {
    const Field& E = extension_of(v.field(), k);
    const Poly ve = embed_poly(v, E);
    std::int64_t total = v.deg() <= g ? 1 : 0;  // ramified infinite point
    if (v.deg() >= 1)
        for (fe x = 0; x < E.q(); ++x)
            if (p_eval(ve, x, E) == 0) ++total;
    return total;
}

std::int64_t count_weierstrass(const CurveRecord& c, int k) {
    return count_weierstrass(c.v, c.g, k);
}

int geometric_weierstrass(const Poly& v, int g) {
    const int roots = v.deg() >= 1 ? p_radical(v).deg() : 0;
    return roots + (v.deg() <= g ? 1 : 0);
}

std::vector<std::int64_t> weil_from_counts(const CountVector& N, int g) {
    if (N.K() < g) throw std::domain_error("need at least g point counts");
    const bigint q = N.field->q();
    std::vector<bigint> p(static_cast<std::size_t>(g) + 1, bigint(0));
    bigint qk = 1;
    for (int k = 1; k <= g; ++k) {
        qk *= q;
        p[static_cast<std::size_t>(k)] = qk + 1 - N.at(k);
    }
    const auto e = elementary_from_power_sums(p, g);
    std::vector<std::int64_t> a(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) {
        bigint ai = e[static_cast<std::size_t>(i)];
        if (i % 2 == 1) ai = -ai;
        a[static_cast<std::size_t>(i - 1)] = static_cast<std::int64_t>(ai);
    }
    return a;
}

std::vector<bigint> counts_from_weil(const WeilPoly& w, int K) {
    std::vector<bigint> e(static_cast<std::size_t>(2 * w.g) + 1, bigint(0));
    {
        const auto c = expand_coeffs(w);
        for (int i = 1; i <= 2 * w.g; ++i) {
            e[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
            if (i % 2 == 1) e[static_cast<std::size_t>(i)] = -e[static_cast<std::size_t>(i)];
        }
    }
    const auto p = power_sums_from_elementary(e, 2 * w.g, K);
    std::vector<bigint> N(static_cast<std::size_t>(K));
    bigint qk = 1;
    for (int k = 1; k <= K; ++k) {
        qk *= w.q;
        N[static_cast<std::size_t>(k - 1)] = qk + 1 - p[static_cast<std::size_t>(k)];
    }
    return N;
}

void annotate_records(std::vector<CurveRecord>& records, int K, int jobs) {
    auto work = [&](CurveRecord& c) {
        const int kk = std::max(K, c.g);
        c.counts.clear();
        c.counts.reserve(static_cast<std::size_t>(kk));
        for (int k = 1; k <= kk; ++k) c.counts.push_back(count_points(c, k));
        CountVector N{c.field, c.counts};
        c.weil = weil_from_counts(N, c.g);
        c.two_rank = two_rank(WeilPoly{c.g, c.field->q(), c.weil});
    };
    if (jobs <= 1 || records.size() < 2) {
        for (auto& c : records) work(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto runner = [&] {
        for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
            work(records[i]);
    };
    std::vector<std::thread> pool;
    const int t = std::min<std::size_t>(static_cast<std::size_t>(jobs), records.size());
    pool.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) pool.emplace_back(runner);
    for (auto& th : pool) th.join();
}

}  // namespace hec
