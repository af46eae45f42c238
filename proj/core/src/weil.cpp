#include "hec/weil.hpp"

#include <algorithm>
#include <stdexcept>

namespace hec {

int two_rank(const WeilPoly& w) {
    int r = 0;
    for (int i = 1; i <= w.g; ++i)
        if (w.a[static_cast<std::size_t>(i - 1)] % 2 != 0) r = i;
    return r;
}

int two_rank(const ResiduePattern& p) {
    int r = 0;
    for (int i = 1; i <= p.g; ++i)
        if (p.at(i)) r = i;
    return r;
}

ResiduePattern pattern_of(const WeilPoly& w) {
    ResiduePattern p{w.g, 0};
    for (int i = 1; i <= w.g; ++i)
        if (w.a[static_cast<std::size_t>(i - 1)] % 2 != 0) p.bits |= 1u << (i - 1);
    return p;
}

std::string pattern_str(const ResiduePattern& p) {
    std::string s(static_cast<std::size_t>(p.g), '0');
    for (int i = 1; i <= p.g; ++i)
        if (p.at(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

ResiduePattern pattern_parse(const std::string& s) {
    ResiduePattern p{static_cast<int>(s.size()), 0};
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            p.bits |= 1u << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bad residue pattern: " + s);
    }
    return p;
}

bool pattern_less(const ResiduePattern& a, const ResiduePattern& b) {
    if (a.g != b.g) return a.g < b.g;
    return pattern_str(a) < pattern_str(b);
}

std::vector<bigint> expand_coeffs(const WeilPoly& w) {
    const int g = w.g;
    std::vector<bigint> c(static_cast<std::size_t>(2 * g) + 1, bigint(0));
    c[0] = 1;
    for (int i = 1; i <= g; ++i) c[static_cast<std::size_t>(i)] = w.a[static_cast<std::size_t>(i - 1)];
    bigint qp = 1;
    for (int i = g + 1; i <= 2 * g; ++i) {
        qp *= w.q;
        // a_{2g-i} weighted by q^(i-g), with a_0 = 1.
        const bigint base = (2 * g - i == 0) ? bigint(1) : bigint(w.a[static_cast<std::size_t>(2 * g - i - 1)]);
        c[static_cast<std::size_t>(i)] = base * qp;
    }
    return c;
}

namespace {

// e_1..e_2g of the Frobenius eigenvalues, from the expanded coefficients.
std::vector<bigint> weil_elementary(const WeilPoly& w) {
    const auto c = expand_coeffs(w);
    std::vector<bigint> e(static_cast<std::size_t>(2 * w.g) + 1, bigint(0));
    for (int i = 1; i <= 2 * w.g; ++i) {
        e[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
        if (i % 2 == 1) e[static_cast<std::size_t>(i)] = -e[static_cast<std::size_t>(i)];
    }
    return e;
}

bigint binom(int n, int k) {
    bigint r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace

std::vector<bigint> real_weil_coeffs(const WeilPoly& w) {
    const int g = w.g;
    const auto e = weil_elementary(w);
    const auto p = power_sums_from_elementary(e, 2 * g, g);
    // Power sums t_k of x_i = alpha_i + q/alpha_i, one per conjugate
    // pair: expanding (alpha + q/alpha)^k over all 2g roots counts each
    // x_i twice, and the root set's stability under alpha -> q/alpha
    // folds the j and k-j binomial terms together, leaving
    //   t_k = sum_{j < k/2} C(k,j) q^j p_{k-2j}  (+ C(k,k/2) q^(k/2) g
    //   for even k).
    std::vector<bigint> t(static_cast<std::size_t>(g) + 1, bigint(0));
    for (int k = 1; k <= g; ++k) {
        bigint acc = 0;
        bigint qj = 1;
        for (int j = 0; 2 * j < k; ++j) {
            acc += binom(k, j) * qj * p[static_cast<std::size_t>(k - 2 * j)];
            qj *= w.q;
        }
        if (k % 2 == 0) acc += binom(k, k / 2) * qj * g;
        t[static_cast<std::size_t>(k)] = acc;
    }
    auto E = elementary_from_power_sums(t, g);
    std::vector<bigint> b(static_cast<std::size_t>(g) + 1, bigint(0));
    b[0] = 1;
    for (int i = 1; i <= g; ++i) {
        b[static_cast<std::size_t>(i)] = E[static_cast<std::size_t>(i)];
        if (i % 2 == 1) b[static_cast<std::size_t>(i)] = -b[static_cast<std::size_t>(i)];
    }
    return b;  // h(y) = y^g + b_1 y^(g-1) + ... + b_g
}

/* ---- exact Sturm machinery on integer polynomials ----
   Representation: ascending coefficients, c[i] = coeff of y^i, trailing
   entry nonzero. Chains use pseudo-remainders with positive (squared)
   multipliers, so sign variation counts match the rational chain. */
namespace {

using ipoly = std::vector<bigint>;

void itrim(ipoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int ideg(const ipoly& f) { return static_cast<int>(f.size()) - 1; }

bigint ieval(const ipoly& f, const bigint& x) {
    bigint r = 0;
    for (int i = ideg(f); i >= 0; --i) r = r * x + f[static_cast<std::size_t>(i)];
    return r;
}

ipoly iderivative(const ipoly& f) {
    if (f.size() <= 1) return {};
    ipoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<int>(i);
    return d;
}

void istrip_content(ipoly& f) {
    bigint g = 0;
    for (const auto& c : f) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& c : f) c /= g;
}

// Remainder of lc(g)^(2m) * f by g, m minimal with 2m >= deg f - deg g + 1.
// The multiplier is a positive square, so the sign agrees with the
// rational remainder.
ipoly ipseudo_rem(ipoly f, const ipoly& g) {
    const bigint lc = g.back();
    const int delta = ideg(f) - ideg(g);
    int mult_pow = delta + 1;
    if (mult_pow % 2 == 1) ++mult_pow;
    bigint mult = 1;
    for (int i = 0; i < mult_pow; ++i) mult *= lc;
    for (auto& c : f) c *= mult;
    for (int d = ideg(f); d >= ideg(g); --d) {
        const bigint top = f[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        if (top % lc != 0) throw std::logic_error("pseudo-division not exact");
        const bigint qc = top / lc;
        for (int i = 0; i <= ideg(g); ++i)
            f[static_cast<std::size_t>(d - ideg(g) + i)] -= qc * g[static_cast<std::size_t>(i)];
    }
    itrim(f);
    return f;
}

ipoly igcd(ipoly a, ipoly b) {
    itrim(a);
    itrim(b);
    while (!b.empty()) {
        ipoly r = ipseudo_rem(a, b);
        istrip_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    istrip_content(a);
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

ipoly idivide_exact(const ipoly& f, const ipoly& g) {
    // f = q*g exactly over the rationals with integer result expected
    // after content stripping; divide with rational bookkeeping.
    ipoly rem = f;
    ipoly quot(static_cast<std::size_t>(std::max(0, ideg(f) - ideg(g))) + 1, bigint(0));
    std::vector<bigrat> rrem(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) rrem[i] = rem[i];
    std::vector<bigrat> rquot(quot.size());
    const bigrat lc = bigrat(g.back());
    for (int d = ideg(f); d >= ideg(g); --d) {
        const bigrat qc = rrem[static_cast<std::size_t>(d)] / lc;
        rquot[static_cast<std::size_t>(d - ideg(g))] = qc;
        for (int i = 0; i <= ideg(g); ++i)
            rrem[static_cast<std::size_t>(d - ideg(g) + i)] -= qc * bigrat(g[static_cast<std::size_t>(i)]);
    }
    for (const auto& r : rrem)
        if (r != 0) throw std::logic_error("exact division has a remainder");
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (boost::multiprecision::denominator(rquot[i]) != 1)
            throw std::logic_error("exact division is not integral");
        quot[i] = boost::multiprecision::numerator(rquot[i]);
    }
    itrim(quot);
    return quot;
}

ipoly isquarefree(const ipoly& f) {
    if (ideg(f) <= 1) return f;
    ipoly g = igcd(f, iderivative(f));
    if (ideg(g) == 0) return f;
    ipoly sf = idivide_exact(f, g);
    istrip_content(sf);
    return sf;
}

std::vector<ipoly> sturm_chain(ipoly f) {
    std::vector<ipoly> chain;
    itrim(f);
    if (f.empty()) return chain;
    chain.push_back(f);
    ipoly d = iderivative(f);
    itrim(d);
    if (d.empty()) return chain;
    chain.push_back(d);
    while (true) {
        ipoly r = ipseudo_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        istrip_content(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

int sgn(const bigint& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<ipoly>& chain, const bigint& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sgn(ieval(p, x)));
    return variations(s);
}

int variations_at_inf(const std::vector<ipoly>& chain, bool plus) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) {
        int v = sgn(p.back());
        if (!plus && ideg(p) % 2 == 1) v = -v;
        s.push_back(v);
    }
    return variations(s);
}

}  // namespace

bool is_weil_poly(const WeilPoly& w) {
    if (w.q < 2 || static_cast<int>(w.a.size()) != w.g || w.g < 1) return false;
    const auto b = real_weil_coeffs(w);
    ipoly h(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) h[i] = b[b.size() - 1 - i];  // ascending
    itrim(h);
    const ipoly hs = isquarefree(h);
    const auto chain = sturm_chain(hs);
    const int total = variations_at_inf(chain, false) - variations_at_inf(chain, true);
    if (total != ideg(hs)) return false;  // h must be totally real

    // H(y) = prod (y - x_i^2), up to a constant: the even part of
    // hs(x) hs(-x).
    ipoly prod(static_cast<std::size_t>(2 * ideg(hs)) + 1, bigint(0));
    for (int i = 0; i <= ideg(hs); ++i)
        for (int j = 0; j <= ideg(hs); ++j) {
            bigint term = hs[static_cast<std::size_t>(i)] * hs[static_cast<std::size_t>(j)];
            if (j % 2 == 1) term = -term;
            prod[static_cast<std::size_t>(i + j)] += term;
        }
    ipoly H(static_cast<std::size_t>(ideg(hs)) + 1, bigint(0));
    for (int i = 0; i <= ideg(hs); ++i) H[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(2 * i)];
    itrim(H);
    ipoly Hs = isquarefree(H);

    // Roots exactly at 0 or 4q are valid (alpha = +-i sqrt(q) and the
    // supersingular boundary alpha = +-sqrt(q)); divide them out so the
    // Sturm counts never evaluate the chain at a root.
    const bigint lo = 0, hi = 4 * bigint(w.q);
    for (const bigint& r : {lo, hi})
        if (ieval(Hs, r) == 0) {
            ipoly lin{-r, 1};
            Hs = idivide_exact(Hs, lin);
        }
    if (ideg(Hs) <= 0) return true;
    const auto hchain = sturm_chain(Hs);
    if (variations_at_inf(hchain, false) - variations_at(hchain, lo) != 0)
        return false;  // no roots below 0
    if (variations_at(hchain, hi) - variations_at_inf(hchain, true) != 0)
        return false;  // no roots above 4q
    return true;
}

bool in_w3_region(std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t q) {
    const bigint S = s, T = t, U = u, Q = q;
    // |s| <= 6 sqrt(q)
    if (S * S > 36 * Q) return false;
    // 4 sqrt(q)|s| - 9q <= t  <=>  t + 9q >= 0 and (t+9q)^2 >= 16 q s^2
    if (T + 9 * Q < 0) return false;
    if ((T + 9 * Q) * (T + 9 * Q) < 16 * Q * S * S) return false;
    // t <= s^2/3 + 3q
    if (3 * T > S * S + 9 * Q) return false;
    // |27u + 2s^3 - 9st - 27qs| <= 2 (s^2 - 3t + 9q)^(3/2)
    const bigint A = 27 * U + 2 * S * S * S - 9 * S * T - 27 * Q * S;
    const bigint D = S * S - 3 * T + 9 * Q;  // >= 0 by the bound above
    if (A * A > 4 * D * D * D) return false;
    // |u + 2qs| <= 2 sqrt(q) (t + q)  <=>  t + q >= 0 and squared form
    if (T + Q < 0) return false;
    if ((U + 2 * Q * S) * (U + 2 * Q * S) > 4 * Q * (T + Q) * (T + Q)) return false;
    return true;
}

}  // namespace hec
