#include "hec/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hec {

namespace {
const Field& common_field(const Poly& f, const Poly& g) {
    if (&f.field() != &g.field() && f.field().modulus() != g.field().modulus())
        throw std::domain_error("polynomials over different fields");
    return f.field();
}
}  // namespace

Poly::Poly(const Field& F, std::vector<fe> coeffs) : field_(&F), c_(std::move(coeffs)) {
    normalize();
}

Poly::Poly(const Field& F, std::initializer_list<fe> coeffs) : field_(&F), c_(coeffs) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (fe v : c_)
        if (!field_->valid(v)) throw std::domain_error("coefficient out of field range");
}

Poly Poly::monomial(const Field& F, fe c, int k) {
    if (c == 0) return Poly(F);
    std::vector<fe> v(static_cast<std::size_t>(k) + 1, 0u);
    v[static_cast<std::size_t>(k)] = c;
    return Poly(F, std::move(v));
}

Poly p_add(const Poly& f, const Poly& g) {
    const Field& F = common_field(f, g);
    std::vector<fe> c(std::max(f.coeffs().size(), g.coeffs().size()), 0u);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.coeff(static_cast<int>(i)) ^ g.coeff(static_cast<int>(i));
    return Poly(F, std::move(c));
}

Poly p_mul(const Poly& f, const Poly& g) {
    const Field& F = common_field(f, g);
    if (f.is_zero() || g.is_zero()) return Poly(F);
    std::vector<fe> c(f.coeffs().size() + g.coeffs().size() - 1, 0u);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const fe fi = f.coeffs()[i];
        if (fi == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] ^= F.mul(fi, g.coeffs()[j]);
    }
    return Poly(F, std::move(c));
}

Poly p_scale(const Poly& f, fe c) {
    if (c == 0) return Poly(f.field());
    std::vector<fe> v(f.coeffs());
    for (fe& x : v) x = f.field().mul(x, c);
    return Poly(f.field(), std::move(v));
}

Poly p_derivative(const Poly& f) {
    if (f.deg() < 1) return Poly(f.field());
    std::vector<fe> c(f.coeffs().size() - 1, 0u);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        if (i & 1) c[i - 1] = f.coeffs()[i];  // even exponents vanish in char 2
    return Poly(f.field(), std::move(c));
}

std::pair<Poly, Poly> p_divmod(const Poly& f, const Poly& g) {
    const Field& F = common_field(f, g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.deg() < g.deg()) return {Poly(F), f};
    const fe lead_inv = F.inv(g.lead());
    std::vector<fe> rem(f.coeffs());
    std::vector<fe> quot(static_cast<std::size_t>(f.deg() - g.deg()) + 1, 0u);
    for (int d = f.deg(); d >= g.deg(); --d) {
        const fe top = rem[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        const fe qc = F.mul(top, lead_inv);
        quot[static_cast<std::size_t>(d - g.deg())] = qc;
        for (int i = 0; i <= g.deg(); ++i)
            rem[static_cast<std::size_t>(d - g.deg() + i)] ^= F.mul(qc, g.coeff(i));
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly p_gcd(const Poly& f, const Poly& g) {
    const Field& F = common_field(f, g);
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = p_divmod(a, b).second;
        a = b;
        b = r;
    }
    return p_scale(a, F.inv(a.lead()));  // monic normalization
}

fe p_eval(const Poly& f, fe a, const Field& E) {
    const Field& F = f.field();
    const bool same = (&F == &E) || (F.modulus() == E.modulus());
    fe r = 0;
    for (int i = f.deg(); i >= 0; --i) {
        r = E.mul(r, a);
        r ^= same ? f.coeff(i) : embed(f.coeff(i), F, E);
    }
    return r;
}

Poly p_pow(const Poly& f, unsigned e) {
    Poly r = Poly::one(f.field());
    Poly base = f;
    while (e) {
        if (e & 1) r = p_mul(r, base);
        base = p_mul(base, base);
        e >>= 1;
    }
    return r;
}

Poly p_sqrt(const Poly& f) {
    if (f.is_zero()) return f;
    if (f.deg() % 2 != 0) throw std::domain_error("not a perfect square");
    std::vector<fe> c(static_cast<std::size_t>(f.deg() / 2) + 1, 0u);
    for (int i = 0; i <= f.deg(); ++i) {
        if (i % 2 == 0)
            c[static_cast<std::size_t>(i / 2)] = f.field().sqrt(f.coeff(i));
        else if (f.coeff(i) != 0)
            throw std::domain_error("not a perfect square");
    }
    return Poly(f.field(), std::move(c));
}

Poly p_radical(const Poly& f) {
    const Field& F = f.field();
    if (f.is_zero()) throw std::domain_error("radical of zero polynomial");
    if (f.deg() == 0) return Poly::one(F);
    Poly d = p_derivative(f);
    if (d.is_zero()) return p_radical(p_sqrt(f));  // f = w^2 in char 2
    // w collects the factors of odd multiplicity, each once.
    Poly u = p_gcd(f, d);
    Poly w = p_divmod(f, u).first;
    // Strip w's factors from u; the leftover is a perfect square.
    while (true) {
        Poly h = p_gcd(u, w);
        if (h.deg() == 0) break;
        u = p_divmod(u, h).first;
    }
    if (u.deg() == 0) return p_scale(w, F.inv(w.lead()));
    return p_mul(p_scale(w, F.inv(w.lead())), p_radical(p_sqrt(u)));
}

Poly p_reverse(const Poly& f, int m) {
    if (f.deg() > m) throw std::domain_error("reversal degree too small");
    std::vector<fe> c(static_cast<std::size_t>(m) + 1, 0u);
    for (int i = 0; i <= f.deg(); ++i) c[static_cast<std::size_t>(m - i)] = f.coeff(i);
    return Poly(f.field(), std::move(c));
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                        b.coeffs().begin(), b.coeffs().end());
}

std::string poly_str(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (int i = 0; i <= f.deg(); ++i) {
        if (i) os << ',';
        os << f.coeff(i);
    }
    return os.str();
}

Poly poly_parse(const Field& F, const std::string& s) {
    std::vector<fe> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad coefficient: " + tok);
        if (v >= F.q()) throw std::invalid_argument("coefficient out of range: " + tok);
        c.push_back(static_cast<fe>(v));
    }
    if (c.empty()) throw std::invalid_argument("empty polynomial encoding");
    return Poly(F, std::move(c));
}

}  // namespace hec
