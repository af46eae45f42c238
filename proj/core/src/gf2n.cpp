#include "hec/gf2n.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hec {

namespace {

// Conway polynomials over GF(2), bit-encoded (bit i = coeff of x^i).
// Regenerate with tools/gen_conway_table.py.
constexpr std::array<std::uint32_t, Field::kMaxDegree + 1> kConway = {
    0,       // unused
    3,       // n= 1: x + 1
    7,       // n= 2: x^2 + x + 1
    11,      // n= 3: x^3 + x + 1
    19,      // n= 4: x^4 + x + 1
    37,      // n= 5: x^5 + x^2 + 1
    91,      // n= 6: x^6 + x^4 + x^3 + x + 1
    131,     // n= 7: x^7 + x + 1
    285,     // n= 8: x^8 + x^4 + x^3 + x^2 + 1
    529,     // n= 9: x^9 + x^4 + 1
    1135,    // n=10: x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    2053,    // n=11: x^11 + x^2 + 1
    4331,    // n=12: x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    8219,    // n=13: x^13 + x^4 + x^3 + x + 1
    16553,   // n=14: x^14 + x^7 + x^5 + x^3 + 1
    32821,   // n=15: x^15 + x^5 + x^4 + x^2 + 1
    65581,   // n=16: x^16 + x^5 + x^3 + x^2 + 1
    131081,  // n=17: x^17 + x^3 + 1
    267267,  // n=18: x^18 + x^12 + x^10 + x + 1
};

// Carry-less multiply then reduce; works for any modulus of degree n <= 18.
fe clmul_reduce(fe a, fe b, std::uint32_t modulus, int n) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int d = 2 * n - 2; d >= n; --d)
        if ((acc >> d) & 1) acc ^= static_cast<std::uint64_t>(modulus) << (d - n);
    return static_cast<fe>(acc);
}

}  // namespace

Field::Field(int n, std::uint32_t modulus_bits, bool conway)
    : n_(n), modulus_(modulus_bits), q_(1u << n), conway_(conway) {
    if (n < 1 || n > kMaxDegree)
        throw std::domain_error("field degree out of range [1," +
                                std::to_string(kMaxDegree) + "]: " + std::to_string(n));
    if (modulus_ >> n != 1u)
        throw std::domain_error("modulus must have exact degree n");
    if (conway_ && n <= kLogTableMax) build_log_tables();
}

void Field::build_log_tables() {
    // alpha is primitive for Conway moduli, so its powers sweep the unit group.
    const std::uint32_t m = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(2 * m, 0);
    fe p = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        exp_[i] = p;
        exp_[i + m] = p;
        log_[p] = i;
        p = clmul_reduce(p, gen(), modulus_, n_);
    }
    if (p != 1) throw std::logic_error("modulus is not primitive");
}

const Field& Field::get(int n) {
    static std::array<std::unique_ptr<Field>, kMaxDegree + 1> cache;
    static std::mutex mu;
    if (n < 1 || n > kMaxDegree)
        throw std::domain_error("no Conway modulus for n=" + std::to_string(n));
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[n]) cache[n].reset(new Field(n, kConway[n], /*conway=*/true));
    return *cache[n];
}

std::uint32_t Field::conway_modulus(int n) {
    if (n < 1 || n > kMaxDegree)
        throw std::domain_error("no Conway modulus for n=" + std::to_string(n));
    return kConway[static_cast<std::size_t>(n)];
}

const Field& Field::intern(int n, std::uint32_t modulus_bits) {
    if (n >= 1 && n <= kMaxDegree && modulus_bits == kConway[static_cast<std::size_t>(n)])
        return get(n);
    static std::map<std::uint64_t, std::unique_ptr<Field>> cache;
    static std::mutex mu;
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | modulus_bits;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Field>(with_modulus(n, modulus_bits))).first;
    return *it->second;
}

Field Field::with_modulus(int n, std::uint32_t modulus_bits) {
    // Irreducibility check: x^(2^k) != x for k < n, x^(2^n) = x.
    Field F(n, modulus_bits, /*conway=*/false);
    fe x = n == 1 ? 1u : 2u;
    fe p = x;
    for (int k = 1; k <= n; ++k) {
        p = F.mul(p, p);
        if (p == x && k < n) throw std::domain_error("modulus is not irreducible");
    }
    if (p != x) throw std::domain_error("modulus is not irreducible");
    return F;
}

fe Field::mul(fe a, fe b) const {
    if (!log_.empty()) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    return clmul_reduce(a, b, modulus_, n_);
}

fe Field::pow(fe a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    e %= q_ - 1;
    if (!log_.empty())
        return exp_[static_cast<std::uint64_t>(log_[a]) * e % (q_ - 1)];
    fe r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

fe Field::inv(fe a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    if (!log_.empty()) return exp_[(q_ - 1) - log_[a]];
    return pow(a, q_ - 2);
}

int Field::trace(fe a) const {
    fe acc = 0, p = a;
    for (int i = 0; i < n_; ++i) {
        acc ^= p;
        p = mul(p, p);
    }
    // The sum is Frobenius-invariant, so it lands in GF(2).
    return static_cast<int>(acc);
}

fe Field::sqrt(fe a) const {
    // Frobenius is bijective in characteristic 2: sqrt(a) = a^(2^(n-1)).
    fe r = a;
    for (int i = 0; i < n_ - 1; ++i) r = mul(r, r);
    return r;
}

fe Field::root_m(fe a, std::uint32_t m) const {
    if (a == 0) return 0;
    std::uint64_t e = detail::inverse_mod(m, q_ - 1);
    return pow(a, e);
}

fe embed(fe a, const Field& F, const Field& E) {
    if (!F.conway() || !E.conway())
        throw std::domain_error("embedding requires Conway moduli on both fields");
    if (E.n() % F.n() != 0)
        throw std::domain_error("embedding requires divisible extension degrees");
    if (&F == &E || F.n() == E.n()) return a;
    const std::uint64_t exp = (static_cast<std::uint64_t>(E.q()) - 1) / (F.q() - 1);
    const fe beta = E.pow(E.gen(), exp);
    // a's bits are its polynomial expression in alpha_F; evaluate at beta.
    fe r = 0;
    for (int i = F.n() - 1; i >= 0; --i) {
        r = E.mul(r, beta);
        if ((a >> i) & 1) r ^= 1u;
    }
    return r;
}

bool genus_field_compatible(int g, const Field& F) {
    return detail::gcd_u64(static_cast<std::uint64_t>(g) + 1, F.q() - 1) == 1;
}

namespace detail {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t inverse_mod(std::uint64_t m, std::uint64_t r) {
    if (r == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::uint64_t rem = r, new_rem = m % r;
    while (new_rem) {
        std::uint64_t qt = rem / new_rem;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(qt) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = rem - qt * new_rem;
        rem = new_rem;
        new_rem = tmp_r;
    }
    if (rem != 1)
        throw std::domain_error("gcd(" + std::to_string(m) + ", " + std::to_string(r) +
                                ") = " + std::to_string(rem) + " != 1");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(r) : t);
}

}  // namespace detail
}  // namespace hec
