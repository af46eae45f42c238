#pragma once

#include <cstdint>
#include <vector>

namespace hec {

/// Element of GF(2^n), bit i = coefficient of alpha^i. Addition is XOR.
using fe = std::uint32_t;

/* A binary field GF(2^n) for 1 <= n <= 18, defined by an irreducible
   modulus over GF(2) (bit i of modulus() = coefficient of x^i). The
   default modulus for each n is the Conway polynomial, which makes
   every output bit-exact reproducible and keeps the fields of a tower
   norm-compatible, so elements embed consistently into extensions.

   Fields obtained from Field::get(n) are interned and immutable; all
   operations are safe to call from concurrent workers. */
class Field {
public:
    static constexpr int kMaxDegree = 18;

    /// Interned field with the Conway modulus. Thread-safe.
    static const Field& get(int n);

    /// Field with an explicit modulus (must be irreducible of degree n).
    /// Embeddings are disabled for such fields and the multiplication
    /// tables are not built (alpha need not generate the unit group).
    static Field with_modulus(int n, std::uint32_t modulus_bits);

    /// Interned variant of with_modulus; the Conway modulus for n is
    /// routed to get(n). Thread-safe, pointers stay valid for the
    /// process lifetime.
    static const Field& intern(int n, std::uint32_t modulus_bits);

    /// The Conway modulus for n (bit-encoded).
    static std::uint32_t conway_modulus(int n);

    int n() const { return n_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }
    bool conway() const { return conway_; }

    /// alpha, the residue class of x (for n = 1 this is 1).
    fe gen() const { return n_ == 1 ? 1u : 2u; }

    fe mul(fe a, fe b) const;
    fe pow(fe a, std::uint64_t e) const;
    fe inv(fe a) const;                 // throws std::domain_error on 0
    int trace(fe a) const;              // absolute trace, in {0,1}
    fe sqrt(fe a) const;                // the char-2 square root (always unique)

    /// Unique b with b^m = a; requires gcd(m, 2^n - 1) = 1 (or a = 0).
    fe root_m(fe a, std::uint32_t m) const;

    bool valid(fe a) const { return a < q_; }

private:
    Field(int n, std::uint32_t modulus_bits, bool conway);
    void build_log_tables();

    int n_;
    std::uint32_t modulus_;
    std::uint32_t q_;
    bool conway_;
    // log/antilog tables over the generator alpha; only for Conway
    // fields with n <= kLogTableMax (the enumerator's hot path).
    static constexpr int kLogTableMax = 16;
    std::vector<std::uint32_t> log_;   // log_[a] for a != 0
    std::vector<std::uint32_t> exp_;   // exp_[i] = alpha^i, doubled to skip a mod
};

/// Norm-compatible embedding alpha_F -> alpha_E^((2^E.n - 1)/(2^F.n - 1)).
/// Requires E.n divisible by F.n and both fields Conway.
fe embed(fe a, const Field& F, const Field& E);

/// gcd(g+1, 2^n - 1) = 1: the restriction under which the monic action
/// and the enumerator are defined.
bool genus_field_compatible(int g, const Field& F);

namespace detail {
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// e with e*m = 1 mod r, or throws std::domain_error if gcd(m, r) != 1.
std::uint64_t inverse_mod(std::uint64_t m, std::uint64_t r);
}

}  // namespace hec
