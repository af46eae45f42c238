#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hec/gf2n.hpp"

namespace hec {

/* Dense univariate polynomial over GF(2^n). coeffs()[i] is the
   coefficient of x^i; the top entry is nonzero unless the polynomial is
   zero (empty coefficient vector). The degree of the zero polynomial is
   reported as kNegInfDeg. Values are immutable in spirit: every
   operation returns a fresh polynomial. */
class Poly {
public:
    static constexpr int kNegInfDeg = -1;

    Poly() : field_(nullptr) {}
    explicit Poly(const Field& F) : field_(&F) {}
    Poly(const Field& F, std::vector<fe> coeffs);
    Poly(const Field& F, std::initializer_list<fe> coeffs);

    static Poly zero(const Field& F) { return Poly(F); }
    static Poly one(const Field& F) { return Poly(F, {1}); }
    /// c * x^k
    static Poly monomial(const Field& F, fe c, int k);

    const Field& field() const { return *field_; }
    const std::vector<fe>& coeffs() const { return c_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    fe coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0u;
    }
    fe lead() const { return c_.empty() ? 0u : c_.back(); }
    bool is_monic() const { return lead() == 1u; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_;
    }

private:
    const Field* field_;
    std::vector<fe> c_;
    void normalize();
};

Poly p_add(const Poly& f, const Poly& g);
Poly p_mul(const Poly& f, const Poly& g);
Poly p_scale(const Poly& f, fe c);
/// Formal derivative; in characteristic 2 only odd-degree terms survive.
Poly p_derivative(const Poly& f);
/// Monic greatest common divisor; throws std::domain_error on (0, 0).
Poly p_gcd(const Poly& f, const Poly& g);
/// Quotient and remainder; throws std::domain_error on zero divisor.
std::pair<Poly, Poly> p_divmod(const Poly& f, const Poly& g);
/// f evaluated at a over the extension E (coefficients embedded first).
fe p_eval(const Poly& f, fe a, const Field& E);
Poly p_pow(const Poly& f, unsigned e);
/// sqrt of a perfect square (all exponents even), coefficient-wise.
Poly p_sqrt(const Poly& f);
/// Largest squarefree divisor; its degree counts the distinct geometric roots.
Poly p_radical(const Poly& f);
/// x^m * f(1/x): the reversal against formal degree m (requires deg f <= m).
Poly p_reverse(const Poly& f, int m);

/// Canonical total order: by degree, then coefficient encodings from
/// degree 0 upward (matches the serialized form, low degree first).
bool poly_less(const Poly& a, const Poly& b);

/// Comma-separated coefficient encodings from degree 0 upward
/// ("0,0,0,0,0,0,0,1" is x^7); the zero polynomial serializes as "0".
std::string poly_str(const Poly& f);
Poly poly_parse(const Field& F, const std::string& s);

}  // namespace hec
