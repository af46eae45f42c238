#pragma once

#include <cstdint>
#include <vector>

#include "hec/curve.hpp"
#include "hec/weil.hpp"

namespace hec {

/// Point counts N_k = #C(F_{q^k}) of one curve, k = 1..K.
struct CountVector {
    const Field* field = nullptr;  // base field, q = 2^n
    std::vector<std::int64_t> counts;

    int K() const { return static_cast<int>(counts.size()); }
    std::int64_t at(int k) const { return counts[static_cast<std::size_t>(k - 1)]; }
};

/* Direct fiber counting over F_{q^k}: an affine x contributes 1 point
   when v(x) = 0 and otherwise 2 or 0 as Tr(u(x)/v(x)^2) is 0 or 1; the
   chart at infinity contributes via the reversed model
   s^2 + v*(t) s = u*(t) at t = 0. Requires n*k within the Conway table
   (the Frobenius tower must exist). */
std::int64_t count_points(const Poly& v, const Poly& u, int g, int k);
std::int64_t count_points(const CurveRecord& c, int k);

/// #W(F_{q^k}): rational Weierstrass points, i.e. roots of v plus the
/// ramified infinite point when deg v <= g.
std::int64_t count_weierstrass(const Poly& v, int g, int k);
std::int64_t count_weierstrass(const CurveRecord& c, int k);

/// Geometric Weierstrass count: distinct roots of v over the closure
/// plus the infinite point when deg v <= g. Equals 2-rank + 1.
int geometric_weierstrass(const Poly& v, int g);

/// Weil coefficients a_1..a_g from N_1..N_g via Newton's identities;
/// throws std::domain_error when the counts are inconsistent (some
/// division by k not exact).
std::vector<std::int64_t> weil_from_counts(const CountVector& N, int g);

/// N_1..N_K from Weil coefficients, exact at any size.
std::vector<bigint> counts_from_weil(const WeilPoly& w, int K);

/// Fills counts (k = 1..K), weil and two_rank on every record.
/// K < g is raised to g so the Weil coefficients are determined.
void annotate_records(std::vector<CurveRecord>& records, int K, int jobs = 1);

}  // namespace hec
