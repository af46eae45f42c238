#pragma once

#include <cstdint>
#include <vector>

#include "hec/polyring.hpp"

namespace hec {

/* One genus-g curve model y^2 + v(x)y = u(x) over GF(2^n), with the
   derived zeta data filled in on demand: point counts N_1..N_K, Weil
   coefficients a_1..a_g, and the 2-rank. In census output v is the
   orbit representative of its class and u the canonical element of its
   coset-orbit. */
struct CurveRecord {
    int g = 0;
    const Field* field = nullptr;
    Poly v, u;
    std::vector<std::int64_t> counts;  // N_1..N_K; empty until annotated
    std::vector<std::int64_t> weil;    // a_1..a_g; empty until annotated
    int two_rank = -1;                 // -1 until annotated
};

/// Order by (v, u) in the canonical polynomial order; ties impossible
/// within one census.
bool record_less(const CurveRecord& a, const CurveRecord& b);

}  // namespace hec
