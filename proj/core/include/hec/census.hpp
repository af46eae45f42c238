#pragma once

#include <cstdint>
#include <vector>

#include "hec/curve.hpp"
#include "hec/f2space.hpp"
#include "hec/moebius.hpp"

namespace hec {

/* The enumerator: one model per isomorphism class of genus-g
   hyperelliptic curves over GF(2^n), for gcd(g+1, 2^n - 1) = 1.

   Per orbit representative v it spans U_v = {r v + r^2}, walks the
   canonical transversal of V/U_v, and collapses each coset orbit under
   the stabilizer of v to a single candidate, which is kept iff the pair
   (v, u) passes the hyperellipticity criterion. */

/// The smoothness/degree criterion for y^2 + v(x)y = u(x):
/// 2g+1 <= max(deg u, 2 deg v) <= 2g+2, gcd(v, u'^2 + v'^2 u) = 1, and
/// deg v = g+1 or a_{2g+1}^2 != a_{2g+2} b_g^2.
bool is_hyperelliptic(const Poly& v, const Poly& u, int g);

/// Per-v accounting: kept + discarded cosets always total 2^((g+1)n+1).
struct VStats {
    std::uint64_t transversal_size = 0;
    std::uint64_t kept_cosets = 0;       // cosets of orbits passing the degree filter
    std::uint64_t discarded_cosets = 0;  // cosets of orbits failing it
    std::uint64_t candidate_classes = 0; // orbits passing the degree filter
    std::uint64_t curves = 0;            // candidates passing the validity check
    int dim_u = 0;
};

std::vector<CurveRecord> enumerate_for_v(const Poly& v, int g, const Field& F,
                                         VStats* stats = nullptr);

/// Union over all orbit representatives, sorted by (v, u); exactly one
/// record per isomorphism class. jobs > 1 shards the v-list across
/// threads; output is identical regardless of jobs.
std::vector<CurveRecord> enumerate_genus(int g, const Field& F, int jobs = 1);

}  // namespace hec
