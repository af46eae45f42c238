#pragma once

#include <unordered_map>
#include <vector>

#include "hec/curve.hpp"
#include "hec/stats.hpp"

namespace hec {

/* Brute-force reference implementations that certify the fast paths on
   small instances. Enumeration classifies every valid (v, u) pair by
   union-find over the explicit isomorphism moves (the three PGL_2
   generators with the forced monic rescaling, and the r-basis additions
   u -> u + r^2 + rv), staying independent of the quotient-space
   construction it checks. */
class BruteCensus {
public:
    BruteCensus(int g, const Field& F);

    int num_classes() const { return num_classes_; }
    std::size_t num_pairs() const { return pairs_.size(); }
    const std::vector<std::pair<Poly, Poly>>& pairs() const { return pairs_; }

    /// Class id of a valid pair, or -1 when the pair is not in the census.
    int class_of(const Poly& v, const Poly& u) const;

    /// The minimal member of each class in (v, u) order.
    std::vector<CurveRecord> representatives() const;

private:
    int g_;
    const Field* field_;
    std::vector<std::pair<Poly, Poly>> pairs_;
    std::vector<int> class_id_;  // per pair, contiguous ids
    int num_classes_ = 0;
    std::unordered_map<std::uint64_t, int> index_;

    std::uint64_t key(const Poly& v, const Poly& u) const;
};

/// One canonical model per isomorphism class, by exhaustive search.
/// Guarded by a work budget of q^(3g+4) candidate pairs.
std::vector<CurveRecord> brute_enumerate(int g, const Field& F);

/// Exhaustive is_weil_poly scan of the coarse coefficient box,
/// tabulated by parity class; certifies w3_class_counts.
ClassCountTable brute_w3_scan(std::int64_t q);

}  // namespace hec
