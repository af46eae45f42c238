#pragma once

#include <optional>
#include <vector>

#include "hec/weil.hpp"

namespace hec {

/* Parity obstruction generator: a residue pattern (n_1, ..., n_g) is an
   obstruction when no multiset of Frobenius orbit sizes {d_i} summing
   to (2-rank + 1) matches the pattern's point-count parities
   N_k = #C(F_{q^k}) mod 2 for every k up to the cutoff. The optional
   higher-power mode adds congruences modulo 2^(v_2(k)+1) whenever the
   pattern determines N_k to that modulus. */

/// Frobenius orbit sizes on the Weierstrass points, weakly decreasing.
using Partition = std::vector<int>;

/// A determined higher-power congruence: N_k = value (mod modulus) for
/// every lift of the pattern, contradicting 2 - sum_{d_i | k} d_i for
/// every partition.
struct Certificate {
    int k = 0;
    int modulus = 0;
    int value = 0;
};

struct ObstructionReport {
    ResiduePattern pattern;
    bool obstructed = false;
    std::optional<Partition> witness;     // present iff not obstructed
    std::vector<Certificate> certificates;
};

/// N_k mod 2 for k = 1..K, from e_i = n_i (i <= g) and the q-weighted
/// tail e_i = 0 (g < i <= 2g) via Newton's recursion mod 2.
std::vector<int> parity_point_counts(const ResiduePattern& p, int K);

/// All partitions of m, largest part first within each partition,
/// enumerated in decreasing-largest-part order.
std::vector<Partition> partitions_of(int m);

ObstructionReport pattern_is_obstruction(const ResiduePattern& p, int K,
                                         bool higher_power = false);

/// All obstructed patterns in {0,1}^g, ordered by their printed form.
/// K = 0 selects the default cutoff 2g.
std::vector<ResiduePattern> generate_obstructions(int g, int K = 0,
                                                  bool higher_power = false,
                                                  int jobs = 1);

/// Zero-pad an obstructed pattern to genus g + zeros; throws
/// std::invalid_argument when the input is not (basic-mode) obstructed.
ResiduePattern lift_pattern(const ResiduePattern& p, int zeros);

/// Certificates for the even extension degrees k <= K (see above).
std::vector<Certificate> higher_power_certificates(const ResiduePattern& p, int K);

}  // namespace hec
