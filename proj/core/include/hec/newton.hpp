#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hec {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/* Newton's identities over exact integers, shared by the zeta and Weil
   machinery. Vectors are 1-indexed conceptually: e[0]/p[0] are ignored
   and slot i holds e_i / p_i. */

/// Power sums p_1..p_K of nvars roots from elementary symmetric
/// functions e_1..e_nvars (missing entries treated as zero):
///   p_k = (-1)^(k-1) k e_k + sum_{i=1}^{k-1} (-1)^(k-1-i) e_{k-i} p_i.
std::vector<bigint> power_sums_from_elementary(const std::vector<bigint>& e, int nvars,
                                               int K);

/// Inverts the recursion: e_1..e_m from p_1..p_m. Throws
/// std::domain_error if some division by k is not exact.
std::vector<bigint> elementary_from_power_sums(const std::vector<bigint>& p, int m);

}  // namespace hec
