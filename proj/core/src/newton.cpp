#include "hec/newton.hpp"

#include <stdexcept>

namespace hec {

std::vector<bigint> power_sums_from_elementary(const std::vector<bigint>& e, int nvars,
                                               int K) {
    auto ei = [&](int i) -> bigint {
        return (i >= 1 && i <= nvars && i < static_cast<int>(e.size())) ? e[static_cast<std::size_t>(i)]
                                                                        : bigint(0);
    };
    std::vector<bigint> p(static_cast<std::size_t>(K) + 1, bigint(0));
    for (int k = 1; k <= K; ++k) {
        bigint acc = 0;
        if (k <= nvars) {
            acc = ei(k) * k;
            if (k % 2 == 0) acc = -acc;
        }
        for (int j = 1; j <= std::min(k - 1, nvars); ++j) {
            const bigint term = ei(j) * p[static_cast<std::size_t>(k - j)];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(k)] = acc;
    }
    return p;
}

std::vector<bigint> elementary_from_power_sums(const std::vector<bigint>& p, int m) {
    if (static_cast<int>(p.size()) <= m)
        throw std::domain_error("need p_1..p_m to recover e_1..e_m");
    std::vector<bigint> e(static_cast<std::size_t>(m) + 1, bigint(0));
    for (int k = 1; k <= m; ++k) {
        // k e_k = (-1)^(k-1) (p_k - sum_{j=1}^{k-1} (-1)^(j-1) e_j p_{k-j})
        bigint acc = p[static_cast<std::size_t>(k)];
        for (int j = 1; j <= k - 1; ++j) {
            const bigint term = e[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(k - j)];
            if (j % 2 == 1)
                acc -= term;
            else
                acc += term;
        }
        if (k % 2 == 0) acc = -acc;
        if (acc % k != 0) throw std::domain_error("power sums are not consistent");
        e[static_cast<std::size_t>(k)] = acc / k;
    }
    return e;
}

}  // namespace hec
