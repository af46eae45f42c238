#include "hec/obstruct.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace hec {

std::vector<int> parity_point_counts(const ResiduePattern& p, int K) {
    const int g = p.g;
    // p_k mod 2; the tail e_{g+1}..e_{2g} carries a factor q = 0 mod 2.
    std::vector<int> ps(static_cast<std::size_t>(K) + 1, 0);
    for (int k = 1; k <= K; ++k) {
        int acc = 0;
        if (k <= g && (k & 1)) acc ^= p.at(k);  // k e_k mod 2
        for (int j = 1; j <= std::min(std::min(k - 1, g), 2 * g); ++j)
            acc ^= p.at(j) & ps[static_cast<std::size_t>(k - j)];
        ps[static_cast<std::size_t>(k)] = acc;
    }
    std::vector<int> N(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) N[static_cast<std::size_t>(k - 1)] = 1 ^ ps[static_cast<std::size_t>(k)];
    return N;
}

std::vector<Partition> partitions_of(int m) {
    if (m < 1) throw std::domain_error("partitions_of requires m >= 1");
    std::vector<Partition> out;
    Partition cur;
    // Recursive descent, largest part first.
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

namespace {

int sum_dividing(const Partition& d, int k) {
    int s = 0;
    for (int di : d)
        if (k % di == 0) s += di;
    return s;
}

bool partition_matches_parities(const Partition& d, const std::vector<int>& N) {
    for (int k = 1; k <= static_cast<int>(N.size()); ++k)
        if ((sum_dividing(d, k) & 1) != N[static_cast<std::size_t>(k - 1)]) return false;
    return true;
}

int v2(int k) {
    int a = 0;
    while (k % 2 == 0) {
        k /= 2;
        ++a;
    }
    return a;
}

// N_k mod M for one explicit lift of the coefficients and of q.
int lifted_count_mod(const std::vector<int>& a_lift, int g, int q_res, int k, int M) {
    // e_1..e_2g mod M, with e_{g+j} = (-1)^(g+j) a_{g-j} q^j (a_0 = 1).
    std::vector<long long> e(static_cast<std::size_t>(2 * g) + 1, 0);
    for (int i = 1; i <= g; ++i) {
        long long v = a_lift[static_cast<std::size_t>(i - 1)] % M;
        if (i % 2 == 1) v = -v;
        e[static_cast<std::size_t>(i)] = ((v % M) + M) % M;
    }
    long long qj = 1;
    for (int j = 1; j <= g; ++j) {
        qj = qj * q_res % M;
        long long base = (j == g) ? 1 : a_lift[static_cast<std::size_t>(g - j - 1)] % M;
        long long v = base * qj % M;
        if ((g + j) % 2 == 1) v = -v;
        e[static_cast<std::size_t>(g + j)] = ((v % M) + M) % M;
    }
    // p_k mod M by the signed recursion.
    std::vector<long long> ps(static_cast<std::size_t>(k) + 1, 0);
    for (int kk = 1; kk <= k; ++kk) {
        long long acc = 0;
        if (kk <= 2 * g) {
            acc = e[static_cast<std::size_t>(kk)] * kk % M;
            if (kk % 2 == 0) acc = -acc;
        }
        for (int j = 1; j <= std::min(kk - 1, 2 * g); ++j) {
            const long long term = e[static_cast<std::size_t>(j)] * ps[static_cast<std::size_t>(kk - j)] % M;
            acc += (j % 2 == 1) ? term : -term;
        }
        ps[static_cast<std::size_t>(kk)] = ((acc % M) + M) % M;
    }
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk = qk * q_res % M;
    return static_cast<int>(((qk + 1 - ps[static_cast<std::size_t>(k)]) % M + M) % M);
}

// The determined value of N_k mod M across every lift, or nullopt.
std::optional<int> determined_count_mod(const ResiduePattern& p, int k, int M) {
    const int g = p.g;
    const int lifts_per_coeff = M / 2;
    std::uint64_t total = 1;
    for (int i = 0; i < g; ++i) total *= static_cast<std::uint64_t>(lifts_per_coeff);
    std::optional<int> value;
    std::vector<int> a_lift(static_cast<std::size_t>(g));
    for (int q_res = 0; q_res < M; q_res += 2) {
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (int i = 1; i <= g; ++i) {
                a_lift[static_cast<std::size_t>(i - 1)] =
                    p.at(i) + 2 * static_cast<int>(c % static_cast<std::uint64_t>(lifts_per_coeff));
                c /= static_cast<std::uint64_t>(lifts_per_coeff);
            }
            const int nk = lifted_count_mod(a_lift, g, q_res, k, M);
            if (!value)
                value = nk;
            else if (*value != nk)
                return std::nullopt;
        }
    }
    return value;
}

}  // namespace

std::vector<Certificate> higher_power_certificates(const ResiduePattern& p, int K) {
    std::vector<Certificate> certs;
    const int r = two_rank(p);
    const auto parts = partitions_of(r + 1);
    for (int k = 2; k <= K; k += 2) {
        const int a = v2(k);
        const int M = 1 << (a + 1);
        const auto val = determined_count_mod(p, k, M);
        if (!val) continue;
        // The certificate must contradict every partition through
        // N_k = 2 - sum_{d_i | k} d_i (mod 2^(a+1)).
        bool contradicts_all = true;
        for (const auto& d : parts) {
            const int expected = ((2 - sum_dividing(d, k)) % M + M) % M;
            if (expected == *val) {
                contradicts_all = false;
                break;
            }
        }
        if (contradicts_all) certs.push_back({k, M, *val});
    }
    return certs;
}

ObstructionReport pattern_is_obstruction(const ResiduePattern& p, int K,
                                         bool higher_power) {
    ObstructionReport rep;
    rep.pattern = p;
    const int r = two_rank(p);
    const auto N = parity_point_counts(p, K);
    for (const auto& d : partitions_of(r + 1)) {
        if (partition_matches_parities(d, N)) {
            rep.witness = d;
            break;
        }
    }
    rep.obstructed = !rep.witness.has_value();
    if (!rep.obstructed && higher_power) {
        rep.certificates = higher_power_certificates(p, K);
        if (!rep.certificates.empty()) {
            rep.obstructed = true;
            rep.witness.reset();
        }
    }
    return rep;
}

std::vector<ResiduePattern> generate_obstructions(int g, int K, bool higher_power,
                                                  int jobs) {
    if (g < 1) throw std::domain_error("genus must be positive");
    if (K <= 0) K = 2 * g;
    const std::uint32_t npat = 1u << g;
    std::vector<char> obstructed(npat, 0);
    auto check = [&](std::uint32_t bits) {
        const ResiduePattern p{g, bits};
        obstructed[bits] = pattern_is_obstruction(p, K, higher_power).obstructed ? 1 : 0;
    };
    if (jobs <= 1 || npat < 64) {
        for (std::uint32_t bits = 0; bits < npat; ++bits) check(bits);
    } else {
        std::atomic<std::uint32_t> next{0};
        auto runner = [&] {
            for (std::uint32_t b = next.fetch_add(1); b < npat; b = next.fetch_add(1)) check(b);
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(runner);
        for (auto& th : pool) th.join();
    }
    std::vector<ResiduePattern> out;
    for (std::uint32_t bits = 0; bits < npat; ++bits)
        if (obstructed[bits]) out.push_back({g, bits});
    std::sort(out.begin(), out.end(), pattern_less);
    return out;
}

ResiduePattern lift_pattern(const ResiduePattern& p, int zeros) {
    if (zeros < 0) throw std::invalid_argument("negative padding");
    // Zero-padding preserves the parity argument but not the
    // higher-power congruences, so only basic-mode obstructions lift.
    if (!pattern_is_obstruction(p, 2 * p.g, /*higher_power=*/false).obstructed)
        throw std::invalid_argument("pattern " + pattern_str(p) + " is not obstructed");
    return ResiduePattern{p.g + zeros, p.bits};
}

}  // namespace hec
