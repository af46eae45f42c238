#include "hec/stats.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hec {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 isqrt_u128(u128 x) {
    if (x == 0) return 0;
    auto r = static_cast<u128>(sqrtl(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::int64_t floor_div(i128 a, i128 b) {
    i128 quot = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --quot;
    return static_cast<std::int64_t>(quot);
}

std::int64_t ceil_div(i128 a, i128 b) {
    i128 quot = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++quot;
    return static_cast<std::int64_t>(quot);
}

// 27u >= A - 2 sqrt(D^3), exact squared form.
bool cubic_lower_ok(i128 u27, i128 A, i128 D3x4) {
    const i128 diff = A - u27;
    if (diff <= 0) return true;
    return diff * diff <= D3x4;
}

// 27u <= A + 2 sqrt(D^3).
bool cubic_upper_ok(i128 u27, i128 A, i128 D3x4) {
    const i128 diff = u27 - A;
    if (diff <= 0) return true;
    return diff * diff <= D3x4;
}

void accumulate_s(std::int64_t s, std::int64_t q, ClassCountTable& table) {
    const i128 Q = q, S = s;
    // t range: 4 sqrt(q)|s| - 9q <= t <= s^2/3 + 3q.
    const u128 m2 = static_cast<u128>(16 * Q * S * S);
    u128 root = isqrt_u128(m2);
    if (root * root < m2) ++root;  // exact ceil of 4 sqrt(q)|s|
    const std::int64_t t_min = static_cast<std::int64_t>(root) - 9 * q;
    const std::int64_t t_max = floor_div(S * S + 9 * Q, 3);
    for (std::int64_t t = t_min; t <= t_max; ++t) {
        if (t + q < 0) continue;  // linear u-interval is empty
        const i128 T = t;
        const i128 D = S * S - 3 * T + 9 * Q;  // >= 0 within the t range
        const i128 A = -2 * S * S * S + 9 * S * T + 27 * Q * S;
        const i128 D3x4 = 4 * D * D * D;
        const auto f = static_cast<i128>(isqrt_u128(static_cast<u128>(D3x4)));

        std::int64_t lo = ceil_div(A - f, 27);
        while (cubic_lower_ok(static_cast<i128>(lo - 1) * 27, A, D3x4)) --lo;
        while (!cubic_lower_ok(static_cast<i128>(lo) * 27, A, D3x4)) ++lo;
        std::int64_t hi = floor_div(A + f, 27);
        while (cubic_upper_ok(static_cast<i128>(hi + 1) * 27, A, D3x4)) ++hi;
        while (!cubic_upper_ok(static_cast<i128>(hi) * 27, A, D3x4)) --hi;

        // Linear pair: |u + 2qs| <= 2 sqrt(q)(t + q); the floor of the
        // radius is exact by integer sqrt.
        const auto L = static_cast<std::int64_t>(
            isqrt_u128(static_cast<u128>(4 * Q * (T + Q) * (T + Q))));
        lo = std::max(lo, -2 * q * s - L);
        hi = std::min(hi, -2 * q * s + L);
        if (lo > hi) continue;

        const std::uint64_t len = static_cast<std::uint64_t>(hi - lo + 1);
        const std::uint64_t odd = len / 2 + ((len % 2) && (lo & 1));
        const std::size_t base = static_cast<std::size_t>(((s & 1) << 2) | ((t & 1) << 1));
        table.counts[base] += len - odd;
        table.counts[base | 1] += odd;
        table.total += len;
    }
}

}  // namespace

ClassCountTable w3_class_counts(std::int64_t q, int jobs) {
    if (q < 2 || (q & (q - 1)) != 0)
        throw std::domain_error("q must be a power of 2, got " + std::to_string(q));
    const auto s_max = static_cast<std::int64_t>(isqrt_u128(static_cast<u128>(36 * q)));
    std::vector<std::int64_t> s_values;
    for (std::int64_t s = -s_max; s <= s_max; ++s) s_values.push_back(s);

    if (jobs <= 1) {
        ClassCountTable table;
        table.q = q;
        for (std::int64_t s : s_values) accumulate_s(s, q, table);
        return table;
    }
    std::vector<ClassCountTable> parts(static_cast<std::size_t>(jobs));
    std::atomic<std::size_t> next{0};
    auto runner = [&](ClassCountTable& part) {
        for (std::size_t i = next.fetch_add(1); i < s_values.size(); i = next.fetch_add(1))
            accumulate_s(s_values[i], q, part);
    };
    std::vector<std::thread> pool;
    for (auto& part : parts) pool.emplace_back(runner, std::ref(part));
    for (auto& th : pool) th.join();
    ClassCountTable table;
    table.q = q;
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < 8; ++i) table.counts[i] += part.counts[i];
        table.total += part.total;
    }
    return table;
}

Tau3 tau3(const ClassCountTable& table) {
    Tau3 r;
    r.numerator = table.at(0, 1, 1) + table.at(1, 0, 1);
    r.ordinary = table.at(0, 0, 1) + table.at(0, 1, 1) + table.at(1, 0, 1) + table.at(1, 1, 1);
    r.total = table.total;
    return r;
}

IsogenyEstimate isogeny_count_estimate(int g, std::int64_t q) {
    if (g < 1) throw std::domain_error("genus must be positive");
    if (q < 2) throw std::domain_error("q must be a prime power >= 2");
    IsogenyEstimate est;
    est.q = q;
    est.half_exp = g * (g + 1) / 2;
    bigrat c(bigint(1) << g);  // 2^g
    for (int i = 2; i <= g; ++i) c /= i;
    for (int i = 1; i <= g; ++i)
        for (int rep = 0; rep < g + 1 - i; ++rep) c *= bigrat(2 * i, 2 * i - 1);
    // r(q) = phi(q)/q = (p-1)/p for q = p^k.
    std::int64_t p = 2;
    while (q % p != 0) ++p;
    c *= bigrat(p - 1, p);
    est.coeff = c;
    return est;
}

double IsogenyEstimate::approx() const {
    const double c = static_cast<double>(boost::multiprecision::numerator(coeff)) /
                     static_cast<double>(boost::multiprecision::denominator(coeff));
    return c * std::pow(static_cast<double>(q), half_exp / 2.0);
}

std::string table_csv_header() {
    return "q,c000,c001,c010,c011,c100,c101,c110,c111,total,tau3_num,tau3_den_ordinary,"
           "tau3_den_all";
}

std::string table_csv_row(const ClassCountTable& table) {
    std::ostringstream os;
    os << table.q;
    for (int r1 = 0; r1 < 2; ++r1)
        for (int r2 = 0; r2 < 2; ++r2)
            for (int r3 = 0; r3 < 2; ++r3) os << ',' << table.at(r1, r2, r3);
    const Tau3 t = tau3(table);
    os << ',' << table.total << ',' << t.numerator << ',' << t.ordinary << ',' << t.total;
    return os.str();
}

}  // namespace hec
