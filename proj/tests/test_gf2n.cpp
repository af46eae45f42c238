#include <doctest.h>

#include <stdexcept>
#include <tuple>
#include <utility>
#include <random>

#include "hec/gf2n.hpp"

using namespace hec;

TEST_CASE("multiplication in small fields") {
    const Field& F4 = Field::get(2);
    CHECK(F4.mul(2, 2) == 3);  // alpha^2 = alpha + 1
    CHECK(F4.mul(2, 3) == 1);  // alpha (alpha+1) = alpha^2 + alpha = 1
    for (int n : {1, 2, 3, 4, 8}) {
        const Field& F = Field::get(n);
        for (fe a = 0; a < std::min<fe>(F.q(), 64); ++a) {
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
        }
    }
}

TEST_CASE("table-free and table paths agree") {
    // with_modulus skips the log tables, so it exercises shift-reduce.
    for (int n : {2, 3, 4, 6}) {
        const Field& F = Field::get(n);
        Field G = Field::with_modulus(n, F.modulus());
        for (fe a = 0; a < F.q(); ++a)
            for (fe b = 0; b < F.q(); ++b) CHECK(F.mul(a, b) == G.mul(a, b));
    }
}

TEST_CASE("inverse") {
    const Field& F4 = Field::get(2);
    CHECK(F4.inv(2) == 3);
    CHECK(F4.inv(1) == 1);
    CHECK_THROWS_AS(F4.inv(0), std::domain_error);
    for (int n : {1, 2, 3, 4, 5}) {
        const Field& F = Field::get(n);
        for (fe a = 1; a < F.q(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
}

TEST_CASE("trace") {
    CHECK(Field::get(1).trace(1) == 1);
    CHECK(Field::get(2).trace(2) == 1);  // alpha + alpha^2 = 1 in F4
    for (int n : {1, 2, 3, 4, 6}) {
        const Field& F = Field::get(n);
        CHECK(F.trace(0) == 0);
        // GF(2)-linearity and Frobenius invariance.
        for (fe a = 0; a < F.q(); ++a) {
            CHECK(F.trace(F.mul(a, a)) == F.trace(a));
            for (fe b = 0; b < F.q(); ++b)
                CHECK(F.trace(a ^ b) == (F.trace(a) ^ F.trace(b)));
        }
        // The trace is onto: both values occur.
        int ones = 0;
        for (fe a = 0; a < F.q(); ++a) ones += F.trace(a);
        CHECK(ones == static_cast<int>(F.q() / 2));
    }
}

TEST_CASE("m-th roots") {
    const Field& F8 = Field::get(3);
    CHECK(F8.root_m(2, 2) == 6);  // sqrt(alpha) = alpha^2 + alpha
    CHECK(F8.mul(6, 6) == 2);
    for (int n : {2, 3, 4}) {
        const Field& F = Field::get(n);
        // Smallest m >= 3 coprime to the unit group order.
        std::uint32_t m = 3;
        while (detail::gcd_u64(m, F.q() - 1) != 1) ++m;
        CHECK(F.root_m(1, m) == 1);
        CHECK(F.root_m(0, m) == 0);
        for (fe a = 0; a < F.q(); ++a) CHECK(F.pow(F.root_m(a, m), m) == a);
        // Frobenius inversion: sqrt undoes squaring, bijectively.
        for (fe a = 0; a < F.q(); ++a) CHECK(F.sqrt(F.mul(a, a)) == a);
    }
    // gcd(3, 4^1 - 1) = 3: no cube roots in F4.
    CHECK_THROWS_AS(Field::get(2).root_m(2, 3), std::domain_error);
}

TEST_CASE("unit group order") {
    for (int n = 1; n <= 4; ++n) {
        const Field& F = Field::get(n);
        for (fe a = 1; a < F.q(); ++a) CHECK(F.pow(a, F.q() - 1) == 1);
    }
    std::mt19937 rng(7);
    for (int n : {8, 12, 16, 17, 18}) {
        const Field& F = Field::get(n);
        for (int trial = 0; trial < 50; ++trial) {
            const fe a = static_cast<fe>(rng() % (F.q() - 1)) + 1;
            CHECK(F.pow(a, F.q() - 1) == 1);
        }
    }
}

TEST_CASE("Frobenius is additive and bijective") {
    std::mt19937 rng(11);
    for (int n : {3, 5, 9}) {
        const Field& F = Field::get(n);
        for (int trial = 0; trial < 100; ++trial) {
            const fe a = static_cast<fe>(rng() % F.q());
            const fe b = static_cast<fe>(rng() % F.q());
            CHECK(F.mul(a ^ b, a ^ b) == (F.mul(a, a) ^ F.mul(b, b)));
            CHECK(F.root_m(F.mul(a, a), 2) == a);
        }
    }
}

TEST_CASE("embedding") {
    const Field& F2 = Field::get(1);
    const Field& F4 = Field::get(2);
    const Field& F16 = Field::get(4);
    CHECK(embed(1, F2, F4) == 1);
    CHECK(embed(2, F4, F16) == F16.pow(F16.gen(), 5));  // exponent (16-1)/(4-1)

    std::mt19937 rng(23);
    for (auto [nf, ne] : {std::pair{2, 4}, {2, 6}, {3, 6}, {3, 9}, {4, 8}, {2, 8}}) {
        const Field& F = Field::get(nf);
        const Field& E = Field::get(ne);
        // Ring homomorphism.
        for (int trial = 0; trial < 60; ++trial) {
            const fe a = static_cast<fe>(rng() % F.q());
            const fe b = static_cast<fe>(rng() % F.q());
            CHECK(embed(static_cast<fe>(a ^ b), F, E) == (embed(a, F, E) ^ embed(b, F, E)));
            CHECK(embed(F.mul(a, b), F, E) == E.mul(embed(a, F, E), embed(b, F, E)));
        }
        // Absolute trace factors through the relative trace:
        // Tr_E(embed(a)) = [E:F] Tr_F(a) mod 2.
        const int k = ne / nf;
        for (fe a = 0; a < F.q(); ++a)
            CHECK(E.trace(embed(a, F, E)) == ((k % 2) ? F.trace(a) : 0));
    }
}

TEST_CASE("embeddings compose through towers") {
    for (auto [d, m, t] : {std::tuple{1, 2, 4}, {1, 3, 9}, {2, 4, 8}, {1, 2, 6}, {3, 6, 18}}) {
        const Field& A = Field::get(d);
        const Field& B = Field::get(m);
        const Field& C = Field::get(t);
        for (fe a = 0; a < A.q(); ++a)
            CHECK(embed(embed(a, A, B), B, C) == embed(a, A, C));
    }
    CHECK_THROWS_AS(embed(1, Field::get(2), Field::get(3)), std::domain_error);
}

TEST_CASE("Conway table sanity") {
    const std::uint32_t known[] = {0, 3, 7, 11, 19, 37, 91, 131, 285};
    for (int n = 1; n <= 8; ++n) CHECK(Field::get(n).modulus() == known[n]);
    for (int n = 1; n <= Field::kMaxDegree; ++n) {
        // with_modulus re-runs the irreducibility check.
        CHECK_NOTHROW(Field::with_modulus(n, Field::get(n).modulus()));
        CHECK((Field::get(n).modulus() >> n) == 1u);
    }
    CHECK_THROWS_AS(Field::with_modulus(4, 0b10101u), std::domain_error);  // (x^2+x+1)^2
}

TEST_CASE("genus-field compatibility") {
    CHECK(genus_field_compatible(3, Field::get(1)));
    CHECK(genus_field_compatible(3, Field::get(2)));
    CHECK_FALSE(genus_field_compatible(4, Field::get(4)));  // gcd(5, 15) = 5
    CHECK_FALSE(genus_field_compatible(2, Field::get(2)));  // gcd(3, 3) = 3
}
