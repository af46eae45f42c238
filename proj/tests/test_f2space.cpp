#include <doctest.h>

#include <stdexcept>
#include <random>
#include <set>

#include "hec/f2space.hpp"
#include "hec/moebius.hpp"

using namespace hec;

namespace {

std::vector<bitvec> uv_generators(const Poly& v, int g) {
    const Field& F = v.field();
    std::vector<bitvec> gens;
    for (int i = 0; i <= g + 1; ++i) {
        fe aj = 1;
        for (int j = 0; j < F.n(); ++j) {
            const Poly r = Poly::monomial(F, aj, i);
            gens.push_back(bv_pack(p_add(p_mul(r, v), p_mul(r, r)), g));
            aj = F.mul(aj, F.gen());
        }
    }
    return gens;
}

}  // namespace

TEST_CASE("pack/unpack roundtrip") {
    std::mt19937 rng(3);
    for (int n : {1, 2, 3}) {
        const Field& F = Field::get(n);
        const int g = 3;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<fe> c(static_cast<std::size_t>(2 * g + 3));
            for (auto& x : c) x = static_cast<fe>(rng() % F.q());
            const Poly f(F, std::move(c));
            const bitvec w = bv_pack(f, g);
            CHECK(bv_unpack(w, g, F) == f);
            CHECK(bv_poly_deg(w, n) == f.deg());
        }
    }
}

TEST_CASE("span basics") {
    CHECK(subspace_span(8, {}).rank() == 0);
    const bitvec e = 0b1010;
    const Subspace S = subspace_span(8, {e, e});
    CHECK(S.rank() == 1);
    CHECK(S.contains(e));
    CHECK_FALSE(S.contains(0b0010));
}

TEST_CASE("U_v has rank (g+2)n - 1 with kernel spanned by v") {
    const int g = 3;
    for (int n : {1, 2}) {
        const Field& F = Field::get(n);
        for (const Poly& v : monic_orbit_reps(g, F)) {
            const auto gens = uv_generators(v, g);
            const Subspace U = subspace_span(bv_dim(g, n), gens);
            CHECK(U.rank() == (g + 2) * n - 1);
        }
    }
    // The kernel of r -> rv + r^2 on polynomials of degree <= g+1 is
    // exactly {0, v}: exhaustive over F2.
    const Field& F2 = Field::get(1);
    for (const Poly& v : monic_orbit_reps(g, F2)) {
        int zeros = 0;
        for (unsigned bits = 0; bits < (1u << (g + 2)); ++bits) {
            std::vector<fe> c;
            for (int i = 0; i <= g + 1; ++i) c.push_back((bits >> i) & 1);
            const Poly r(F2, std::move(c));
            if (p_add(p_mul(r, v), p_mul(r, r)).is_zero()) {
                ++zeros;
                CHECK((r.is_zero() || r == v));
            }
        }
        CHECK(zeros == 2);
    }
}

TEST_CASE("coset reduction is canonical") {
    std::mt19937 rng(9);
    const Field& F = Field::get(2);
    const Poly v = Poly::one(F);
    const int g = 3;
    const Subspace U = subspace_span(bv_dim(g, 2), uv_generators(v, g));
    for (int trial = 0; trial < 200; ++trial) {
        bitvec w = 0;
        for (int b = 0; b < U.dim(); ++b)
            if (rng() & 1) w |= static_cast<bitvec>(1) << b;
        const bitvec r = U.reduce(w);
        CHECK(U.reduce(r) == r);              // idempotent
        CHECK(U.contains(w ^ r));             // same coset
        const bitvec member = U.rows()[rng() % U.rows().size()];
        CHECK(U.reduce(w ^ member) == r);     // invariant on the coset
    }
    CHECK(U.reduce(0) == 0);
}

TEST_CASE("transversal size and canonicity") {
    const int g = 3;
    for (int n : {1, 2}) {
        const Field& F = Field::get(n);
        const Poly v = Poly::one(F);
        const int dim = bv_dim(g, n);
        const Subspace U = subspace_span(dim, uv_generators(v, g));
        const CosetTransversal T(dim, U);
        CHECK(T.size() == (1ull << ((g + 1) * n + 1)));
        std::set<bitvec> seen;
        for (std::uint64_t i = 0; i < T.size(); ++i) {
            const bitvec w = T.rep(i);
            CHECK(U.reduce(w) == w);
            CHECK(T.index_of(w) == i);
            seen.insert(w);
        }
        CHECK(seen.size() == T.size());
    }
}

TEST_CASE("transversal edge spaces") {
    const Subspace zero = subspace_span(5, {});
    CHECK(CosetTransversal(5, zero).size() == 32);
    std::vector<bitvec> full;
    for (int b = 0; b < 5; ++b) full.push_back(static_cast<bitvec>(1) << b);
    const Subspace whole = subspace_span(5, full);
    const CosetTransversal T(5, whole);
    CHECK(T.size() == 1);
    CHECK(T.rep(0) == 0);
}

TEST_CASE("dimension guard") {
    CHECK_THROWS_AS(bv_dim(4, 12), std::domain_error);  // 132 bits
    CHECK(bv_dim(4, 6) == 66);
}
