#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauer/exactlinalg.hpp"

#include <random>

using namespace brauer;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

// gcd of all k x k minors, by enumerating row and column subsets
Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
    Int g = 0;
    std::size_t R = m.rows(), C = m.cols();
    for (unsigned rs = 0; rs < (1u << R); ++rs) {
        if (static_cast<std::size_t>(__builtin_popcount(rs)) != k) continue;
        for (unsigned cs = 0; cs < (1u << C); ++cs) {
            if (static_cast<std::size_t>(__builtin_popcount(cs)) != k) continue;
            IntMatrix sub(k, k);
            std::size_t a = 0;
            for (std::size_t i = 0; i < R; ++i) {
                if (!(rs >> i & 1)) continue;
                std::size_t b = 0;
                for (std::size_t j = 0; j < C; ++j)
                    if (cs >> j & 1) sub(a, b++) = m(i, j);
                ++a;
            }
            g = gcd(g, sub.det());
        }
    }
    return g;
}

void check_smith(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.s);
    CHECK(abs(s.u.det()) == 1);
    CHECK(abs(s.v.det()) == 1);
    CHECK(s.u * s.uinv == IntMatrix::identity(m.rows()));
    for (std::size_t i = 0; i < s.s.rows(); ++i)
        for (std::size_t j = 0; j < s.s.cols(); ++j)
            if (i != j) CHECK(s.s(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(mpz_divisible_p(s.s(i + 1, i + 1).get_mpz_t(), s.s(i, i).get_mpz_t()));
}

}  // namespace

TEST_CASE("smith form of identity and zero") {
    SmithForm s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.s == IntMatrix::identity(3));
    CHECK(s.u == IntMatrix::identity(3));
    CHECK(s.v == IntMatrix::identity(3));
    SmithForm z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.s.is_zero());
    CHECK(z.u == IntMatrix::identity(2));
    CHECK(z.v == IntMatrix::identity(3));
    CHECK(z.rank == 0);
}

TEST_CASE("smith form matches determinantal divisors") {
    IntMatrix m{{2, 4}, {6, 8}};
    SmithForm s = smith_normal_form(m);
    Int d1 = determinantal_divisor(m, 1), d2 = determinantal_divisor(m, 2);
    CHECK(s.s(0, 0) == d1);
    CHECK(s.s(0, 0) * s.s(1, 1) == d2);
    CHECK(s.s(0, 0) == 2);
    CHECK(s.s(1, 1) == 4);

    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix a = random_matrix(rng, r, c, -6, 6);
        check_smith(a);
        SmithForm s2 = smith_normal_form(a);
        Int prod = 1;
        for (std::size_t k = 1; k <= std::min(r, c); ++k) {
            prod *= s2.diag(k - 1);
            CHECK(prod == determinantal_divisor(a, k));
        }
    }
}

TEST_CASE("cokernels") {
    AbHom four{FinAbGroup::free(1), FinAbGroup::free(1), IntMatrix{{4}}};
    CHECK(cokernel(four).group == FinAbGroup::cyclic(4));

    AbHom d23{FinAbGroup::free(2), FinAbGroup::free(2), IntMatrix{{2, 0}, {0, 3}}};
    Cokernel c = cokernel(d23);
    CHECK(c.group == FinAbGroup::cyclic(6));
    // elementary divisors 2 and 3 combine to a single factor 6
    CHECK(c.group.order() == 6);
    CHECK(c.proj.well_defined());
    CHECK(c.group.is_zero(c.proj.apply({2, 3})));
    CHECK(!c.group.is_zero(c.proj.apply({1, 0})));
}

TEST_CASE("kernels") {
    Kernel k = kernel(AbHom{FinAbGroup::free(2), FinAbGroup::free(3), IntMatrix(3, 2)});
    CHECK(k.group == FinAbGroup::free(2));

    // multiplication by 2 on Z/4 has kernel Z/2
    FinAbGroup z4 = FinAbGroup::cyclic(4);
    Kernel k2 = kernel(AbHom{z4, z4, IntMatrix{{2}}});
    CHECK(k2.group == FinAbGroup::cyclic(2));
    CHECK(z4.element_order(k2.inclusion.apply({1})) == 2);

    // rank-nullity on maps between free groups
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix a = random_matrix(rng, r, c, -3, 3);
        IntMatrix kb = kernel_basis(a);
        CHECK((a * kb).is_zero());
        SmithForm s = smith_normal_form(a);
        CHECK(kb.cols() + s.rank == c);
    }
}

TEST_CASE("solve") {
    AbHom h{FinAbGroup::free(2), FinAbGroup::free(2), IntMatrix{{2, 0}, {0, 1}}};
    auto z = solve(h, {0, 0});
    REQUIRE(z);
    CHECK(h.apply(*z) == Vec{0, 0});
    CHECK(!solve(h, {1, 0}));

    std::mt19937 rng(1234);
    int solved = 0;
    for (int t = 0; t < 1000; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix a = random_matrix(rng, r, c, -5, 5);
        IntMatrix x0 = random_matrix(rng, c, 1, -9, 9);
        Vec y = a * x0.col(0);
        auto x = solve_system(a, y);
        REQUIRE(x);
        CHECK(a * *x == y);
        ++solved;
    }
    CHECK(solved == 1000);
}

TEST_CASE("solve with moduli and tall systems") {
    // x = 3 mod 5 and 2x = 1 mod 3
    IntMatrix a{{1}, {2}};
    auto s = solve_affine(a, {3, 1}, {5, 3});
    REQUIRE(s);
    Int x = s->particular[0];
    CHECK(mod_floor(x - 3, 5) == 0);
    CHECK(mod_floor(2 * x - 1, 3) == 0);
    CHECK(!solve_system(IntMatrix{{2}}, {1}, {4}));

    std::mt19937 rng(77);
    IntMatrix tall = random_matrix(rng, 300, 12, -2, 2);
    IntMatrix x0 = random_matrix(rng, 12, 1, -4, 4);
    Vec y = tall * x0.col(0);
    auto xt = solve_system(tall, y);
    REQUIRE(xt);
    CHECK(tall * *xt == y);
}

TEST_CASE("subquotient") {
    FinAbGroup z8 = FinAbGroup::free(1);
    // 2Z / 8Z
    Subquotient q = subquotient(z8, IntMatrix{{2}}, IntMatrix{{8}});
    CHECK(q.group == FinAbGroup::cyclic(4));
    auto c = q.coords({6});
    REQUIRE(c);
    CHECK(q.group.element_order(*c) == 4);
    CHECK(!q.coords({3}));
}

TEST_CASE("group formatting") {
    FinAbGroup g{0, {2, 2, 4}};
    CHECK(g.str() == "Z/4 + (Z/2)^2");
    CHECK(FinAbGroup{}.str() == "0");
    CHECK(direct_sum(FinAbGroup::cyclic(2), FinAbGroup::cyclic(3)) == FinAbGroup::cyclic(6));
}
