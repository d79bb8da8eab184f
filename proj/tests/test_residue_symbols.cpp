#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauer/residue_symbols.hpp"

#include <random>
#include <set>

using namespace brauer;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 r(20240517);
    return r;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

mpq_class random_rational(long bound, bool with_den = true) {
    long n = 0;
    while (n == 0) n = uniform(-bound, bound);
    long d = with_den && uniform(0, 3) == 0 ? uniform(1, 12) : 1;
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

// Solvability of z^2 = a x^2 + b y^2 in primitive triples modulo p^k, with a
// and b reduced to exponents 0 or 1 in p. k = 3 for odd p and 6 for p = 2 is
// enough for Hensel lifting.
int brute_hilbert(const mpq_class& a, const mpq_class& b, long p) {
    const long k = p == 2 ? 6 : 3;
    long m = 1;
    for (long i = 0; i < k; ++i) m *= p;
    auto reduce = [&](const mpq_class& x) -> long {
        mpz_class n = x.get_num() * x.get_den();
        while (mpz_divisible_p(n.get_mpz_t(), mpz_class(p * p).get_mpz_t())) n /= p * p;
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), mpz_class(m).get_mpz_t());
        return r.get_si();
    };
    long A = reduce(a), B = reduce(b);
    std::vector<char> sq(m, 0), unit_sq(m, 0);
    for (long z = 0; z < m; ++z) {
        sq[z * z % m] = 1;
        if (z % p) unit_sq[z * z % m] = 1;
    }
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            long t = (A * (x * x % m) + B * (y * y % m)) % m;
            bool prim = x % p || y % p;
            if (prim ? sq[t] : unit_sq[t]) return 1;
        }
    return -1;
}

int product_over_places(const mpq_class& a, const mpq_class& b) {
    int s = hilbert_real(a, b);
    for (long p : bad_primes({a, b})) s *= hilbert_qp(a, b, p);
    return s;
}

QSqrt5 random_quad(long bound) {
    QSqrt5 r;
    while (r.is_zero()) r = QSqrt5(random_rational(bound), uniform(0, 4) ? random_rational(bound) : mpq_class(0));
    return r;
}

std::vector<QuadPlace> relevant_places(const std::vector<QSqrt5>& xs) {
    std::vector<mpq_class> qs{5};
    for (const QSqrt5& x : xs) {
        qs.push_back(x.norm());
        qs.push_back(mpq_class(x.x.get_den()));
        qs.push_back(mpq_class(x.y.get_den()));
    }
    std::vector<QuadPlace> r = places_above(Place::real());
    for (long p : bad_primes(qs))
        for (const QuadPlace& w : places_above(Place::prime(p))) r.push_back(w);
    return r;
}

}  // namespace

TEST_CASE("Hilbert symbols over Q: examples") {
    CHECK(hilbert_qp(-1, -1, 2) == -1);
    CHECK(hilbert_qp(2, 5, 5) == -1);
    CHECK(hilbert_qp(-1, -1, 3) == 1);
    CHECK(hilbert_real(-1, -1) == -1);
    CHECK(hilbert_real(-1, 3) == 1);
    CHECK(hilbert(mpq_class(-3, 4), -1, Place::real()) == -1);
    CHECK(hilbert_qp(3, 3, 3) == -1);  // -1 is not a square mod 3
    CHECK(hilbert_qp(5, 5, 5) == 1);
    CHECK(hilbert_qp(2, 3, 2) == -1);
    CHECK_THROWS_AS(hilbert_qp(0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_qp(1, 1, 4), std::invalid_argument);
}

TEST_CASE("Hilbert symbols over Q agree with brute force") {
    const long primes[] = {2, 3, 5, 7, 11, 13};
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        long p = primes[i % 6];
        mpq_class a = random_rational(300), b = random_rational(300);
        if (i % 5 == 0) b = a * p;
        INFO(a.get_str(), " ", b.get_str(), " at ", p);
        CHECK(hilbert_qp(a, b, p) == brute_hilbert(a, b, p));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("Hilbert symbols over Q: algebraic identities and the product formula") {
    for (int i = 0; i < 500; ++i) {
        mpq_class a = random_rational(100000), b = random_rational(100000);
        INFO(a.get_str(), " ", b.get_str());
        CHECK(product_over_places(a, b) == 1);
    }
    for (int i = 0; i < 100; ++i) {
        mpq_class a = random_rational(500), b = random_rational(500), c = random_rational(500);
        for (long p : {2L, 3L, 5L, 7L, 17L}) {
            CHECK(hilbert_qp(a, b, p) == hilbert_qp(b, a, p));
            CHECK(hilbert_qp(a, b * c, p) == hilbert_qp(a, b, p) * hilbert_qp(a, c, p));
            CHECK(hilbert_qp(a, -a, p) == 1);
            if (a != 1) CHECK(hilbert_qp(a, 1 - a, p) == 1);
            CHECK(hilbert_qp(a, b * b, p) == 1);
        }
    }
}

TEST_CASE("places and arithmetic of Q(sqrt 5)") {
    CHECK(places_above(Place::prime(11)).size() == 2);
    CHECK(places_above(Place::prime(7)).size() == 1);
    CHECK(places_above(Place::prime(7))[0].kind == QuadPlace::Kind::inert);
    CHECK(places_above(Place::prime(5))[0].kind == QuadPlace::Kind::ramified);
    CHECK(places_above(Place::prime(2))[0].kind == QuadPlace::Kind::inert);
    QSqrt5 phi(mpq_class(1, 2), mpq_class(1, 2));
    CHECK(phi * phi == phi + QSqrt5(1));
    CHECK(phi / phi == QSqrt5(1));
    CHECK(sign_at(QSqrt5(2, -1), 1) == -1);
    CHECK(sign_at(QSqrt5(3, -1), 1) == 1);
    CHECK(sign_at(QSqrt5(3, -1), -1) == 1);
    CHECK(valuation_at(QSqrt5(0, 1), places_above(Place::prime(5))[0]) == 1);
    CHECK(valuation_at(QSqrt5(4, 0), places_above(Place::prime(2))[0]) == 2);
    CHECK(valuation_at(phi, places_above(Place::prime(2))[0]) == 0);
    // 4 + sqrt5 has norm 11 and lies in exactly one prime above 11
    auto w11 = places_above(Place::prime(11));
    CHECK(valuation_at(QSqrt5(4, 1), w11[0]) + valuation_at(QSqrt5(4, 1), w11[1]) == 1);
}

TEST_CASE("Hilbert symbols over Q(sqrt 5) restrict correctly from Q") {
    // for rational a, b: split places see (a, b)_p, the other finite places
    // see (a, N b)_p = 1
    for (int i = 0; i < 60; ++i) {
        mpq_class a = random_rational(200), b = random_rational(200);
        for (long p : {2L, 3L, 5L, 7L, 11L, 19L, 31L})
            for (const QuadPlace& w : places_above(Place::prime(p))) {
                int expect = w.kind == QuadPlace::Kind::split ? hilbert_qp(a, b, p) : 1;
                CHECK(hilbert_sqrt5(a, b, w) == expect);
            }
        for (const QuadPlace& w : places_above(Place::real())) CHECK(hilbert_sqrt5(a, b, w) == hilbert_real(a, b));
    }
}

TEST_CASE("Hilbert symbols over Q(sqrt 5): identities and reciprocity") {
    for (int i = 0; i < 50; ++i) {
        QSqrt5 a = random_quad(60), b = random_quad(60);
        INFO(a.str(), " ", b.str());
        int prod = 1;
        for (const QuadPlace& w : relevant_places({a, b})) {
            int s = hilbert_sqrt5(a, b, w);
            CHECK(s == hilbert_sqrt5(b, a, w));
            prod *= s;
        }
        CHECK(prod == 1);
    }
    for (int i = 0; i < 40; ++i) {
        QSqrt5 a = random_quad(30), b = random_quad(30), c = random_quad(30);
        for (const QuadPlace& w : relevant_places({a, b, c})) {
            CHECK(hilbert_sqrt5(a, b * c, w) == hilbert_sqrt5(a, b, w) * hilbert_sqrt5(a, c, w));
            CHECK(hilbert_sqrt5(a, QSqrt5(0) - a, w) == 1);
            if (!(a == QSqrt5(1))) CHECK(hilbert_sqrt5(a, QSqrt5(1) - a, w) == 1);
        }
    }
    auto w2 = places_above(Place::prime(2))[0];
    // every quaternion algebra over Q_2 splits in its unramified quadratic extension
    CHECK(hilbert_sqrt5(QSqrt5(-1), QSqrt5(-1), w2) == 1);
    CHECK(hilbert_sqrt5(QSqrt5(0, 1), QSqrt5(0, 1), w2) == hilbert_sqrt5(QSqrt5(0, 1), QSqrt5(-1), w2));
}

TEST_CASE("local Artin map: examples and reciprocity") {
    CHECK(artin_cyclotomic(2, Place::prime(5), 5) == 3);
    CHECK(artin_cyclotomic(2, Place::prime(2), 5) == 2);
    CHECK(artin_cyclotomic(-2, Place::real(), 5) == 4);
    CHECK(artin_cyclotomic(7, Place::prime(3), 5) == 1);
    CHECK(artin_cyclotomic(mpq_class(1, 3), Place::prime(3), 5) == 2);
    CHECK(artin_cyclotomic(-1, Place::real(), 17, {16}) == 1);
    for (long m : {5L, 17L}) {
        std::vector<long> H = m == 17 ? std::vector<long>{16} : std::vector<long>{1};
        for (int i = 0; i < 100; ++i) {
            mpq_class a = random_rational(100000);
            std::vector<long> ps = bad_primes({a, mpq_class(m)});
            long full = artin_cyclotomic(a, Place::real(), m);
            long reduced = artin_cyclotomic(a, Place::real(), m, H);
            for (long p : ps) {
                full = full * artin_cyclotomic(a, Place::prime(p), m) % m;
                reduced = reduced * artin_cyclotomic(a, Place::prime(p), m, H) % m;
            }
            INFO(a.get_str(), " m=", m);
            CHECK(full == 1);
            CHECK((reduced == 1 || (m == 17 && reduced == 16)));
        }
    }
}

TEST_CASE("Artin map on Q(sqrt 5) inside Q(zeta_5) gives the Hilbert symbol (5, a)") {
    for (int i = 0; i < 100; ++i) {
        mpq_class a = random_rational(5000);
        std::vector<long> ps = bad_primes({a, mpq_class(5)});
        for (long p : ps) {
            long c = artin_cyclotomic(a, Place::prime(p), 5, {4});
            CHECK((c == 1 ? 1 : -1) == hilbert_qp(5, a, p));
        }
        long c = artin_cyclotomic(a, Place::real(), 5, {4});
        CHECK((c == 1 ? 1 : -1) == hilbert_real(5, a));
    }
}

TEST_CASE("invariants of cyclic symbols") {
    CHECK(cyclic_symbol_invariant(4, 2, 5) == mpq_class(1, 2));
    CHECK(cyclic_symbol_invariant(3, 2, 5) == mpq_class(3, 4));
    CHECK(cyclic_symbol_invariant(1, 2, 5) == 0);
    CHECK(cyclic_symbol_invariant(4, 2, 5, {4}) == 0);
    CHECK(cyclic_symbol_invariant(3, 2, 5, {4}) == mpq_class(1, 2));
    CHECK(cyclic_symbol_invariant(9, 3, 17, {16}) == mpq_class(1, 4));
    CHECK_THROWS_AS(cyclic_symbol_invariant(2, 4, 5), std::invalid_argument);
    CHECK(mod_one(mpq_class(7, 4)) == mpq_class(3, 4));
    CHECK(mod_one(mpq_class(-1, 4)) == mpq_class(3, 4));
    CHECK(frac_str(mpq_class(3, 4)) == "3/4");
    CHECK(frac_str(mpq_class(0)) == "0");
}
