// Local symbols over Q and Q(sqrt 5): quadratic Hilbert symbols and the
// local Artin map for cyclotomic fields and their subfields.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace brauer {

// A place of Q: a prime p, or the real place (p = 0).
struct Place {
    long p = 0;
    static Place real() { return {0}; }
    static Place prime(long p) { return {p}; }
    bool is_real() const { return p == 0; }
    std::string str() const { return p ? std::to_string(p) : "inf"; }
    friend bool operator==(const Place&, const Place&) = default;
};

bool is_prime(long n);
int valuation(const mpz_class& n, long p);  // n != 0
int valuation(const mpq_class& x, long p);  // x != 0
long legendre(const mpz_class& a, long p);  // p odd prime, result in {-1, 0, 1}
long sqrt_mod(long a, long p);              // smallest root, p odd prime; -1 if none

// Quadratic Hilbert symbol (a, b)_v over Q_v, in {1, -1}.
int hilbert_qp(const mpq_class& a, const mpq_class& b, long p);
int hilbert_real(const mpq_class& a, const mpq_class& b);
int hilbert(const mpq_class& a, const mpq_class& b, Place v);
// primes at which (a, b) can be nontrivial: 2 and the primes dividing a or b
std::vector<long> bad_primes(const std::vector<mpq_class>& xs);

// Elements x + y sqrt(5) of Q(sqrt 5).
struct QSqrt5 {
    mpq_class x, y;
    QSqrt5() = default;
    QSqrt5(mpq_class a, mpq_class b = 0) : x(std::move(a)), y(std::move(b)) { x.canonicalize(); y.canonicalize(); }
    mpq_class norm() const { return x * x - 5 * y * y; }
    QSqrt5 conj() const { return {x, -y}; }
    bool is_zero() const { return x == 0 && y == 0; }
    std::string str() const;
    friend QSqrt5 operator+(const QSqrt5& a, const QSqrt5& b) { return {a.x + b.x, a.y + b.y}; }
    friend QSqrt5 operator-(const QSqrt5& a, const QSqrt5& b) { return {a.x - b.x, a.y - b.y}; }
    friend QSqrt5 operator*(const QSqrt5& a, const QSqrt5& b) { return {a.x * b.x + 5 * a.y * b.y, a.x * b.y + a.y * b.x}; }
    friend QSqrt5 operator/(const QSqrt5& a, const QSqrt5& b);
    friend bool operator==(const QSqrt5& a, const QSqrt5& b) { return a.x == b.x && a.y == b.y; }
};

// Places of Q(sqrt 5).
struct QuadPlace {
    enum class Kind { real, split, inert, ramified };
    Kind kind = Kind::real;
    long p = 0;
    // real: +1 or -1, the image of sqrt 5; split: the root r of r^2 = 5 mod p
    // with sqrt 5 -> r in the completion (r in [0, p))
    long branch = 1;
    std::string str() const;
};
std::vector<QuadPlace> places_above(Place v);
int sign_at(const QSqrt5& a, int branch);  // sign of x + branch * y * |sqrt 5|
int valuation_at(const QSqrt5& a, const QuadPlace& w);
int hilbert_sqrt5(const QSqrt5& a, const QSqrt5& b, const QuadPlace& w);

// Local Artin symbol (a, Q_v(zeta_m)/Q_v) as an element of (Z/m)^*, reduced
// modulo the subgroup H (the smallest representative of the coset). A
// uniformiser p acts as Frobenius on the part of m prime to p, a unit u acts
// as u^-1 on the p-power part, and at the real place a acts as sign(a).
long artin_cyclotomic(const mpq_class& a, Place v, long m, const std::vector<long>& H = {1});
// i / n mod 1 where coset = g^i H and n is the order of g H; throws
// std::invalid_argument if coset is not a power of g modulo H.
mpq_class cyclic_symbol_invariant(long coset, long g, long m, const std::vector<long>& H = {1});

// a/b, reduced, for values in Q/Z taken in [0, 1)
mpq_class mod_one(mpq_class x);
std::string frac_str(const mpq_class& x);

}  // namespace brauer
