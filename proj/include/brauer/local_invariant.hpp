// Local invariants in Q/Z of 2-cocycles G x G -> l^* for a Galois extension
// l/k of p-adic fields with G a 2-group. The tame engine only sees valuations
// and residue discrete logarithms; the wild engine works in the finite rings
// O_l / m^n.
#pragma once

#include "brauer/cohomology.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>

namespace brauer {

// --------------------------------------------------------------- tame data

// Finite data of l/k. Residue discrete logs are taken to a fixed generator u
// of the residue field of l; values live in Z/(q-1).
struct LocalExtensionData {
    FiniteGroup group;
    int frobenius = 0;
    long qk = 0;  // residue field size of k
    long q = 0;   // residue field size of l, qk^f
    int f = 1, e = 1;
    std::vector<int> ex;         // per element; Frob^ex(g) = g modulo inertia
    std::vector<long> dlog_pi;   // per element: log_u(g(pi_l) / pi_l)
    long dlog_base = 0;          // log_u(pi / pi_l^e), pi a uniformiser of k

    std::vector<int> inertia() const;  // the elements with ex = 0
};
// Throws std::invalid_argument on the first inconsistency found.
void validate(const LocalExtensionData& d);

// Values (valuation, residue log) of a cocycle, indexed s * |G| + t.
using LocalCocycle = Cochain2;

// M = Z + Z/(q-1) with g acting by [[1, 0], [log_u(g pi_l / pi_l), qk^ex(g)]].
GModule tame_module(const LocalExtensionData& d);
// (0, 0) if ex(s) + ex(t) < f, else (e, dlog_base); invariant 1/f.
LocalCocycle standard_cocycle(const LocalExtensionData& d);

// m/f mod 1 with [c] = m [st]. Data with f < 4 go through
// extend_unramified_4 first. Throws std::invalid_argument for a non-cocycle,
// std::domain_error if torsion * c is not a coboundary, std::runtime_error if
// no multiplier exists.
mpq_class invariant_tame(const LocalExtensionData& d, const LocalCocycle& c, int torsion = 4);

// G' of order 4|G|/f inside G x Z/4: all of it for f = 1, the pairs with
// ex(g) = y mod 2 for f = 2. Elements carry both projections.
struct UnramifiedLift {
    FiniteGroup group;
    std::vector<int> pr1, pr2;
};
UnramifiedLift unramified_4_group(const FiniteGroup& g, const std::vector<int>& ex, int f);

struct ExtendedTame {
    LocalExtensionData data;
    LocalCocycle cocycle;
    std::vector<int> pr1;
};
// Adjoins the unramified extension of degree 4 when f is 1 or 2: f' = 4,
// q' = q^(4/f), logs scaled by (q'-1)/(q-1), c' = c o (pr1 x pr1). For f >= 4
// the input comes back unchanged.
ExtendedTame extend_unramified_4(const LocalExtensionData& d, const LocalCocycle& c);

// c(s^i, s^j) = a if i + j >= |G|, else 0. Throws std::invalid_argument
// unless sigma generates G.
Cochain2 cocycle_from_cyclic_algebra(const FiniteGroup& g, int sigma, const Vec& a);

// Fixtures over k = Q_p, p odd. The generator u of the residue field of l is
// normalised so that its norm to F_p is the smallest primitive root mod p.
//
// l = Q_p(sqrt a); the group has order 1 or 2, with element 1 the conjugation.
LocalExtensionData quadratic_tame(const mpq_class& a, long p);
// l = k_f(pi_l) with k_f unramified of degree f over k and pi_l^e = pi / w
// for a unit w of k with log_u(w) = base_log, a multiple of (q-1)/(qk-1);
// needs e | qk^f - 1. Elements are s^a phi^b (index a + e b) with
// s(pi_l) = zeta_e pi_l, phi the Frobenius fixing pi_l, phi s phi^-1 = s^qk.
LocalExtensionData tame_fixture(long qk, int f, int e, long base_log = 0);
// (valuation, log) of a rational number b in l; needs qk = p.
Vec tame_value(const LocalExtensionData& d, const mpq_class& b);

long primitive_root(long p);
// Baby-step giant-step logarithm of x to base g modulo the prime p.
long discrete_log(long g, long x, long p);

// ------------------------------------------------------------- local rings

using LocalElt = std::vector<long>;

// O_l = W[pi], W the unramified extension of Z_p of degree r, pi a root of
// pi^e = sum_k s_k pi^k with s_k in pW and s_0 / p a unit. W = Z_p[x] / P(x)
// for P the lexicographically first monic irreducible of degree r over F_p.
// Elements are coordinate vectors of length e*r, index k*r + i holding the
// coefficient of x^i pi^k.
struct LocalRingSpec {
    long p = 2;
    int r = 1, e = 1;
    std::vector<LocalElt> eisenstein;  // s_0, ..., s_{e-1}, each of length r
};

// O_l / m^n.
class LocalRing {
public:
    LocalRing(LocalRingSpec spec, int n);

    const LocalRingSpec& spec() const { return spec_; }
    long p() const { return spec_.p; }
    int r() const { return spec_.r; }
    int e() const { return spec_.e; }
    int n() const { return n_; }
    int dim() const { return spec_.e * spec_.r; }
    long modulus(int coord) const { return mod_[coord]; }
    double log2_size() const;

    LocalElt reduce(LocalElt a) const;
    LocalElt from_rational(const mpq_class& x) const;  // p-integral x
    LocalElt zero() const { return LocalElt(dim(), 0); }
    LocalElt one() const { return from_rational(1); }
    LocalElt x() const;   // generator of W
    LocalElt pi() const;  // uniformiser
    LocalElt add(const LocalElt& a, const LocalElt& b) const;
    LocalElt sub(const LocalElt& a, const LocalElt& b) const;
    LocalElt mul(const LocalElt& a, const LocalElt& b) const;
    LocalElt pow(LocalElt a, std::uint64_t k) const;
    bool is_unit(const LocalElt& a) const;
    LocalElt inv(const LocalElt& a) const;  // throws std::domain_error
    // valuation in pi, capped at n
    int valuation(const LocalElt& a) const;
    // a / pi^v for v = valuation(a); the result is known modulo m^(n - v)
    LocalElt unit_part(const LocalElt& a, int& v) const;
    // the ring automorphism acting on W as Frobenius^k and sending pi to
    // pi_image
    LocalElt frobenius(const LocalElt& a, int k) const;
    LocalElt apply(const LocalElt& a, int frob_power, const LocalElt& pi_image) const;
    // residue in F_{p^r}, coefficients mod p packed base p
    long residue(const LocalElt& a) const;
    std::uint64_t encode(const LocalElt& a) const;
    LocalElt decode(std::uint64_t key) const;

    // the same ring at another level n, with elements carried over
    LocalRing at_level(int n) const { return LocalRing(spec_, n); }

    const LocalElt& poly() const { return poly_; }  // P, low degree first, monic

private:
    LocalRingSpec spec_;
    int n_;
    int prec_;  // coordinates computed modulo p^prec_
    long pn_;
    std::vector<long> mod_;
    LocalElt poly_;
    std::vector<std::vector<LocalElt>> frob_pow_;  // [k][i]: Frobenius^k(x)^i in W
    LocalElt eps_inv_;              // p / pi^e, a unit of O_l

    LocalElt wmul(const LocalElt& a, const LocalElt& b) const;
    LocalElt winv(const LocalElt& a) const;
};

// Residue field F_{p^r} = F_p[x]/P with elements packed base p.
long residue_mul(long a, long b, long p, const LocalElt& poly);
// smallest packed element generating F_{p^r}^*
long residue_primitive(long p, const LocalElt& poly);
long residue_log(long g, long x, long p, const LocalElt& poly);

// Unit group of O_l / m^n as mu_{q-1} x (1 + m) / (1 + m^n).
class UnitGroup {
public:
    // Throws std::length_error when the ring has more than 2^24 elements.
    explicit UnitGroup(const LocalRing& ring);
    const FinAbGroup& group() const { return group_; }
    // the partial map pr: coordinates of a unit; std::domain_error otherwise
    Vec pr(const LocalElt& a) const;
    // one lift per generator of group()
    const std::vector<LocalElt>& lifts() const { return lifts_; }

private:
    LocalRing ring_;
    FinAbGroup group_;
    IntMatrix to_group_;
    std::vector<LocalElt> lifts_;
    long q_ = 0, g0_ = 0;
    std::uint64_t one_order_ = 1;  // #(1+m)/(1+m^n)
    std::vector<long> digit_mod_;   // relative orders of the 1-unit generators
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

// --------------------------------------------------------------- wild data

// l/Q_p with unramified part of degree f, so that O_l's ring spec has r = f.
struct WildExtensionData {
    FiniteGroup group;
    int frobenius = 0;
    int f = 1, e = 1;
    std::vector<int> ex;
    LocalRingSpec ring;
    int precision = 40;              // coordinates below are exact mod p^precision
    std::vector<LocalElt> pi_image;  // per element: g(pi_l)
    LocalElt base_ratio;             // p / pi_l^e
};

struct WildValue {
    int valuation = 0;
    LocalElt unit;
};
using WildCocycle = std::vector<WildValue>;  // indexed s * |G| + t

struct WildResult {
    std::optional<mpq_class> invariant;  // empty: the precision n is too small
    int n = 0;
};

struct ExtendedWild {
    WildExtensionData data;
    WildCocycle cocycle;
    std::vector<int> pr1;
};
// Replaces l by l k_4 for f in {1, 2}, keeping pi_l. For f >= 4 the input
// comes back unchanged.
ExtendedWild extend_unramified_4(const WildExtensionData& d, const WildCocycle& c);

// Invariant through O_l / m^n; empty when 2 [st] or, for f > 4, (f/2) [st]
// vanishes there. Throws as invariant_tame does.
WildResult invariant_wild(const WildExtensionData& d, const WildCocycle& c, int n);
// Raises n by one until the result is defined, up to n_cap.
WildResult invariant_wild_auto(const WildExtensionData& d, const WildCocycle& c, int n_start, int n_cap);

WildCocycle cocycle_from_cyclic_algebra(const FiniteGroup& g, int sigma, const WildValue& a);

// l = Q_p(sqrt a) over Q_p (intended for p = 2), as for quadratic_tame.
WildExtensionData quadratic_wild(const mpq_class& a, long p = 2);
// b as (valuation, unit) in l; k = Q_p.
WildValue wild_value(const WildExtensionData& d, const mpq_class& b);

}  // namespace brauer
