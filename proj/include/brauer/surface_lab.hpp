// Open del Pezzo surfaces U = X \ V(X0) of degree four in P^4 over Q, given
// by a pencil of two integral quadrics: point search, the degenerate members
// of the pencil, and local evaluation of Brauer classes given as symbol
// recipes.
#pragma once

#include "brauer/exactlinalg.hpp"
#include "brauer/residue_symbols.hpp"
#include "brauer/weyl_d5.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

using Point = std::array<long, 5>;

// Monomials X_i X_j, i <= j, in the order X0^2, X0X1, ..., X0X4, X1^2, ...
struct QuadForm {
    std::array<long, 15> c{};
    static int monomial(int i, int j);
    Int operator()(const Point& x) const;
    // 2 * the symmetric matrix, an integral Gram matrix
    IntMatrix gram() const;
    std::string str() const;
};

struct PencilSurface {
    QuadForm q1, q2;
    std::string fixture;  // empty or one of fixture_ids()
    bool contains(const Point& x) const { return q1(x) == 0 && q2(x) == 0; }
};

std::string point_str(const Point& x);  // "(1:0:2:-1:-2)"
bool is_primitive(const Point& x);
// Z-integral: X0 = +-1; Z_p-integral: p does not divide X0 != 0 (p = 0: the
// real place, where every point of U counts)
bool is_integral(const Point& x);
bool is_integral_at(const Point& x, Place v);

// All primitive points with max |X_i| <= height, one sign each (first nonzero
// coordinate positive), sorted. Both forms are solved for X4, which must occur
// in at least one of them; otherwise the search enumerates X4 as well.
std::vector<Point> find_points(const PencilSurface& s, long height);

// det(lambda G1 + mu G2) = sum_k a_k lambda^k mu^(5-k) for the Gram matrices.
struct PencilMember {
    Int lambda, mu;  // coprime, first nonzero positive
    int multiplicity = 1;
    int rank = 5;
    std::optional<std::array<Int, 5>> cusp;  // when the rank is 4
};
struct PencilQuintic {
    std::array<Int, 6> coeffs;
    bool degenerate = false;   // identically zero
    bool square_free = false;  // five distinct roots over an algebraic closure
    std::vector<PencilMember> rational_members;
};
PencilQuintic pencil_quintic(const PencilSurface& s);
int quadric_rank(const QuadForm& q);

// Local evaluation maps, each in Q/Z. All throw std::invalid_argument when
// the function value is zero.
//
// (t, k_v(sqrt d) / k_v): 0 or 1/2.
mpq_class ev_2tors_typeI(const mpq_class& t, const mpq_class& d, Place v);
// sum over the places w | v of Q(sqrt 5) of (t, k'_w(sqrt d) / k'_w).
mpq_class ev_2tors_typeII(const QSqrt5& t, const QSqrt5& d, Place v);
// -(t, l_w / Q_v) for the cyclic fields Q(zeta_5) and Q(zeta_17)^+, read
// through the smallest primitive root (2 mod 5, 3 mod 17) as generator.
enum class CyclicField { zeta5, real_zeta17 };
mpq_class ev_4tors_cyclic(const mpq_class& t, CyclicField field, Place v);

enum class RecipeKind { type_I, type_II, cyclic };

// A Brauer class given through a function f = form(x) / X0^deg on U.
struct Recipe {
    std::string name;
    RecipeKind kind = RecipeKind::type_I;
    int degree = 1;
    std::vector<QSqrt5> form;  // 5 coefficients (degree 1) or 15 (degree 2)
    QSqrt5 d;                  // type I (rational) and type II
    CyclicField field = CyclicField::zeta5;
};
QSqrt5 recipe_function(const Recipe& r, const Point& x);
// nullopt where the function vanishes
std::optional<mpq_class> evaluate(const Recipe& r, const Point& x, Place v);
// the places at which the value at x can be nonzero, the real place first
std::vector<Place> reciprocity_places(const Recipe& r, const Point& x);

struct PointEval {
    Point x;
    std::vector<std::pair<Place, mpq_class>> values;  // reciprocity places
    mpq_class total;                                  // sum over them
};
struct PlaceSummary {
    Place v;
    std::map<mpq_class, long> local;     // v-integral points
    std::map<mpq_class, long> integral;  // Z-integral points
    // a value taken v-adically that no Z-integral point takes
    bool violation() const;
};
struct EvalReport {
    std::string recipe;
    std::vector<PointEval> rows;
    std::vector<PlaceSummary> places;
    long skipped = 0;  // points on V(X0) or where the function vanishes
    long reciprocity_failures = 0;
};
EvalReport audit(const Recipe& r, const std::vector<Point>& points, const std::vector<Place>& places);

// The four sample surfaces with their classes and Galois data.
struct Fixture {
    std::string id;
    PencilSurface surface;
    std::vector<Point> listed_points;
    std::vector<Recipe> recipes;
    std::vector<long> bad_primes;
    std::vector<SignedPerm> galois;  // generators of the action on e1..e5
};
const std::vector<std::string>& fixture_ids();
const Fixture& fixture(const std::string& id);  // throws std::invalid_argument
const Recipe& recipe(const Fixture& f, const std::string& name);

// {"q1": [15 integers], "q2": [...], "fixture": "ex421"}; the fixture id is
// optional. Throws std::invalid_argument on malformed input.
PencilSurface parse_surface(const std::string& json_text);

}  // namespace brauer
