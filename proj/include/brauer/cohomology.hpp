// Cohomology of finite groups with coefficients in finitely generated
// abelian groups, via normalized cochains. Modules are written additively;
// for unit groups this means exponents.
#pragma once

#include "brauer/exactlinalg.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace brauer {

// Element 0 is the identity. Elements are indices into the multiplication table.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> gens);

    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    const std::vector<int>& gens() const { return gens_; }
    int element_order(int a) const;
    bool is_abelian() const;

    // g = parent(g) * gens()[parent_gen(g)], a spanning tree of the Cayley graph
    int parent(int g) const { return parent_[g]; }
    int parent_gen(int g) const { return parent_gen_[g]; }
    // elements in BFS order from the identity
    const std::vector<int>& bfs_order() const { return bfs_; }

    // Subgroup on the given parent elements (must be closed); gens are the
    // given generator elements (parent indices). embed[i] = parent index of i.
    struct Sub;
    Sub subgroup(const std::vector<int>& gens) const;

    // Closure of a set of elements.
    std::vector<int> closure(const std::vector<int>& elems) const;

    // Generic construction from elements of any type with a multiplication.
    template <class T, class Mul, class Less = std::less<T>>
    static std::pair<FiniteGroup, std::vector<T>> generate(const T& identity, const std::vector<T>& gens, Mul mul);

    static FiniteGroup cyclic(int n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);  // (x,y) -> x + a.order()*y

private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_, gens_, parent_, parent_gen_, bfs_;
};

struct FiniteGroup::Sub {
    FiniteGroup group;
    std::vector<int> embed;
};

template <class T, class Mul, class Less>
std::pair<FiniteGroup, std::vector<T>> FiniteGroup::generate(const T& identity, const std::vector<T>& gens, Mul mul) {
    std::vector<T> elems{identity};
    std::map<T, int, Less> index{{identity, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const T& g : gens) {
            T x = mul(elems[i], g);
            if (index.emplace(x, static_cast<int>(elems.size())).second) elems.push_back(x);
        }
    std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(mul(elems[i], elems[j]));
    std::vector<int> gi;
    for (const T& g : gens) gi.push_back(index.at(g));
    return {FiniteGroup(std::move(table), std::move(gi)), std::move(elems)};
}

using Cochain1 = std::vector<Vec>;  // indexed by group element
using Cochain2 = std::vector<Vec>;  // indexed by g * order + h

class GModule {
public:
    GModule() = default;
    // gen_action[i] acts on base coordinates for group.gens()[i]. Throws
    // std::invalid_argument when the matrices do not define an action.
    GModule(FiniteGroup group, FinAbGroup base, std::vector<IntMatrix> gen_action);

    const FiniteGroup& group() const { return group_; }
    const FinAbGroup& base() const { return base_; }
    const IntMatrix& action(int g) const { return action_[g]; }
    const std::vector<IntMatrix>& gen_action() const { return gen_action_; }
    Vec act(int g, const Vec& x) const { return base_.reduce(action_[g] * x); }
    std::size_t rank() const { return base_.ngens(); }

    GModule restrict_to(const FiniteGroup::Sub& sub) const;

private:
    FiniteGroup group_;
    FinAbGroup base_;
    std::vector<IntMatrix> gen_action_, action_;
};

Kernel invariants(const GModule& m);

// H^1 as Z^1 / B^1 inside the normalized cochain group C^1 = base^(|G|-1).
class H1 {
public:
    const FinAbGroup& group() const { return sq_.group; }
    std::optional<Vec> class_of(const Cochain1& c) const;
    Cochain1 cocycle_of(const Vec& x) const;

private:
    friend H1 h1_cochain(const GModule& m);
    FinAbGroup base_, c1_;
    int order_ = 0;
    Subquotient sq_;
};

// Throws std::length_error above 64 elements.
H1 h1_cochain(const GModule& m);

// H^1 from crossed homomorphisms determined by their values on generators;
// no size limit. Coordinates: the generator values, concatenated.
class H1Gen {
public:
    const FinAbGroup& group() const { return sq_.group; }
    std::optional<Vec> class_of(const Cochain1& c) const;
    Cochain1 cocycle_of(const Vec& x) const;

private:
    friend H1Gen h1_generators(const GModule& m);
    FinAbGroup base_, cg_;
    std::vector<int> gens_;
    std::vector<IntMatrix> path_;  // f(g) = path_[g] * (f(s_1), ..., f(s_r))
    Subquotient sq_;
};

H1Gen h1_generators(const GModule& m);

bool is_cocycle1(const GModule& m, const Cochain1& c);
// Returns the first violating triple (s, t, u) if any.
std::optional<std::array<int, 3>> cocycle2_violation(const GModule& m, const Cochain2& c);
bool is_cocycle2(const GModule& m, const Cochain2& c);
Cochain2 coboundary(const GModule& m, const Cochain1& c);
Cochain1 zero_cochain1(const GModule& m);
Cochain2 zero_cochain2(const GModule& m);
// c - delta(constant c(1,1)): vanishes whenever an argument is the identity.
Cochain2 normalize_cocycle(const GModule& m, const Cochain2& c);

// Smallest k >= 0 with c1 - k*c2 a coboundary; nullopt if there is none.
// Throws std::invalid_argument naming the triple when an input is not a cocycle.
std::optional<Int> h2_class_compare(const GModule& m, const Cochain2& c1, const Cochain2& c2);
bool is_coboundary2(const GModule& m, const Cochain2& c);

struct Restricted {
    GModule module;
    H1 h1;
    Vec cls;
};
// Restriction of an H^1 class to the subgroup generated by sub_gens.
Restricted restrict_class(const GModule& m, const H1& h, const Vec& x, const std::vector<int>& sub_gens);

// Corestriction H^1(H, M) -> H^1(G, M) on cochains, via a left transversal.
Vec corestrict_class(const GModule& m, const std::vector<int>& sub_gens, const H1& sub_h1, const Vec& x, const H1& h);

// Norm map (M/2M)^H -> (M/2M)^G for [G:H] = 2, representatives mod 2.
Vec corestrict_2tors(const GModule& m, const std::vector<int>& sub_elems, const Vec& x);

}  // namespace brauer
