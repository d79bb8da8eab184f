// The 16 lines on a degree four del Pezzo surface in the blown-up model,
// their quadrilaterals, and Pic U = Div / <quadrilaterals> as a Galois module.
#pragma once

#include "brauer/weyl_d5.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

constexpr int kLines = 16;
constexpr int kQuads = 40;

// Lines 0..4 are E1..E5, 5..14 are L12, L13, ..., L45, and 15 is C.
std::string line_name(int line);
int line_index(const std::string& name);  // throws std::invalid_argument
// class in Pic X over the basis (L, E1, ..., E5)
std::array<int, 6> line_class(int line);
// the set S of indices j with a primed conic class e'_j in the line's
// half-sum description, as a bit mask over bits 0..4
int line_primed_set(int line);
int line_with_primed_set(int mask);
// class in P, basis (e1, e2, e3, e4, h)
Vec line_pic_class(int line);

int pic_x_pairing(const std::array<int, 6>& a, const std::array<int, 6>& b);
// 1 if the lines meet, 0 otherwise. Throws std::invalid_argument for a == b.
int incidence(int a, int b);

struct Quadrilateral {
    std::array<int, 4> lines;  // in cyclic order, lines[0] the smallest
    bool contains_conic() const;
};
const std::vector<Quadrilateral>& quadrilaterals();
// 16 x 40, one column per quadrilateral
const IntMatrix& quad_matrix();
int quadrilateral_index(std::array<int, 4> lines);  // any order; -1 if none

using LinePerm = std::array<int, kLines>;
LinePerm line_perm(const SignedPerm& s);

// Permutations of the lines for every element of a finite group.
struct LineAction {
    FiniteGroup group;
    std::vector<LinePerm> perm;  // indexed by group element
};
LineAction line_action_from_signed(const Subgroup& g);
// from generator permutations; throws std::invalid_argument if they do not
// define an action of the group
LineAction line_action(const FiniteGroup& group, const std::vector<LinePerm>& gen_perms);
// the induced permutation of the quadrilaterals; throws std::invalid_argument
// if a quadrilateral is not mapped to a quadrilateral
std::array<int, kQuads> quad_perm(const LinePerm& p);

struct LinesPic {
    GModule module;   // cokernel of q with the induced action
    Cokernel coker;   // pr: Div -> Pic U and a section
    std::vector<std::array<int, kQuads>> quad_perm;  // per group element
};
LinesPic pic_from_lines(const LineAction& act);

// psi(s, t) in Z^40 for pairs s * n + t, with q(psi) = delta(phi~).
using DivCochain2 = std::vector<Vec>;
struct DivisorLift {
    Cochain1 phi_div;  // the lift phi~ into Div
    Cochain2 dphi;     // its coboundary, values in Div
    DivCochain2 psi;
};
// Throws std::invalid_argument if phi is not a 1-cocycle.
DivisorLift lift_cocycle_to_divisors(const LinesPic& lp, const LineAction& act, const Cochain1& phi);
// q(delta psi)(s, t, u) for one triple; zero for a valid lift
Vec divisor_of_coboundary(const LinesPic& lp, const LineAction& act, const DivCochain2& psi, int s, int t, int u);

// The lift normalized to 1 at the base point: values / at_base entrywise.
// Throws std::domain_error if a base value vanishes.
template <class F>
std::vector<F> normalize_at_point(const std::vector<F>& at_base, const std::vector<F>& values) {
    if (at_base.size() != values.size()) throw std::invalid_argument("size mismatch");
    std::vector<F> r;
    r.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (at_base[i] == F(0)) throw std::domain_error("cocycle value vanishes at the base point");
        r.push_back(values[i] / at_base[i]);
    }
    return r;
}

}  // namespace brauer
