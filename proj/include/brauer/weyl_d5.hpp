// The Weyl group W(D5) as signed permutations of e1..e5 with an even number
// of sign changes, its action on the Picard lattice
//   P = Z^5 + Z * (1/2)(e1 + ... + e5),
// the table of subgroup conjugacy classes, and orbit formulas for H^1(G, P).
#pragma once

#include "brauer/cohomology.hpp"

#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

namespace brauer {

class SignedPerm {
public:
    SignedPerm() : img_{1, 2, 3, 4, 5} {}
    // images[i] = +-j means e_{i+1} -> +-e_j. Throws std::invalid_argument
    // unless this is a signed permutation of 1..5.
    explicit SignedPerm(const std::array<int, 5>& images);
    static SignedPerm from(const std::vector<int>& images);

    int image(int i) const { return img_[i - 1]; }  // i in 1..5, signed result
    int perm(int i) const { return img_[i - 1] < 0 ? -img_[i - 1] : img_[i - 1]; }
    int sign(int i) const { return img_[i - 1] < 0 ? -1 : 1; }
    int negations() const;
    // even number of sign changes, i.e. an element of W(D5)
    bool in_weyl() const { return negations() % 2 == 0; }
    // parity of the induced permutation of the ten symbols +-e_i
    bool even_on_symbols() const;

    SignedPerm operator*(const SignedPerm& b) const;  // (a*b)(x) = a(b(x))
    SignedPerm inverse() const;
    // action on P in the basis (e1, e2, e3, e4, h), h = (1/2) sum e_i
    IntMatrix pic_matrix() const;
    std::string str() const;  // "[2,-1,3,4,5]"

    auto operator<=>(const SignedPerm&) const = default;

private:
    std::array<std::int8_t, 5> img_;
};

// P in the basis (e1, e2, e3, e4, h). Doubled e-coordinates 2x are integral
// with all entries of the same parity.
std::array<Int, 5> pic_to_doubled(const Vec& a);
Vec pic_from_doubled(const std::array<Int, 5>& x);  // throws on mixed parity
Vec pic_e(int i);                                    // [e_i], i in 1..5

constexpr int kWeylOrder = 1920;
using ElementSet = std::bitset<kWeylOrder>;

// Elements are numbered by (permutation rank, sign mask): the permutation of
// indices in lexicographic rank, then the set of negated positions read as a
// binary number with position 1 as the low bit. Element 0 is the identity.
class WeylD5 {
public:
    static const WeylD5& get();

    const FiniteGroup& group() const { return group_; }
    const SignedPerm& element(int i) const { return elems_[i]; }
    int index(const SignedPerm& s) const;
    const IntMatrix& pic_action(int i) const { return pic_[i]; }
    int conj(int x, int g) const { return conj_[x * kWeylOrder + g]; }  // x g x^-1

private:
    WeylD5();
    std::vector<SignedPerm> elems_;
    std::vector<int> code_to_index_;
    std::vector<IntMatrix> pic_;
    std::vector<std::uint16_t> conj_;
    FiniteGroup group_;
};

class Subgroup {
public:
    Subgroup() : Subgroup(std::vector<int>{}) {}
    // from generators given as element indices
    explicit Subgroup(const std::vector<int>& gens);
    static Subgroup generated_by(const std::vector<SignedPerm>& gens);
    static Subgroup full();

    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }  // sorted
    const std::vector<int>& gens() const { return gens_; }
    const ElementSet& set() const { return set_; }
    bool contains(int g) const { return set_[g]; }
    bool contains(const Subgroup& h) const { return (h.set_ & ~set_).none(); }
    Subgroup conjugate(int x) const;  // x G x^-1
    std::string str() const;          // generator list

    bool operator==(const Subgroup& o) const { return set_ == o.set_; }

private:
    std::vector<int> elems_, gens_;
    ElementSet set_;
};

// Greedy canonical generators: repeatedly add the smallest element outside
// the subgroup generated so far.
std::vector<int> canonical_generators(const ElementSet& s);

struct SubgroupClass {
    int index;
    Subgroup rep;  // lexicographically minimal sorted element list in its class
    int class_size;
    bool maximal;
};

// Sorted by (order, lexicographically minimal element list).
const std::vector<SubgroupClass>& subgroup_conjugacy_classes();
// Index into the class table.
int class_index(const Subgroup& g);
// Some x with x h x^-1 = g, or -1.
int conjugator(const Subgroup& h, const Subgroup& g);

// The Galois module P for a subgroup, together with the local numbering.
struct PicModule {
    Subgroup subgroup;
    GModule module;
    std::vector<int> embed;  // local element -> global element
};
PicModule pic_module(const Subgroup& g);

struct SOrbit {
    std::vector<int> indices;  // subset of 1..5
    bool split;
};
std::vector<SOrbit> s_orbits(const Subgroup& g);

struct TwoTorsion {
    FinAbGroup group;
    std::vector<SOrbit> orbits;
    std::vector<Vec> orbit_class;  // image of sum_{i in O} [e_i] in group
};
TwoTorsion h1_two_torsion(const Subgroup& g);

// H^1(G, P) = (P/4P)^G / image of P^G.
struct PicH1 {
    FinAbGroup group;
    std::vector<Vec> lifts;  // for each generator, a lift in P of an element of (P/4P)^G
    Subquotient sq;
    // class of m mod 4, nullopt if m mod 4 is not invariant
    std::optional<Vec> class_of(const Vec& m) const { return sq.coords(m); }
};
PicH1 h1_full(const Subgroup& g);

// The cocycle s -> (s m - m) / 4 on pm's local numbering. Throws
// std::invalid_argument if m mod 4 is not invariant.
Cochain1 cocycle_of_class(const PicModule& pm, const Vec& m);

enum class FourTorsion { none, typeI, typeII, overlap };
std::string to_string(FourTorsion t);

struct FourTorsionMatch {
    FourTorsion label = FourTorsion::none;
    int conj_typeI = -1;  // x with x G x^-1 in the normal form, or -1
    int conj_typeII = -1;
};
// Membership tests for the two normal forms, on a single element.
bool in_typeI_form(const SignedPerm& s);
bool in_typeII_form(const SignedPerm& s);
FourTorsionMatch match_4torsion(const Subgroup& g);
FourTorsion classify_4torsion(const Subgroup& g);
// representatives in P of the proper 4-torsion classes of each normal form
Vec typeI_representative();
Vec typeII_representative();

// Whether the class of [e_i] is nonzero; {i} must be an orbit.
bool typeI_nontrivial(const Subgroup& g, int i);

// Matrix of restriction H^1(G, P) -> H^1(H, P) on the generators of h1_full.
IntMatrix restriction_table(const Subgroup& g, const Subgroup& h);

// Generators as JSON: [[2,-1,3,4,5], ...] or {"generators": [...]}.
// Throws std::invalid_argument on malformed input or elements outside W(D5).
std::vector<SignedPerm> parse_generators(const std::string& text);

}  // namespace brauer
