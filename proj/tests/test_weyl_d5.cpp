#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauer/weyl_d5.hpp"

#include <map>
#include <random>
#include <set>

using namespace brauer;

namespace {

Subgroup gen(const std::vector<std::vector<int>>& gens) {
    std::vector<SignedPerm> s;
    for (const auto& g : gens) s.push_back(SignedPerm::from(g));
    return Subgroup::generated_by(s);
}

// cyclic of order 4: e1 -> e2 -> -e1, e3 -> -e3
Subgroup quarter_turn() { return gen({{2, -1, -3, 4, 5}}); }
// cyclic of order 8 on e2..e5 with e1 negated
Subgroup eighth_turn() { return gen({{-1, 3, 4, 5, -2}}); }
// cyclic of order 4 mixing both normal forms
Subgroup mixed_four() { return gen({{-1, 3, 2, 5, -4}}); }
// S3 x Z/4: permutations of e1, e2, e3 and e4 -> e5 -> -e4 negating e1, e2, e3
Subgroup s3_times_z4() { return gen({{2, 1, 3, 4, 5}, {2, 3, 1, 4, 5}, {-1, -2, -3, 5, -4}}); }
// dicyclic of order 12 inside S3 x Z/4
Subgroup dicyclic12() { return gen({{2, 3, 1, 4, 5}, {-2, -1, -3, 5, -4}}); }
// all elements fixing index 1, preserving the blocks {2,4}, {3,5}, and
// negating e1 exactly when the blocks are swapped
Subgroup block64() {
    return gen({{1, 4, 3, 2, 5}, {1, 2, 5, 4, 3}, {-1, -3, 2, 5, 4}, {1, -2, -3, 4, 5}, {1, 2, -3, -4, 5}, {1, 2, 3, -4, -5}});
}
Subgroup sign_changes() { return gen({{-1, -2, 3, 4, 5}, {1, -2, -3, 4, 5}, {1, 2, -3, -4, 5}, {1, 2, 3, -4, -5}}); }

int two_rank(const FinAbGroup& g) {
    int r = 0;
    for (const Int& t : g.torsion) r += (t % 2 == 0);
    return r + static_cast<int>(g.free_rank);
}

bool has_z4(const FinAbGroup& g) {
    for (const Int& t : g.torsion)
        if (t % 4 == 0) return true;
    return false;
}

Int exponent_of(const FinAbGroup& g) { return g.torsion.empty() ? Int(1) : g.torsion.back(); }

// P in the plain basis e1..e5 with signed permutation matrices
GModule plain_module(const PicModule& pm) {
    std::vector<IntMatrix> act;
    for (int s : pm.module.group().gens()) {
        const SignedPerm& p = WeylD5::get().element(pm.embed[s]);
        IntMatrix m(5, 5);
        for (int i = 1; i <= 5; ++i) m(p.perm(i) - 1, i - 1) = p.sign(i);
        act.push_back(m);
    }
    return GModule(pm.module.group(), FinAbGroup::free(5), act);
}

}  // namespace

TEST_CASE("signed permutations") {
    SignedPerm a({2, -1, 3, 4, 5});
    CHECK(a.str() == "[2,-1,3,4,5]");
    CHECK((a * a.inverse()) == SignedPerm());
    CHECK(a.in_weyl() == false);
    CHECK(SignedPerm({2, -1, -3, 4, 5}).in_weyl());
    CHECK_THROWS_AS(SignedPerm({1, 1, 3, 4, 5}), std::invalid_argument);
    CHECK(SignedPerm().pic_matrix() == IntMatrix::identity(5));
    Vec h{0, 0, 0, 0, 1};
    auto x = pic_to_doubled(h);
    for (const Int& c : x) CHECK(c == 1);
    CHECK(pic_from_doubled(x) == h);
    CHECK_THROWS_AS(pic_from_doubled({1, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("the full group") {
    const WeylD5& w = WeylD5::get();
    CHECK(w.group().order() == 1920);
    CHECK(w.element(0) == SignedPerm());
    CHECK(w.pic_action(0) == IntMatrix::identity(5));
    for (int i = 0; i < kWeylOrder; ++i) {
        CHECK(w.element(i).in_weyl());
        CHECK(w.element(i).even_on_symbols());
        CHECK(w.index(w.element(i)) == i);
    }
    std::mt19937 rng(4);
    for (int t = 0; t < 200; ++t) {
        int a = rng() % kWeylOrder, b = rng() % kWeylOrder;
        CHECK(w.pic_action(w.group().mul(a, b)) == w.pic_action(a) * w.pic_action(b));
        CHECK(w.element(w.group().mul(a, b)) == w.element(a) * w.element(b));
    }
    CHECK(Subgroup::full().order() == 1920);
}

TEST_CASE("subgroup conjugacy classes") {
    const auto& cls = subgroup_conjugacy_classes();
    CHECK(cls.size() == 197);
    CHECK(cls.front().rep.order() == 1);
    CHECK(cls.back().rep.order() == 1920);
    std::vector<int> max_index;
    for (const auto& c : cls)
        if (c.maximal) max_index.push_back(1920 / c.rep.order());
    std::sort(max_index.begin(), max_index.end());
    CHECK(max_index == std::vector<int>{2, 5, 6, 10, 16});

    // class sizes divide the group order, classes are ordered, representatives
    // lie in their own class
    for (std::size_t i = 0; i < cls.size(); ++i) {
        CHECK(1920 % cls[i].class_size == 0);
        CHECK(class_index(cls[i].rep) == static_cast<int>(i));
        if (i) CHECK(cls[i - 1].rep.order() <= cls[i].rep.order());
    }

    // pairwise non-conjugate: equal fingerprints need an explicit search
    std::map<std::vector<int>, std::vector<int>> by_print;
    for (const auto& c : cls) {
        std::vector<int> fp{c.rep.order(), c.class_size};
        std::vector<int> orders(25);
        for (int x : c.rep.elements()) ++orders[WeylD5::get().group().element_order(x)];
        fp.insert(fp.end(), orders.begin(), orders.end());
        for (const auto& o : s_orbits(c.rep)) fp.push_back(static_cast<int>(o.indices.size()) * 2 + o.split);
        by_print[fp].push_back(c.index);
    }
    int searched = 0;
    for (const auto& [fp, ids] : by_print)
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                CHECK(conjugator(cls[ids[a]].rep, cls[ids[b]].rep) == -1);
                ++searched;
            }
    MESSAGE("fingerprint collisions searched: " << searched);

    // a conjugate of a representative maps back to the same class
    Subgroup q = quarter_turn();
    Subgroup qc = q.conjugate(777);
    CHECK(class_index(q) == class_index(qc));
    int x = conjugator(q, qc);
    REQUIRE(x >= 0);
    CHECK(q.conjugate(x) == qc);
}

TEST_CASE("S-orbits") {
    auto triv = s_orbits(Subgroup());
    REQUIRE(triv.size() == 5);
    for (const auto& o : triv) CHECK(o.split);

    auto q = s_orbits(quarter_turn());
    REQUIRE(q.size() == 4);
    CHECK(q[0].indices == std::vector<int>{1, 2});
    CHECK(!q[0].split);
    CHECK(q[1].indices == std::vector<int>{3});
    CHECK(!q[1].split);
    CHECK(q[2].split);
    CHECK(q[3].split);

    auto f = s_orbits(Subgroup::full());
    REQUIRE(f.size() == 1);
    CHECK(f[0].indices.size() == 5);
    CHECK(!f[0].split);
}

TEST_CASE("H^1 2-torsion by orbits") {
    CHECK(h1_two_torsion(Subgroup::full()).group.is_trivial());
    CHECK(h1_two_torsion(sign_changes()).group == FinAbGroup{0, {2, 2, 2, 2}});
    TwoTorsion q = h1_two_torsion(quarter_turn());
    CHECK(q.group == FinAbGroup::cyclic(2));
    // class of [e3] equals that of [e1] + [e2]
    CHECK(q.group.reduce(q.orbit_class[0]) == q.group.reduce(q.orbit_class[1]));
    CHECK(!q.group.is_zero(q.orbit_class[1]));
    CHECK(h1_full(quarter_turn()).group == FinAbGroup::cyclic(2));
}

TEST_CASE("full H^1 on named groups") {
    CHECK(eighth_turn().order() == 8);
    CHECK(h1_full(eighth_turn()).group == FinAbGroup::cyclic(4));
    CHECK(dicyclic12().order() == 12);
    CHECK(h1_full(dicyclic12()).group == FinAbGroup::cyclic(4));
    CHECK(block64().order() == 64);
    CHECK(h1_full(block64()).group == FinAbGroup::cyclic(4));
    CHECK(h1_full(Subgroup()).group.is_trivial());
    CHECK(h1_full(Subgroup::full()).group.is_trivial());
}

TEST_CASE("census over all classes") {
    const auto& cls = subgroup_conjugacy_classes();
    std::vector<int> hist(5);
    std::set<std::string> shapes;
    int with_z4 = 0, typeI = 0, typeII = 0, overlap = 0;
    std::vector<int> typeII_orders, typeII_z4z2_orders;
    for (const auto& c : cls) {
        CAPTURE(c.index);
        TwoTorsion t = h1_two_torsion(c.rep);
        PicH1 h = h1_full(c.rep);
        int e = two_rank(t.group);
        REQUIRE(e <= 4);
        ++hist[e];
        // the orbit formula and the 2-torsion of the full group agree
        CHECK(two_rank(h.group) == e);
        CHECK(h.group.free_rank == 0);
        CHECK(4 % exponent_of(h.group) == 0);
        shapes.insert(h.group.str());

        // nonvanishing criterion via orbits
        auto orbits = s_orbits(c.rep);
        int nonsplit = 0;
        for (const auto& o : orbits) nonsplit += !o.split;
        CHECK(!h.group.is_trivial() == (orbits.size() > 1 && nonsplit >= 2));

        FourTorsion label = classify_4torsion(c.rep);
        CHECK(has_z4(h.group) == (label != FourTorsion::none));
        if (has_z4(h.group)) {
            ++with_z4;
            CHECK(e - 1 <= 2);
        }
        if (label == FourTorsion::typeI || label == FourTorsion::overlap) ++typeI;
        if (label == FourTorsion::typeII || label == FourTorsion::overlap) {
            ++typeII;
            typeII_orders.push_back(c.rep.order());
            CHECK(e - 1 <= 1);
            if (e == 2) typeII_z4z2_orders.push_back(c.rep.order());
        }
        if (label == FourTorsion::overlap) {
            ++overlap;
            CHECK(c.rep.order() == 4);
        }
    }
    CHECK(hist == std::vector<int>{59, 71, 47, 17, 3});
    CHECK(typeI == 6);
    CHECK(typeII == 8);
    CHECK(overlap == 1);
    std::sort(typeII_orders.begin(), typeII_orders.end());
    CHECK(typeII_orders == std::vector<int>{4, 8, 8, 16, 16, 32, 32, 64});
    std::sort(typeII_z4z2_orders.begin(), typeII_z4z2_orders.end());
    CHECK(typeII_z4z2_orders == std::vector<int>{8, 16});
    CHECK(with_z4 == typeI + typeII - overlap);
    for (const auto& s : shapes) MESSAGE("H^1 shape: " << s);
    CHECK(shapes.size() <= 8);
}

TEST_CASE("annihilation by 4 via crossed homomorphisms") {
    for (const auto& c : subgroup_conjugacy_classes()) {
        CAPTURE(c.index);
        PicModule pm = pic_module(c.rep);
        H1Gen hg = h1_generators(pm.module);
        CHECK(hg.group() == h1_full(c.rep).group);
        CHECK(4 % exponent_of(hg.group()) == 0);
    }
}

TEST_CASE("cochain H^1 agrees for orders up to 32") {
    int n = 0;
    for (const auto& c : subgroup_conjugacy_classes()) {
        if (c.rep.order() > 32) continue;
        CAPTURE(c.index);
        CHECK(h1_cochain(pic_module(c.rep).module).group() == h1_full(c.rep).group);
        ++n;
    }
    MESSAGE(n << " classes of order <= 32");
}

TEST_CASE("4-torsion labels of named groups") {
    CHECK(classify_4torsion(mixed_four()) == FourTorsion::overlap);
    CHECK(classify_4torsion(s3_times_z4()) == FourTorsion::typeI);
    CHECK(s3_times_z4().order() == 24);
    CHECK(classify_4torsion(Subgroup::full()) == FourTorsion::none);
    CHECK(classify_4torsion(block64()) == FourTorsion::typeII);
    CHECK(classify_4torsion(dicyclic12()) == FourTorsion::typeI);

    // the largest groups of each kind and the maximal subgroups of index 5 and 10
    const auto& cls = subgroup_conjugacy_classes();
    const Subgroup *idx5 = nullptr, *idx10 = nullptr;
    for (const auto& c : cls) {
        if (c.maximal && c.rep.order() == 384) idx5 = &c.rep;
        if (c.maximal && c.rep.order() == 192) idx10 = &c.rep;
    }
    REQUIRE(idx5);
    REQUIRE(idx10);
    auto inside_some_conjugate = [](const Subgroup& small, const Subgroup& big) {
        for (int x = 0; x < kWeylOrder; ++x)
            if (big.contains(small.conjugate(x))) return true;
        return false;
    };
    CHECK(inside_some_conjugate(s3_times_z4(), *idx10));
    CHECK(!inside_some_conjugate(s3_times_z4(), *idx5));
    CHECK(inside_some_conjugate(block64(), *idx5));
    CHECK(!inside_some_conjugate(block64(), *idx10));
}

TEST_CASE("cocycles from classes") {
    Subgroup g = s3_times_z4();
    PicModule pm = pic_module(g);
    H1Gen hg = h1_generators(pm.module);
    Cochain1 c = cocycle_of_class(pm, typeI_representative());
    CHECK(is_cocycle1(pm.module, c));
    auto cls = hg.class_of(c);
    REQUIRE(cls);
    CHECK(hg.group().element_order(*cls) == 4);

    // invariant representative gives the zero class
    Vec inv = pic_e(4);
    Cochain1 z = cocycle_of_class(pic_module(gen({{2, 1, 3, 4, 5}})), pic_e(3));
    for (const Vec& v : z) CHECK(v == Vec(5));
    (void)inv;

    PicModule pb = pic_module(block64());
    H1Gen hb = h1_generators(pb.module);
    Cochain1 cb = cocycle_of_class(pb, typeII_representative());
    CHECK(is_cocycle1(pb.module, cb));
    auto clb = hb.class_of(cb);
    REQUIRE(clb);
    CHECK(hb.group().element_order(*clb) == 4);

    CHECK_THROWS_AS(cocycle_of_class(pb, pic_e(2)), std::invalid_argument);
}

TEST_CASE("the two boundary maps agree on the half-sum") {
    // delta(1) from 0 -> P -> P' -> Z/2 -> 0 against the boundary of [e1]+...+[e5]
    // under multiplication by 2, compared in H^1(G, P) with P in the plain basis
    int checked = 0;
    for (const auto& c : subgroup_conjugacy_classes()) {
        if (c.rep.order() > 64 || c.index % 5) continue;
        PicModule pm = pic_module(c.rep);
        GModule plain = plain_module(pm);
        H1Gen hp = h1_generators(plain);
        const int n = plain.group().order();
        Cochain1 d1(n), d2(n);
        for (int s = 0; s < n; ++s) {
            auto x = pic_to_doubled(pm.module.action(s) * Vec{0, 0, 0, 0, 1});
            Vec a(5), b(5);
            for (int i = 0; i < 5; ++i) a[i] = (x[i] - 1) / 2;  // s h - h in e-coordinates
            Vec ones(5, 1);
            Vec sm = plain.action(s) * ones;
            for (int i = 0; i < 5; ++i) b[i] = (sm[i] - 1) / 2;
            d1[s] = a;
            d2[s] = b;
        }
        CHECK(is_cocycle1(plain, d1));
        CHECK(hp.class_of(d1) == hp.class_of(d2));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("type I nontriviality") {
    for (const auto& c : subgroup_conjugacy_classes()) {
        TwoTorsion t = h1_two_torsion(c.rep);
        for (std::size_t j = 0; j < t.orbits.size(); ++j) {
            if (t.orbits[j].indices.size() != 1) continue;
            int i = t.orbits[j].indices[0];
            bool nontriv = typeI_nontrivial(c.rep, i);
            CHECK(nontriv == !t.orbits[j].split);
            CHECK(nontriv == !t.group.is_zero(t.orbit_class[j]));
        }
    }
    CHECK(!typeI_nontrivial(Subgroup(), 3));
    CHECK_THROWS_AS(typeI_nontrivial(quarter_turn(), 1), std::invalid_argument);
}

TEST_CASE("restriction") {
    Subgroup g = s3_times_z4();
    IntMatrix self = restriction_table(g, g);
    CHECK(self == IntMatrix::identity(self.rows()));
    CHECK_THROWS_AS(restriction_table(quarter_turn(), g), std::invalid_argument);

    // a proper 4-torsion class stays of order 4 on subgroups with a Z/4 factor
    const auto& cls = subgroup_conjugacy_classes();
    int pairs = 0;
    for (const auto& big : cls) {
        PicH1 hb = h1_full(big.rep);
        if (!has_z4(hb.group)) continue;
        for (const auto& small : cls) {
            if (small.rep.order() >= big.rep.order() || 1920 % small.rep.order()) continue;
            if (!has_z4(h1_full(small.rep).group)) continue;
            for (int x = 0; x < kWeylOrder; ++x) {
                Subgroup s = small.rep.conjugate(x);
                if (!big.rep.contains(s)) continue;
                IntMatrix r = restriction_table(big.rep, s);
                PicH1 hs = h1_full(s);
                for (std::size_t j = 0; j < hb.lifts.size(); ++j) {
                    if (hb.group.modulus(j) != 4) continue;
                    CHECK(hs.group.element_order(hs.group.reduce(r.col(j))) == 4);
                }
                ++pairs;
                break;
            }
        }
    }
    CHECK(pairs > 0);

    // splitting the orbit {1} of the block group leaves a nontrivial 2-torsion image
    Subgroup sub = gen({{1, -2, -3, 4, 5}, {1, 2, 3, -4, -5}});
    IntMatrix r = restriction_table(block64(), sub);
    PicH1 hs = h1_full(sub);
    Vec img = hs.group.reduce(r.col(0));
    CHECK(hs.group.element_order(img) == 2);
}

TEST_CASE("group documents") {
    auto g = parse_generators("[[2,-1,-3,4,5]]");
    REQUIRE(g.size() == 1);
    CHECK(g[0] == SignedPerm({2, -1, -3, 4, 5}));
    CHECK(parse_generators(R"({"generators": [[1,2,3,4,5],[2,1,3,4,5]]})").size() == 2);
    CHECK_THROWS_AS(parse_generators("[[2,-1,3,4,5]]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generators("[[1,2,3]]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generators("[[1,2,3,4"), std::invalid_argument);
}
