#include "brauer/weyl_d5.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace brauer {

// ------------------------------------------------------------ SignedPerm

SignedPerm::SignedPerm(const std::array<int, 5>& images) {
    int seen = 0;
    for (int i = 0; i < 5; ++i) {
        int a = images[i] < 0 ? -images[i] : images[i];
        if (a < 1 || a > 5 || (seen >> a & 1)) throw std::invalid_argument("not a signed permutation of 1..5");
        seen |= 1 << a;
        img_[i] = static_cast<std::int8_t>(images[i]);
    }
}

SignedPerm SignedPerm::from(const std::vector<int>& images) {
    if (images.size() != 5) throw std::invalid_argument("a signed permutation needs 5 images");
    return SignedPerm({images[0], images[1], images[2], images[3], images[4]});
}

int SignedPerm::negations() const {
    int n = 0;
    for (auto x : img_) n += x < 0;
    return n;
}

bool SignedPerm::even_on_symbols() const {
    // symbols +e_i -> 2i, -e_i -> 2i+1
    std::array<int, 10> p{};
    for (int i = 0; i < 5; ++i) {
        int j = perm(i + 1) - 1;
        bool neg = img_[i] < 0;
        p[2 * i] = 2 * j + neg;
        p[2 * i + 1] = 2 * j + !neg;
    }
    std::array<bool, 10> done{};
    int transpositions = 0;
    for (int i = 0; i < 10; ++i) {
        if (done[i]) continue;
        int len = 0;
        for (int j = i; !done[j]; j = p[j]) done[j] = true, ++len;
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

SignedPerm SignedPerm::operator*(const SignedPerm& b) const {
    SignedPerm r;
    for (int i = 0; i < 5; ++i) {
        int x = b.img_[i];
        int y = img_[(x < 0 ? -x : x) - 1];
        r.img_[i] = static_cast<std::int8_t>(x < 0 ? -y : y);
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    for (int i = 0; i < 5; ++i) {
        int x = img_[i];
        int j = (x < 0 ? -x : x) - 1;
        r.img_[j] = static_cast<std::int8_t>(x < 0 ? -(i + 1) : i + 1);
    }
    return r;
}

IntMatrix SignedPerm::pic_matrix() const {
    IntMatrix m(5, 5);
    for (int k = 0; k < 5; ++k) {
        Vec b(5);
        b[k] = 1;
        std::array<Int, 5> x = pic_to_doubled(b), y;
        for (int i = 0; i < 5; ++i) y[perm(i + 1) - 1] = sign(i + 1) * x[i];
        Vec c = pic_from_doubled(y);
        for (int i = 0; i < 5; ++i) m(i, k) = c[i];
    }
    return m;
}

std::string SignedPerm::str() const {
    std::string s = "[";
    for (int i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(img_[i]);
    return s + "]";
}

std::array<Int, 5> pic_to_doubled(const Vec& a) {
    std::array<Int, 5> x;
    for (int i = 0; i < 4; ++i) x[i] = 2 * a[i] + a[4];
    x[4] = a[4];
    return x;
}

Vec pic_from_doubled(const std::array<Int, 5>& x) {
    Vec a(5);
    a[4] = x[4];
    for (int i = 0; i < 4; ++i) {
        Int d = x[i] - x[4];
        if (!mpz_even_p(d.get_mpz_t())) throw std::invalid_argument("coordinates of mixed parity");
        a[i] = d / 2;
    }
    return a;
}

Vec pic_e(int i) {
    std::array<Int, 5> x{0, 0, 0, 0, 0};
    x[i - 1] = 2;
    return pic_from_doubled(x);
}

// ----------------------------------------------------------------- WeylD5

namespace {

int perm_code(const std::array<int, 5>& p) {
    int c = 0;
    for (int x : p) c = c * 5 + (x - 1);
    return c;
}

std::vector<std::array<int, 5>> all_perms() {
    std::array<int, 5> p{1, 2, 3, 4, 5};
    std::vector<std::array<int, 5>> r;
    do r.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return r;
}

const std::vector<int>& perm_rank_table() {
    static const std::vector<int> t = [] {
        std::vector<int> r(3125, -1);
        auto ps = all_perms();
        for (std::size_t i = 0; i < ps.size(); ++i) r[perm_code(ps[i])] = static_cast<int>(i);
        return r;
    }();
    return t;
}

int element_code(const SignedPerm& s) {
    std::array<int, 5> p;
    int mask = 0;
    for (int i = 1; i <= 5; ++i) {
        p[i - 1] = s.perm(i);
        if (s.sign(i) < 0) mask |= 1 << (i - 1);
    }
    return perm_rank_table()[perm_code(p)] * 32 + mask;
}

}  // namespace

const WeylD5& WeylD5::get() {
    static const WeylD5 w;
    return w;
}

WeylD5::WeylD5() : code_to_index_(120 * 32, -1) {
    for (const auto& p : all_perms())
        for (int mask = 0; mask < 32; ++mask) {
            if (__builtin_popcount(mask) % 2) continue;
            std::array<int, 5> img;
            for (int i = 0; i < 5; ++i) img[i] = (mask >> i & 1) ? -p[i] : p[i];
            SignedPerm s(img);
            code_to_index_[element_code(s)] = static_cast<int>(elems_.size());
            elems_.push_back(s);
        }
    const int n = kWeylOrder;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = index(elems_[i] * elems_[j]);
    std::vector<int> gens{index(SignedPerm({2, 1, 3, 4, 5})), index(SignedPerm({2, 3, 4, 5, 1})),
                          index(SignedPerm({-1, -2, 3, 4, 5}))};
    conj_.resize(static_cast<std::size_t>(n) * n);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = index(elems_[i].inverse());
    for (int x = 0; x < n; ++x)
        for (int g = 0; g < n; ++g) conj_[x * n + g] = static_cast<std::uint16_t>(table[table[x][g]][inv[x]]);
    group_ = FiniteGroup(std::move(table), gens);
    if (group_.order() != n) throw std::logic_error("W(D5) construction");
    for (const SignedPerm& s : elems_) pic_.push_back(s.pic_matrix());
}

int WeylD5::index(const SignedPerm& s) const {
    int i = code_to_index_[element_code(s)];
    if (i < 0) throw std::invalid_argument(s.str() + " has an odd number of sign changes");
    return i;
}

// --------------------------------------------------------------- Subgroup

namespace {

// closure of set s (a subgroup or {1}) together with extra generators
ElementSet close(const std::vector<int>& start, const std::vector<int>& gens) {
    const FiniteGroup& G = WeylD5::get().group();
    ElementSet set;
    std::vector<int> list{0};
    set[0] = true;
    for (int x : start)
        if (!set[x]) set[x] = true, list.push_back(x);
    for (std::size_t i = 0; i < list.size(); ++i)
        for (int g : gens) {
            int y = G.mul(list[i], g);
            if (!set[y]) set[y] = true, list.push_back(y);
        }
    return set;
}

std::vector<int> to_list(const ElementSet& s) {
    std::vector<int> r;
    for (std::size_t i = s._Find_first(); i < s.size(); i = s._Find_next(i)) r.push_back(static_cast<int>(i));
    return r;
}

ElementSet conjugate_set(const ElementSet& s, int x) {
    const WeylD5& w = WeylD5::get();
    ElementSet r;
    for (std::size_t i = s._Find_first(); i < s.size(); i = s._Find_next(i)) r[w.conj(x, static_cast<int>(i))] = true;
    return r;
}

// lexicographic comparison of the sorted element lists of equal-size sets
bool lex_less(const ElementSet& a, const ElementSet& b) {
    ElementSet d = a ^ b;
    if (d.none()) return false;
    return a[d._Find_first()];
}

}  // namespace

Subgroup::Subgroup(const std::vector<int>& gens) : gens_(gens) {
    set_ = close({}, gens);
    elems_ = to_list(set_);
}

Subgroup Subgroup::generated_by(const std::vector<SignedPerm>& gens) {
    std::vector<int> g;
    for (const SignedPerm& s : gens) g.push_back(WeylD5::get().index(s));
    return Subgroup(g);
}

Subgroup Subgroup::full() { return Subgroup(WeylD5::get().group().gens()); }

Subgroup Subgroup::conjugate(int x) const {
    std::vector<int> g;
    for (int s : gens_) g.push_back(WeylD5::get().conj(x, s));
    return Subgroup(g);
}

std::string Subgroup::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + WeylD5::get().element(gens_[i]).str();
    return s + "]";
}

std::vector<int> canonical_generators(const ElementSet& s) {
    std::vector<int> gens;
    ElementSet cur;
    cur[0] = true;
    while (cur != s) {
        ElementSet rest = s & ~cur;
        int g = static_cast<int>(rest._Find_first());
        gens.push_back(g);
        cur = close(to_list(cur), gens);
    }
    return gens;
}

// ---------------------------------------------------- conjugacy classes

namespace {

struct ClassTable {
    std::vector<SubgroupClass> classes;
    std::unordered_map<ElementSet, int> subgroup_class;  // every subgroup -> class
};

ClassTable build_classes() {
    const FiniteGroup& G = WeylD5::get().group();
    struct Raw {
        ElementSet rep;
        int size;
        bool maximal = false;
    };
    std::vector<Raw> raw;
    std::unordered_map<ElementSet, int> seen;

    auto add = [&](const ElementSet& k) {
        if (seen.count(k)) return;
        int id = static_cast<int>(raw.size());
        ElementSet best = k;
        int size = 0;
        for (int x = 0; x < kWeylOrder; ++x) {
            ElementSet c = conjugate_set(k, x);
            if (seen.emplace(c, id).second) {
                ++size;
                if (lex_less(c, best)) best = c;
            }
        }
        raw.push_back({best, size});
    };

    ElementSet trivial;
    trivial[0] = true;
    add(trivial);
    for (std::size_t w = 0; w < raw.size(); ++w) {
        const ElementSet h = raw[w].rep;
        std::vector<int> hl = to_list(h);
        std::vector<int> hg = canonical_generators(h);
        std::vector<int> normalizer;
        for (int x = 0; x < kWeylOrder; ++x)
            if (conjugate_set(h, x) == h) normalizer.push_back(x);
        ElementSet done = h;
        bool maximal = h.count() < static_cast<std::size_t>(kWeylOrder);
        for (int g = 0; g < kWeylOrder; ++g) {
            if (done[g]) continue;
            std::vector<int> gens = hg;
            gens.push_back(g);
            ElementSet k = close(hl, gens);
            if (k.count() != static_cast<std::size_t>(kWeylOrder)) maximal = false;
            add(k);
            for (int hx : hl) {
                int y = G.mul(hx, g);
                for (int n : normalizer) done[WeylD5::get().conj(n, y)] = true;
            }
        }
        raw[w].maximal = maximal;
    }

    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        std::size_t oa = raw[a].rep.count(), ob = raw[b].rep.count();
        if (oa != ob) return oa < ob;
        return lex_less(raw[a].rep, raw[b].rep);
    });
    std::vector<int> newid(raw.size());
    ClassTable t;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Raw& r = raw[order[i]];
        newid[order[i]] = static_cast<int>(i);
        t.classes.push_back({static_cast<int>(i), Subgroup(canonical_generators(r.rep)), r.size, r.maximal});
    }
    for (auto& [set, id] : seen) t.subgroup_class.emplace(set, newid[id]);
    return t;
}

const ClassTable& class_table() {
    static const ClassTable t = build_classes();
    return t;
}

}  // namespace

const std::vector<SubgroupClass>& subgroup_conjugacy_classes() { return class_table().classes; }

int class_index(const Subgroup& g) { return class_table().subgroup_class.at(g.set()); }

int conjugator(const Subgroup& h, const Subgroup& g) {
    if (h.order() != g.order()) return -1;
    for (int x = 0; x < kWeylOrder; ++x)
        if (conjugate_set(h.set(), x) == g.set()) return x;
    return -1;
}

// ---------------------------------------------------------- the module P

PicModule pic_module(const Subgroup& g) {
    const WeylD5& w = WeylD5::get();
    std::vector<int> gens = g.gens();
    if (gens.empty()) gens.push_back(0);
    FiniteGroup::Sub sub = w.group().subgroup(gens);
    std::vector<IntMatrix> act;
    for (int s : sub.group.gens()) act.push_back(w.pic_action(sub.embed[s]));
    return {g, GModule(sub.group, FinAbGroup::free(5), act), sub.embed};
}

std::vector<SOrbit> s_orbits(const Subgroup& g) {
    const WeylD5& w = WeylD5::get();
    std::array<int, 6> root{};
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int i) {
        while (root[i] != i) i = root[i];
        return i;
    };
    std::array<bool, 6> negated{};
    for (int x : g.elements()) {
        const SignedPerm& s = w.element(x);
        for (int i = 1; i <= 5; ++i) {
            root[find(i)] = find(s.perm(i));
            if (s.image(i) == -i) negated[i] = true;
        }
    }
    std::vector<SOrbit> r;
    for (int i = 1; i <= 5; ++i) {
        if (find(i) != i) continue;
        SOrbit o{{}, true};
        for (int j = 1; j <= 5; ++j)
            if (find(j) == i) {
                o.indices.push_back(j);
                if (negated[j]) o.split = false;
            }
        r.push_back(o);
    }
    std::sort(r.begin(), r.end(), [](const SOrbit& a, const SOrbit& b) { return a.indices < b.indices; });
    return r;
}

TwoTorsion h1_two_torsion(const Subgroup& g) {
    TwoTorsion t;
    t.orbits = s_orbits(g);
    const std::size_t k = t.orbits.size();
    std::vector<Vec> rel;
    rel.push_back(Vec(k, 1));
    for (std::size_t j = 0; j < k; ++j)
        if (t.orbits[j].split) {
            Vec e(k);
            e[j] = 1;
            rel.push_back(e);
        }
    Subquotient sq = subquotient(std::vector<Int>(k, 2), IntMatrix::identity(k), IntMatrix::from_columns(rel, k));
    t.group = sq.group;
    for (std::size_t j = 0; j < k; ++j) {
        Vec e(k);
        e[j] = 1;
        t.orbit_class.push_back(*sq.coords(e));
    }
    return t;
}

namespace {

// rows (s - 1) for the generators of g
IntMatrix fixed_conditions(const Subgroup& g) {
    const WeylD5& w = WeylD5::get();
    std::vector<int> gens = g.gens();
    if (gens.empty()) gens.push_back(0);
    IntMatrix a(5 * gens.size(), 5);
    for (std::size_t s = 0; s < gens.size(); ++s) {
        const IntMatrix& m = w.pic_action(gens[s]);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a(5 * s + i, j) = m(i, j) - (i == j ? 1 : 0);
    }
    return a;
}

}  // namespace

PicH1 h1_full(const Subgroup& g) {
    IntMatrix a = fixed_conditions(g);
    std::vector<Int> four(5, 4);
    IntMatrix inv4 = kernel_generators(a, four, std::vector<Int>(a.rows(), 4));
    IntMatrix inv = kernel_basis(a);
    PicH1 h;
    h.sq = subquotient(four, inv4, inv);
    h.group = h.sq.group;
    for (std::size_t j = 0; j < h.sq.reps.cols(); ++j) h.lifts.push_back(h.sq.reps.col(j));
    return h;
}

Cochain1 cocycle_of_class(const PicModule& pm, const Vec& m) {
    IntMatrix a = fixed_conditions(pm.subgroup);
    for (const Int& v : a * m)
        if (!mpz_divisible_ui_p(v.get_mpz_t(), 4)) throw std::invalid_argument("class representative is not invariant mod 4");
    const int n = pm.module.group().order();
    Cochain1 c(n);
    for (int s = 0; s < n; ++s) {
        Vec d = pm.module.action(s) * m;
        for (int i = 0; i < 5; ++i) {
            d[i] -= m[i];
            mpz_divexact_ui(d[i].get_mpz_t(), d[i].get_mpz_t(), 4);
        }
        c[s] = std::move(d);
    }
    return c;
}

// ------------------------------------------------------ 4-torsion types

std::string to_string(FourTorsion t) {
    switch (t) {
        case FourTorsion::none: return "none";
        case FourTorsion::typeI: return "typeI";
        case FourTorsion::typeII: return "typeII";
        case FourTorsion::overlap: return "overlap";
    }
    return "?";
}

namespace {

// exponent i with s|{4,5} = tau^i, tau: e4 -> e5 -> -e4; -1 if none
int tau_exponent(const SignedPerm& s) {
    int a = s.image(4), b = s.image(5);
    if (a == 4 && b == 5) return 0;
    if (a == 5 && b == -4) return 1;
    if (a == -4 && b == -5) return 2;
    if (a == -5 && b == 4) return 3;
    return -1;
}

bool swaps_blocks(const SignedPerm& s) { return s.perm(2) == 3 || s.perm(2) == 5; }

}  // namespace

bool in_typeI_form(const SignedPerm& s) {
    int i = tau_exponent(s);
    if (i < 0) return false;
    int eps = i % 2 ? -1 : 1;
    for (int j = 1; j <= 3; ++j)
        if (s.perm(j) > 3 || s.sign(j) != eps) return false;
    return true;
}

bool in_typeII_form(const SignedPerm& s) {
    if (s.perm(1) != 1) return false;
    int b2 = s.perm(2), b4 = s.perm(4);
    bool keep = (b2 == 2 || b2 == 4) && (b4 == 2 || b4 == 4);
    bool swap = (b2 == 3 || b2 == 5) && (b4 == 3 || b4 == 5);
    if (!keep && !swap) return false;
    return swap == (s.sign(1) < 0);
}

FourTorsionMatch match_4torsion(const Subgroup& g) {
    const WeylD5& w = WeylD5::get();
    FourTorsionMatch r;
    for (int x = 0; x < kWeylOrder && (r.conj_typeI < 0 || r.conj_typeII < 0); ++x) {
        bool f1 = true, f2 = true, p1 = false, p2 = false;
        for (int s : g.gens()) {
            const SignedPerm& c = w.element(w.conj(x, s));
            f1 = f1 && in_typeI_form(c);
            f2 = f2 && in_typeII_form(c);
            p1 = p1 || (in_typeI_form(c) && tau_exponent(c) % 2 == 1);
            p2 = p2 || (in_typeII_form(c) && swaps_blocks(c));
        }
        if (f1 && p1 && r.conj_typeI < 0) r.conj_typeI = x;
        if (f2 && p2 && r.conj_typeII < 0) r.conj_typeII = x;
    }
    bool t1 = r.conj_typeI >= 0, t2 = r.conj_typeII >= 0;
    r.label = t1 && t2 ? FourTorsion::overlap : t1 ? FourTorsion::typeI : t2 ? FourTorsion::typeII : FourTorsion::none;
    return r;
}

FourTorsion classify_4torsion(const Subgroup& g) { return match_4torsion(g).label; }

Vec typeI_representative() {
    Vec m(5);
    for (int i : {1, 2, 3})
        for (int k = 0; k < 5; ++k) m[k] += pic_e(i)[k];
    for (int k = 0; k < 5; ++k) m[k] += 2 * pic_e(4)[k];
    return m;
}

Vec typeII_representative() {
    Vec m = pic_e(1);
    for (int i : {2, 4})
        for (int k = 0; k < 5; ++k) m[k] += 2 * pic_e(i)[k];
    return m;
}

bool typeI_nontrivial(const Subgroup& g, int i) {
    const WeylD5& w = WeylD5::get();
    for (int s : g.gens())
        if (w.element(s).perm(i) != i) throw std::invalid_argument("{" + std::to_string(i) + "} is not an orbit");
    for (int x : g.elements())
        if (w.element(x).image(i) == -i) return true;
    return false;
}

IntMatrix restriction_table(const Subgroup& g, const Subgroup& h) {
    if (!g.contains(h)) throw std::invalid_argument("restriction to a subgroup that is not contained");
    PicH1 a = h1_full(g), b = h1_full(h);
    IntMatrix r(b.group.ngens(), a.group.ngens());
    for (std::size_t j = 0; j < a.lifts.size(); ++j) {
        Vec c = *b.class_of(a.lifts[j]);
        for (std::size_t i = 0; i < c.size(); ++i) r(i, j) = c[i];
    }
    return r;
}

std::vector<SignedPerm> parse_generators(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed group: ") + e.what());
    }
    if (j.is_object()) {
        if (!j.contains("generators")) throw std::invalid_argument("group object without \"generators\"");
        j = j["generators"];
    }
    if (!j.is_array()) throw std::invalid_argument("generators must be a list");
    std::vector<SignedPerm> r;
    for (const auto& g : j) {
        if (!g.is_array() || g.size() != 5) throw std::invalid_argument("each generator is a list of 5 signed integers");
        std::vector<int> v;
        for (const auto& x : g) {
            if (!x.is_number_integer()) throw std::invalid_argument("each generator is a list of 5 signed integers");
            v.push_back(x.get<int>());
        }
        SignedPerm s = SignedPerm::from(v);
        if (!s.in_weyl()) throw std::invalid_argument(s.str() + " has an odd number of sign changes");
        r.push_back(s);
    }
    return r;
}

}  // namespace brauer
