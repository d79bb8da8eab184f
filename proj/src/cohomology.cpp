#include "brauer/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace brauer {

// ------------------------------------------------------------ FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> gens)
    : mul_(std::move(table)), gens_(std::move(gens)) {
    const int n = order();
    for (int x = 0; x < n; ++x)
        if (mul_[0][x] != x || mul_[x][0] != x) throw std::invalid_argument("element 0 is not the identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == 0) {
                inv_[a] = b;
                break;
            }
    parent_.assign(n, -1);
    parent_gen_.assign(n, -1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    bfs_ = {0};
    for (std::size_t i = 0; i < bfs_.size(); ++i)
        for (std::size_t s = 0; s < gens_.size(); ++s) {
            int y = mul_[bfs_[i]][gens_[s]];
            if (!seen[y]) {
                seen[y] = 1;
                parent_[y] = bfs_[i];
                parent_gen_[y] = static_cast<int>(s);
                bfs_.push_back(y);
            }
        }
    if (static_cast<int>(bfs_.size()) != n) throw std::invalid_argument("generators do not generate the group");
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul_[x][a]) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a : gens_)
        for (int b : gens_)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& elems) const {
    std::vector<char> in(order(), 0);
    std::vector<int> out{0};
    in[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int g : elems) {
            int y = mul_[out[i]][g];
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    return out;
}

FiniteGroup::Sub FiniteGroup::subgroup(const std::vector<int>& gens) const {
    std::vector<int> elems = closure(gens);
    std::vector<int> pos(order(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = pos[mul_[elems[i]][elems[j]]];
    std::vector<int> g;
    for (int x : gens) g.push_back(pos[x]);
    return Sub{FiniteGroup(std::move(t), std::move(g)), elems};
}

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t), n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
    std::vector<int> g;
    for (int s : a.gens()) g.push_back(s);
    for (int s : b.gens()) g.push_back(na * s);
    return FiniteGroup(std::move(t), std::move(g));
}

// ---------------------------------------------------------------- GModule

namespace {

IntMatrix reduce_rows(IntMatrix a, const FinAbGroup& base) {
    for (std::size_t i = base.free_rank; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j), base.torsion[i - base.free_rank]);
    return a;
}

}  // namespace

GModule::GModule(FiniteGroup group, FinAbGroup base, std::vector<IntMatrix> gen_action)
    : group_(std::move(group)), base_(std::move(base)), gen_action_(std::move(gen_action)) {
    const std::size_t k = base_.ngens();
    if (gen_action_.size() != group_.gens().size()) throw std::invalid_argument("one action matrix per generator required");
    for (auto& a : gen_action_) {
        if (a.rows() != k || a.cols() != k) throw std::invalid_argument("action matrix has wrong shape");
        if (!AbHom{base_, base_, a}.well_defined()) throw std::invalid_argument("action matrix does not respect relations");
        a = reduce_rows(a, base_);
    }
    action_.assign(group_.order(), IntMatrix());
    action_[0] = IntMatrix::identity(k);
    for (int g : group_.bfs_order()) {
        if (g == 0) continue;
        action_[g] = reduce_rows(action_[group_.parent(g)] * gen_action_[group_.parent_gen(g)], base_);
    }
    for (int g = 0; g < group_.order(); ++g)
        for (std::size_t s = 0; s < gen_action_.size(); ++s) {
            int h = group_.mul(g, group_.gens()[s]);
            if (reduce_rows(action_[g] * gen_action_[s], base_) != action_[h])
                throw std::invalid_argument("generator matrices violate a group relation");
        }
}

GModule GModule::restrict_to(const FiniteGroup::Sub& sub) const {
    std::vector<IntMatrix> ga;
    for (int s : sub.group.gens()) ga.push_back(action_[sub.embed[s]]);
    return GModule(sub.group, base_, ga);
}

Kernel invariants(const GModule& m) {
    const std::size_t k = m.rank(), r = m.group().gens().size();
    std::vector<Int> tm;
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t i = 0; i < k; ++i) tm.push_back(m.base().modulus(i));
    IntMatrix h(k * r, k);
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) h(s * k + i, j) = m.gen_action()[s](i, j) - (i == j ? 1 : 0);
    IntMatrix gens = kernel_generators(h, m.base().moduli(), tm);
    return subgroup(m.base(), gens);
}

// ------------------------------------------------------------- cochains

namespace {

std::vector<Int> repeat_moduli(const FinAbGroup& base, std::size_t times) {
    std::vector<Int> m;
    for (std::size_t t = 0; t < times; ++t)
        for (std::size_t i = 0; i < base.ngens(); ++i) m.push_back(base.modulus(i));
    return m;
}

// d1 on normalized cochains: rows (g,h) with g,h != 1; columns g != 1.
IntMatrix d1_matrix(const GModule& m) {
    const int n = m.group().order();
    const std::size_t k = m.rank();
    IntMatrix d(static_cast<std::size_t>(n - 1) * (n - 1) * k, static_cast<std::size_t>(n - 1) * k);
    for (int g = 1; g < n; ++g)
        for (int h = 1; h < n; ++h) {
            std::size_t row = (static_cast<std::size_t>(g - 1) * (n - 1) + (h - 1)) * k;
            const IntMatrix& a = m.action(g);
            // g.c(h)
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) d(row + i, (h - 1) * k + j) += a(i, j);
            int gh = m.group().mul(g, h);
            if (gh != 0)
                for (std::size_t i = 0; i < k; ++i) d(row + i, (gh - 1) * k + i) -= 1;
            for (std::size_t i = 0; i < k; ++i) d(row + i, (g - 1) * k + i) += 1;
        }
    return d;
}

Vec flatten1(const Cochain1& c, std::size_t k) {
    Vec v;
    v.reserve((c.size() - 1) * k);
    for (std::size_t g = 1; g < c.size(); ++g) {
        if (c[g].size() != k) throw std::invalid_argument("cochain value has wrong length");
        v.insert(v.end(), c[g].begin(), c[g].end());
    }
    return v;
}

Vec flatten2(const Cochain2& c, int n, std::size_t k) {
    Vec v;
    v.reserve(static_cast<std::size_t>(n - 1) * (n - 1) * k);
    for (int g = 1; g < n; ++g)
        for (int h = 1; h < n; ++h) {
            const Vec& x = c[static_cast<std::size_t>(g) * n + h];
            if (x.size() != k) throw std::invalid_argument("cochain value has wrong length");
            v.insert(v.end(), x.begin(), x.end());
        }
    return v;
}

Vec add(const FinAbGroup& b, const Vec& x, const Vec& y, const Int& cy = 1) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + cy * y[i];
    return b.reduce(r);
}

}  // namespace

Cochain1 zero_cochain1(const GModule& m) { return Cochain1(m.group().order(), Vec(m.rank())); }

Cochain2 zero_cochain2(const GModule& m) {
    std::size_t n = m.group().order();
    return Cochain2(n * n, Vec(m.rank()));
}

bool is_cocycle1(const GModule& m, const Cochain1& c) {
    const int n = m.group().order();
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            Vec lhs = c[m.group().mul(g, h)];
            Vec rhs = add(m.base(), c[g], m.act(g, c[h]));
            if (!m.base().is_zero(add(m.base(), lhs, rhs, -1))) return false;
        }
    return true;
}

Cochain2 coboundary(const GModule& m, const Cochain1& c) {
    const int n = m.group().order();
    Cochain2 d(static_cast<std::size_t>(n) * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            Vec v = add(m.base(), m.act(g, c[h]), c[m.group().mul(g, h)], -1);
            d[static_cast<std::size_t>(g) * n + h] = add(m.base(), v, c[g]);
        }
    return d;
}

std::optional<std::array<int, 3>> cocycle2_violation(const GModule& m, const Cochain2& c) {
    const int n = m.group().order();
    if (c.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("2-cochain has wrong size");
    auto at = [&](int a, int b) -> const Vec& { return c[static_cast<std::size_t>(a) * n + b]; };
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int st = m.group().mul(s, t);
            for (int u = 0; u < n; ++u) {
                // s.c(t,u) - c(st,u) + c(s,tu) - c(s,t)
                Vec v = m.act(s, at(t, u));
                v = add(m.base(), v, at(st, u), -1);
                v = add(m.base(), v, at(s, m.group().mul(t, u)));
                v = add(m.base(), v, at(s, t), -1);
                if (!m.base().is_zero(v)) return std::array<int, 3>{s, t, u};
            }
        }
    return std::nullopt;
}

bool is_cocycle2(const GModule& m, const Cochain2& c) { return !cocycle2_violation(m, c); }

Cochain2 normalize_cocycle(const GModule& m, const Cochain2& c) {
    const int n = m.group().order();
    Cochain1 b(n, c[0]);
    Cochain2 d = coboundary(m, b);
    Cochain2 r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = add(m.base(), c[i], d[i], -1);
    return r;
}

// -------------------------------------------------------------------- H^1

H1 h1_cochain(const GModule& m) {
    const int n = m.group().order();
    if (n > 64) throw std::length_error("cochain H^1 limited to groups of order <= 64");
    const std::size_t k = m.rank();
    H1 h;
    h.base_ = m.base();
    h.order_ = n;
    std::vector<Int> m1 = repeat_moduli(m.base(), n - 1), m2 = repeat_moduli(m.base(), static_cast<std::size_t>(n - 1) * (n - 1));
    IntMatrix d1 = d1_matrix(m);
    IntMatrix z1 = kernel_generators(d1, m1, m2);
    // B^1: image of m -> (g m - m)_g
    IntMatrix b1(static_cast<std::size_t>(n - 1) * k, k);
    for (int g = 1; g < n; ++g)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) b1((g - 1) * k + i, j) = m.action(g)(i, j) - (i == j ? 1 : 0);
    h.sq_ = subquotient(m1, z1, b1);
    return h;
}

std::optional<Vec> H1::class_of(const Cochain1& c) const { return sq_.coords(flatten1(c, base_.ngens())); }

Cochain1 H1::cocycle_of(const Vec& x) const {
    const std::size_t k = base_.ngens();
    Vec flat = sq_.reps * sq_.group.reduce(x);
    Cochain1 c(order_, Vec(k));
    for (int g = 1; g < order_; ++g) {
        Vec v(flat.begin() + (g - 1) * k, flat.begin() + g * k);
        c[g] = base_.reduce(v);
    }
    return c;
}

H1Gen h1_generators(const GModule& m) {
    const FiniteGroup& G = m.group();
    const int n = G.order();
    const std::size_t k = m.rank(), r = G.gens().size();
    H1Gen h;
    h.base_ = m.base();
    h.gens_ = G.gens();
    h.path_.assign(n, IntMatrix(k, k * r));
    for (int g : G.bfs_order()) {
        if (g == 0) continue;
        int p = G.parent(g), s = G.parent_gen(g);
        IntMatrix c = h.path_[p];
        const IntMatrix& a = m.action(p);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) c(i, s * k + j) += a(i, j);
        h.path_[g] = std::move(c);
    }
    // constraints f(g s) = f(g) + g f(s) on non-tree edges
    std::vector<Vec> rows;
    std::vector<Int> mods;
    for (int g = 0; g < n; ++g)
        for (std::size_t s = 0; s < r; ++s) {
            int gs = G.mul(g, G.gens()[s]);
            if (G.parent(gs) == g && G.parent_gen(gs) == static_cast<int>(s)) continue;
            IntMatrix c = h.path_[gs] - h.path_[g];
            const IntMatrix& a = m.action(g);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) c(i, s * k + j) -= a(i, j);
            for (std::size_t i = 0; i < k; ++i) {
                Vec row = c.row(i);
                if (std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; })) continue;
                rows.push_back(std::move(row));
                mods.push_back(m.base().modulus(i));
            }
        }
    IntMatrix cons(rows.size(), k * r);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < k * r; ++j) cons(i, j) = rows[i][j];
    std::vector<Int> mg = repeat_moduli(m.base(), r);
    IntMatrix z1 = kernel_generators(cons, mg, mods);
    IntMatrix b1(k * r, k);
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) b1(s * k + i, j) = m.gen_action()[s](i, j) - (i == j ? 1 : 0);
    h.sq_ = subquotient(mg, z1, b1);
    return h;
}

std::optional<Vec> H1Gen::class_of(const Cochain1& c) const {
    Vec v;
    for (int s : gens_) v.insert(v.end(), c[s].begin(), c[s].end());
    return sq_.coords(v);
}

Cochain1 H1Gen::cocycle_of(const Vec& x) const {
    Vec v = sq_.reps * sq_.group.reduce(x);
    Cochain1 c(path_.size());
    for (std::size_t g = 0; g < path_.size(); ++g) c[g] = base_.reduce(path_[g] * v);
    return c;
}

// -------------------------------------------------------------------- H^2

namespace {

void require_cocycle(const GModule& m, const Cochain2& c, const char* what) {
    if (auto v = cocycle2_violation(m, c))
        throw std::invalid_argument(std::string(what) + " is not a 2-cocycle at (" + std::to_string((*v)[0]) + "," +
                                    std::to_string((*v)[1]) + "," + std::to_string((*v)[2]) + ")");
}

}  // namespace

bool is_coboundary2(const GModule& m, const Cochain2& c) {
    const int n = m.group().order();
    Cochain2 cn = normalize_cocycle(m, c);
    std::vector<Int> m2 = repeat_moduli(m.base(), static_cast<std::size_t>(n - 1) * (n - 1));
    return static_cast<bool>(solve_system(d1_matrix(m), flatten2(cn, n, m.rank()), m2));
}

std::optional<Int> h2_class_compare(const GModule& m, const Cochain2& c1, const Cochain2& c2) {
    require_cocycle(m, c1, "first argument");
    require_cocycle(m, c2, "second argument");
    const int n = m.group().order();
    const std::size_t k = m.rank();
    Vec y1 = flatten2(normalize_cocycle(m, c1), n, k);
    Vec y2 = flatten2(normalize_cocycle(m, c2), n, k);
    IntMatrix d = d1_matrix(m);
    // unknowns (x, t): d x + t c2 = c1
    IntMatrix a(d.rows(), d.cols() + 1);
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) a(i, j) = d(i, j);
        a(i, d.cols()) = y2[i];
    }
    std::vector<Int> m2 = repeat_moduli(m.base(), static_cast<std::size_t>(n - 1) * (n - 1));
    auto sol = solve_affine(a, y1, m2);
    if (!sol) return std::nullopt;
    Int t0 = sol->particular.back();
    Int g = 0;
    for (std::size_t j = 0; j < sol->kernel.cols(); ++j) g = gcd(g, sol->kernel(d.cols(), j));
    if (g == 0) {
        if (t0 < 0) return std::nullopt;
        return t0;
    }
    return mod_floor(t0, g);
}

// ------------------------------------------------- restriction, corestriction

Restricted restrict_class(const GModule& m, const H1& h, const Vec& x, const std::vector<int>& sub_gens) {
    FiniteGroup::Sub sub = m.group().subgroup(sub_gens);
    Restricted r{m.restrict_to(sub), H1{}, {}};
    r.h1 = h1_cochain(r.module);
    Cochain1 c = h.cocycle_of(x);
    Cochain1 cr(sub.embed.size());
    for (std::size_t i = 0; i < sub.embed.size(); ++i) cr[i] = c[sub.embed[i]];
    auto cls = r.h1.class_of(cr);
    if (!cls) throw std::logic_error("restricted cochain is not a cocycle");
    r.cls = *cls;
    return r;
}

Vec corestrict_class(const GModule& m, const std::vector<int>& sub_gens, const H1& sub_h1, const Vec& x, const H1& h) {
    const FiniteGroup& G = m.group();
    FiniteGroup::Sub sub = G.subgroup(sub_gens);
    const int n = G.order();
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < sub.embed.size(); ++i) pos[sub.embed[i]] = static_cast<int>(i);
    // left transversal and coset index of each element
    std::vector<int> reps, coset(n, -1);
    for (int g = 0; g < n; ++g) {
        if (coset[g] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int e : sub.embed) coset[G.mul(g, e)] = c;
    }
    Cochain1 f = sub_h1.cocycle_of(x);
    Cochain1 out(n, Vec(m.rank()));
    for (int g = 0; g < n; ++g) {
        Vec acc(m.rank());
        for (int t : reps) {
            int gt = G.mul(g, t);
            int tj = reps[coset[gt]];
            int hh = G.mul(G.inv(tj), gt);
            acc = add(m.base(), acc, m.act(tj, f[pos[hh]]));
        }
        out[g] = acc;
    }
    auto cls = h.class_of(out);
    if (!cls) throw std::logic_error("corestricted cochain is not a cocycle");
    return *cls;
}

Vec corestrict_2tors(const GModule& m, const std::vector<int>& sub_elems, const Vec& x) {
    const int n = m.group().order();
    if (static_cast<int>(sub_elems.size()) * 2 != n) throw std::invalid_argument("corestriction needs an index-2 subgroup");
    std::vector<char> in(n, 0);
    for (int e : sub_elems) in[e] = 1;
    auto mod2 = [](Vec v) {
        for (auto& c : v) c = mod_floor(c, 2);
        return v;
    };
    for (int e : sub_elems) {
        Vec d = m.act(e, x);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= x[i];
        if (mod2(d) != Vec(d.size())) throw std::invalid_argument("class representative is not invariant under the subgroup");
    }
    int t = 0;
    while (in[t]) ++t;
    Vec y = m.act(t, x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += x[i];
    return mod2(y);
}

}  // namespace brauer
