#include "brauer/line_geometry.hpp"

#include <algorithm>

namespace brauer {

namespace {

std::array<int, 2> pair_of(int line) {
    int k = 5;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b, ++k)
            if (k == line) return {a, b};
    throw std::invalid_argument("not a line L_ij");
}

void check_line(int l) {
    if (l < 0 || l >= kLines) throw std::invalid_argument("line index out of range");
}

}  // namespace

std::string line_name(int line) {
    check_line(line);
    if (line < 5) return "E" + std::to_string(line + 1);
    if (line == 15) return "C";
    auto p = pair_of(line);
    return "L" + std::to_string(p[0]) + std::to_string(p[1]);
}

int line_index(const std::string& name) {
    for (int l = 0; l < kLines; ++l)
        if (line_name(l) == name) return l;
    throw std::invalid_argument("unknown line " + name);
}

std::array<int, 6> line_class(int line) {
    check_line(line);
    std::array<int, 6> c{};
    if (line < 5) {
        c[line + 1] = 1;
    } else if (line == 15) {
        c = {2, -1, -1, -1, -1, -1};
    } else {
        auto p = pair_of(line);
        c[0] = 1;
        c[p[0]] = -1;
        c[p[1]] = -1;
    }
    return c;
}

int line_primed_set(int line) {
    check_line(line);
    if (line < 5) return 31 & ~(1 << line);
    if (line == 15) return 0;
    auto p = pair_of(line);
    return (1 << (p[0] - 1)) | (1 << (p[1] - 1));
}

int line_with_primed_set(int mask) {
    for (int l = 0; l < kLines; ++l)
        if (line_primed_set(l) == mask) return l;
    throw std::invalid_argument("no line has this primed set");
}

Vec line_pic_class(int line) {
    // half of the sum of -[e_j] over unprimed j and +[e_j] over primed j
    int s = line_primed_set(line);
    std::array<Int, 5> x;
    for (int j = 0; j < 5; ++j) x[j] = (s >> j & 1) ? 1 : -1;
    return pic_from_doubled(x);
}

int pic_x_pairing(const std::array<int, 6>& a, const std::array<int, 6>& b) {
    int r = a[0] * b[0];
    for (int i = 1; i < 6; ++i) r -= a[i] * b[i];
    return r;
}

int incidence(int a, int b) {
    if (a == b) throw std::invalid_argument("incidence of a line with itself");
    return pic_x_pairing(line_class(a), line_class(b));
}

bool Quadrilateral::contains_conic() const { return std::find(lines.begin(), lines.end(), 15) != lines.end(); }

namespace {

struct QuadData {
    std::vector<Quadrilateral> quads;
    IntMatrix q;
};

const QuadData& quad_data() {
    static const QuadData d = [] {
        QuadData r;
        for (int a = 0; a < kLines; ++a)
            for (int b = a + 1; b < kLines; ++b)
                for (int c = b + 1; c < kLines; ++c)
                    for (int e = c + 1; e < kLines; ++e) {
                        std::array<int, 4> v{a, b, c, e};
                        int meets = 0;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) meets += incidence(v[i], v[j]);
                        if (meets != 4) continue;
                        // cyclic order starting at a: a, its smaller neighbour, the opposite line, the other neighbour
                        std::vector<int> nb, opp;
                        for (int i = 1; i < 4; ++i) (incidence(a, v[i]) ? nb : opp).push_back(v[i]);
                        if (nb.size() != 2) throw std::logic_error("four meetings that are not a cycle");
                        r.quads.push_back({{a, nb[0], opp[0], nb[1]}});
                    }
        r.q = IntMatrix(kLines, r.quads.size());
        for (std::size_t j = 0; j < r.quads.size(); ++j)
            for (int l : r.quads[j].lines) r.q(l, j) = 1;
        return r;
    }();
    return d;
}

}  // namespace

const std::vector<Quadrilateral>& quadrilaterals() { return quad_data().quads; }
const IntMatrix& quad_matrix() { return quad_data().q; }

int quadrilateral_index(std::array<int, 4> lines) {
    std::sort(lines.begin(), lines.end());
    const auto& qs = quadrilaterals();
    for (std::size_t j = 0; j < qs.size(); ++j) {
        std::array<int, 4> s = qs[j].lines;
        std::sort(s.begin(), s.end());
        if (s == lines) return static_cast<int>(j);
    }
    return -1;
}

LinePerm line_perm(const SignedPerm& s) {
    LinePerm p;
    for (int l = 0; l < kLines; ++l) {
        int from = line_primed_set(l), to = 0;
        for (int j = 1; j <= 5; ++j) {
            bool primed = (from >> (j - 1) & 1) != (s.sign(j) < 0);
            if (primed) to |= 1 << (s.perm(j) - 1);
        }
        p[l] = line_with_primed_set(to);
    }
    return p;
}

LineAction line_action(const FiniteGroup& group, const std::vector<LinePerm>& gen_perms) {
    if (gen_perms.size() != group.gens().size()) throw std::invalid_argument("one permutation per generator required");
    LineAction a{group, std::vector<LinePerm>(group.order())};
    for (int l = 0; l < kLines; ++l) a.perm[0][l] = l;
    for (int g : group.bfs_order()) {
        if (g == 0) continue;
        const LinePerm &p = a.perm[group.parent(g)], &s = gen_perms[group.parent_gen(g)];
        for (int l = 0; l < kLines; ++l) a.perm[g][l] = p[s[l]];
    }
    for (int g = 0; g < group.order(); ++g)
        for (std::size_t s = 0; s < gen_perms.size(); ++s) {
            const LinePerm& h = a.perm[group.mul(g, group.gens()[s])];
            for (int l = 0; l < kLines; ++l)
                if (h[l] != a.perm[g][gen_perms[s][l]]) throw std::invalid_argument("line permutations violate a group relation");
        }
    return a;
}

LineAction line_action_from_signed(const Subgroup& g) {
    const WeylD5& w = WeylD5::get();
    std::vector<int> gens = g.gens();
    if (gens.empty()) gens.push_back(0);
    FiniteGroup::Sub sub = w.group().subgroup(gens);
    std::vector<LinePerm> gp;
    for (int s : sub.group.gens()) gp.push_back(line_perm(w.element(sub.embed[s])));
    return line_action(sub.group, gp);
}

std::array<int, kQuads> quad_perm(const LinePerm& p) {
    std::array<int, kQuads> r;
    const auto& qs = quadrilaterals();
    for (int j = 0; j < kQuads; ++j) {
        std::array<int, 4> img;
        for (int i = 0; i < 4; ++i) img[i] = p[qs[j].lines[i]];
        r[j] = quadrilateral_index(img);
        if (r[j] < 0) throw std::invalid_argument("line permutation does not preserve the quadrilaterals");
    }
    return r;
}

LinesPic pic_from_lines(const LineAction& act) {
    Cokernel ck = cokernel(AbHom{FinAbGroup::free(kQuads), FinAbGroup::free(kLines), quad_matrix()});
    std::vector<std::array<int, kQuads>> qp;
    for (const LinePerm& p : act.perm) qp.push_back(quad_perm(p));
    std::vector<IntMatrix> gen_action;
    for (int s : act.group.gens()) {
        IntMatrix pm(kLines, kLines);
        for (int l = 0; l < kLines; ++l) pm(act.perm[s][l], l) = 1;
        gen_action.push_back(ck.proj.matrix * pm * ck.lift);
    }
    GModule m(act.group, ck.group, gen_action);
    return {std::move(m), std::move(ck), std::move(qp)};
}

// ------------------------------------------------------------ the lift

namespace {

// Solver for q x = y through a fixed Smith form of q, in machine integers.
struct QSolver {
    std::vector<long> u, v, d;  // u: 16x16, v: 40x40 (first rank columns used)
    std::size_t rank = 0;

    QSolver() {
        SmithForm s = smith_normal_form(quad_matrix());
        rank = s.rank;
        auto small = [](const Int& x) {
            if (!mpz_fits_slong_p(x.get_mpz_t())) throw std::overflow_error("Smith transform too large");
            return x.get_si();
        };
        for (std::size_t i = 0; i < kLines; ++i)
            for (std::size_t j = 0; j < kLines; ++j) u.push_back(small(s.u(i, j)));
        for (std::size_t i = 0; i < kQuads; ++i)
            for (std::size_t j = 0; j < kQuads; ++j) v.push_back(small(s.v(i, j)));
        for (std::size_t i = 0; i < rank; ++i) d.push_back(small(s.diag(i)));
    }

    static long mul_add(long acc, long a, long b) {
        long p;
        if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc)) throw std::overflow_error("divisor lift overflow");
        return acc;
    }

    std::optional<std::vector<long>> solve(const std::vector<long>& y) const {
        std::vector<long> w(kQuads, 0);
        for (std::size_t i = 0; i < kLines; ++i) {
            long z = 0;
            for (std::size_t j = 0; j < kLines; ++j) z = mul_add(z, u[i * kLines + j], y[j]);
            if (i < rank) {
                if (z % d[i]) return std::nullopt;
                w[i] = z / d[i];
            } else if (z) {
                return std::nullopt;
            }
        }
        std::vector<long> x(kQuads, 0);
        for (std::size_t i = 0; i < kQuads; ++i)
            for (std::size_t j = 0; j < rank; ++j) x[i] = mul_add(x[i], v[i * kQuads + j], w[j]);
        return x;
    }
};

const QSolver& q_solver() {
    static const QSolver s;
    return s;
}

}  // namespace

DivisorLift lift_cocycle_to_divisors(const LinesPic& lp, const LineAction& act, const Cochain1& phi) {
    const GModule& m = lp.module;
    if (!is_cocycle1(m, phi)) throw std::invalid_argument("phi is not a 1-cocycle");
    const FiniteGroup& G = m.group();
    const int n = G.order();
    DivisorLift r;
    std::vector<std::vector<long>> lifted(n, std::vector<long>(kLines));
    r.phi_div.resize(n);
    for (int s = 0; s < n; ++s) {
        r.phi_div[s] = lp.coker.lift * phi[s];
        for (int l = 0; l < kLines; ++l) lifted[s][l] = r.phi_div[s][l].get_si();
    }
    r.dphi.resize(static_cast<std::size_t>(n) * n);
    r.psi.resize(static_cast<std::size_t>(n) * n);
    std::vector<long> y(kLines);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const LinePerm& p = act.perm[s];
            const auto &ft = lifted[t], &fst = lifted[G.mul(s, t)], &fs = lifted[s];
            for (int l = 0; l < kLines; ++l) y[l] = 0;
            for (int l = 0; l < kLines; ++l) y[p[l]] += ft[l];
            for (int l = 0; l < kLines; ++l) y[l] += fs[l] - fst[l];
            auto x = q_solver().solve(y);
            if (!x) throw std::logic_error("coboundary of the lift is not a sum of quadrilaterals");
            std::size_t k = static_cast<std::size_t>(s) * n + t;
            r.dphi[k] = Vec(y.begin(), y.end());
            r.psi[k] = Vec(x->begin(), x->end());
        }
    return r;
}

Vec divisor_of_coboundary(const LinesPic& lp, const LineAction&, const DivCochain2& psi, int s, int t, int u) {
    const FiniteGroup& G = lp.module.group();
    const std::size_t n = G.order();
    const auto& qp = lp.quad_perm[s];
    Vec d(kQuads);
    const Vec& tu = psi[t * n + u];
    for (int j = 0; j < kQuads; ++j) d[qp[j]] += tu[j];
    const Vec &a = psi[G.mul(s, t) * n + u], &b = psi[s * n + G.mul(t, u)], &c = psi[s * n + t];
    for (int j = 0; j < kQuads; ++j) d[j] += b[j] - a[j] - c[j];
    return quad_matrix() * d;
}

}  // namespace brauer
