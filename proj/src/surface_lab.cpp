#include "brauer/surface_lab.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brauer {

// ------------------------------------------------------------------ forms

int QuadForm::monomial(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > 4) throw std::out_of_range("monomial index");
    return 5 * i - i * (i - 1) / 2 + (j - i);
}

Int QuadForm::operator()(const Point& x) const {
    Int s = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            long coef = c[monomial(i, j)];
            if (coef) s += Int(coef) * x[i] * x[j];
        }
    return s;
}

IntMatrix QuadForm::gram() const {
    IntMatrix g(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            long coef = c[monomial(i, j)];
            if (i == j) {
                g(i, i) = 2 * coef;
            } else {
                g(i, j) = coef;
                g(j, i) = coef;
            }
        }
    return g;
}

std::string QuadForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            long coef = c[monomial(i, j)];
            if (!coef) continue;
            os << (coef < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (std::abs(coef) != 1) os << std::abs(coef) << "*";
            if (i == j) os << "X" << i << "^2";
            else os << "X" << i << "*X" << j;
            first = false;
        }
    return first ? "0" : os.str();
}

std::string point_str(const Point& x) {
    std::string s = "(";
    for (int i = 0; i < 5; ++i) s += (i ? ":" : "") + std::to_string(x[i]);
    return s + ")";
}

bool is_primitive(const Point& x) {
    long g = 0;
    for (long v : x) g = std::gcd(g, v);
    return g == 1;
}

bool is_integral(const Point& x) { return x[0] == 1 || x[0] == -1; }

bool is_integral_at(const Point& x, Place v) {
    if (x[0] == 0) return false;
    return v.is_real() || x[0] % v.p != 0;
}

// --------------------------------------------------------------- point search

namespace {

long isqrt_exact(long n) {
    if (n < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : -1;
}

// integer roots t of a t^2 + b t + c with |t| <= h; all of them when the
// polynomial vanishes identically
void integer_roots(long a, long b, long c, long h, std::vector<long>& out) {
    out.clear();
    auto push = [&](long t) {
        if (t >= -h && t <= h) out.push_back(t);
    };
    if (a == 0) {
        if (b == 0) {
            if (c == 0)
                for (long t = -h; t <= h; ++t) out.push_back(t);
        } else if (c % b == 0) {
            push(-c / b);
        }
        return;
    }
    long s = isqrt_exact(b * b - 4 * a * c);
    if (s < 0) return;
    for (long num : {-b + s, -b - s})
        if (num % (2 * a) == 0) push(num / (2 * a));
    if (out.size() == 2 && out[0] == out[1]) out.pop_back();
}

struct X4Poly {
    // coefficient tables: the form as a(X4)^2 + b X4 + c
    long a;
    std::array<long, 4> b;       // linear coefficients of X0..X3 in b
    std::array<long, 10> c;      // coefficients of X_iX_j, i <= j < 4
};

X4Poly split_x4(const QuadForm& q) {
    X4Poly p{};
    p.a = q.c[QuadForm::monomial(4, 4)];
    for (int i = 0; i < 4; ++i) p.b[i] = q.c[QuadForm::monomial(i, 4)];
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) p.c[k++] = q.c[QuadForm::monomial(i, j)];
    return p;
}

}  // namespace

std::vector<Point> find_points(const PencilSurface& s, long height) {
    if (height < 1 || height > 100000) throw std::invalid_argument("height out of range");
    const X4Poly f[2] = {split_x4(s.q1), split_x4(s.q2)};
    std::vector<Point> pts;
    std::vector<long> roots;
    auto cidx = [](int i, int j) { return 4 * i - i * (i - 1) / 2 + (j - i); };
    for (long x0 = 0; x0 <= height; ++x0)
        for (long x1 = -height; x1 <= height; ++x1)
            for (long x2 = -height; x2 <= height; ++x2) {
                // parts independent of x3
                long b0[2], c0[2], c1[2], c2[2];
                const long xs[3] = {x0, x1, x2};
                for (int k = 0; k < 2; ++k) {
                    b0[k] = f[k].b[0] * x0 + f[k].b[1] * x1 + f[k].b[2] * x2;
                    c0[k] = 0;
                    c1[k] = 0;
                    for (int i = 0; i < 3; ++i) {
                        for (int j = i; j < 3; ++j) c0[k] += f[k].c[cidx(i, j)] * xs[i] * xs[j];
                        c1[k] += f[k].c[cidx(i, 3)] * xs[i];
                    }
                    c2[k] = f[k].c[cidx(3, 3)];
                }
                for (long x3 = -height; x3 <= height; ++x3) {
                    long a[2], b[2], c[2];
                    for (int k = 0; k < 2; ++k) {
                        a[k] = f[k].a;
                        b[k] = b0[k] + f[k].b[3] * x3;
                        c[k] = c0[k] + (c1[k] + c2[k] * x3) * x3;
                    }
                    // solve the form that depends on X4, check the other
                    int k = (a[0] || b[0]) ? 0 : 1;
                    integer_roots(a[k], b[k], c[k], height, roots);
                    for (long x4 : roots) {
                        if ((a[1 - k] * x4 + b[1 - k]) * x4 + c[1 - k] != 0) continue;
                        Point x{x0, x1, x2, x3, x4};
                        if (!is_primitive(x)) continue;
                        if (x0 == 0) {
                            long lead = 0;
                            for (long v : x)
                                if (v) {
                                    lead = v;
                                    break;
                                }
                            if (lead < 0) continue;
                        }
                        pts.push_back(x);
                    }
                }
            }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// -------------------------------------------------------------------- pencil

namespace {

using QPoly = std::vector<mpq_class>;  // low degree first

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mod(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        mpq_class c = a.back() / b.back();
        std::size_t sh = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<Int> divisors(Int n) {
    n = abs(n);
    if (n == 0) throw std::invalid_argument("divisors of zero");
    std::vector<std::pair<Int, int>> fac;
    for (unsigned long d = 2; Int(d) * d <= n; ++d) {
        if (d > 10000000UL) throw std::runtime_error("coefficient too large to factor");
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            int k = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= d, ++k;
            fac.push_back({Int(d), k});
        }
    }
    if (n > 1) fac.push_back({n, 1});
    std::vector<Int> ds{1};
    for (auto& [p, k] : fac) {
        std::size_t m = ds.size();
        Int pk = 1;
        for (int i = 0; i < k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pk);
        }
    }
    return ds;
}

mpq_class eval_poly(const QPoly& p, const mpq_class& t) {
    mpq_class r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * t + p[i];
    return r;
}

int root_multiplicity(QPoly p, const mpq_class& t) {
    int m = 0;
    while (!p.empty() && eval_poly(p, t) == 0) {
        // synthetic division by (x - t)
        QPoly q(p.size() - 1);
        mpq_class carry = 0;
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = carry * t + p[i];
            q[i - 1] = carry;
        }
        p = std::move(q);
        ++m;
    }
    return m;
}

PencilMember make_member(const PencilSurface& s, Int lambda, Int mu, int mult) {
    if (lambda < 0 || (lambda == 0 && mu < 0)) lambda = -lambda, mu = -mu;
    PencilMember m;
    m.lambda = lambda;
    m.mu = mu;
    m.multiplicity = mult;
    IntMatrix g1 = s.q1.gram(), g2 = s.q2.gram(), g(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) g(i, j) = lambda * g1(i, j) + mu * g2(i, j);
    m.rank = static_cast<int>(smith_normal_form(g, false, false).rank);
    if (m.rank == 4) {
        IntMatrix k = kernel_basis(g);
        std::array<Int, 5> v;
        Int gg = 0;
        for (int i = 0; i < 5; ++i) {
            v[i] = k(i, 0);
            gg = gcd(gg, v[i]);
        }
        int lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] < 0) gg = -gg;
        for (Int& x : v) x /= gg;
        m.cusp = v;
    }
    return m;
}

}  // namespace

int quadric_rank(const QuadForm& q) { return static_cast<int>(smith_normal_form(q.gram(), false, false).rank); }

PencilQuintic pencil_quintic(const PencilSurface& s) {
    PencilQuintic out;
    const IntMatrix g1 = s.q1.gram(), g2 = s.q2.gram();
    // F(t, 1) at t = 0..5, then Newton interpolation
    std::vector<mpq_class> ys(6);
    for (int t = 0; t < 6; ++t) {
        IntMatrix g(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) g(i, j) = Int(t) * g1(i, j) + g2(i, j);
        ys[t] = mpq_class(g.det());
    }
    std::vector<mpq_class> dd = ys;
    for (int k = 1; k < 6; ++k)
        for (int i = 5; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / k;
    QPoly f{dd[5]};
    for (int k = 4; k >= 0; --k) {
        // f = f * (x - k) + dd[k]
        QPoly g(f.size() + 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            g[i + 1] += f[i];
            g[i] -= f[i] * k;
        }
        g[0] += dd[k];
        f = std::move(g);
    }
    for (int k = 0; k < 6; ++k) {
        f[k].canonicalize();
        if (f[k].get_den() != 1) throw std::logic_error("non-integral determinant coefficient");
        out.coeffs[k] = f[k].get_num();
    }
    QPoly p(f.begin(), f.end());
    trim(p);
    if (p.empty()) {
        out.degenerate = true;
        return out;
    }
    const int deg = static_cast<int>(p.size()) - 1;
    const int at_infinity = 5 - deg;  // multiplicity of (1 : 0)
    QPoly dp;
    for (int i = 1; i <= deg; ++i) dp.push_back(p[i] * i);
    out.square_free = at_infinity <= 1 && poly_gcd(p, dp).size() == 1;
    if (at_infinity > 0) out.rational_members.push_back(make_member(s, 1, 0, at_infinity));
    // rational roots t = a / b of p: a | lowest nonzero coefficient, b | leading
    int low = 0;
    while (p[low] == 0) ++low;
    if (low > 0) out.rational_members.push_back(make_member(s, 0, 1, low));
    const Int lo = out.coeffs[low], hi = out.coeffs[deg];
    std::set<mpq_class> seen;
    if (deg > low)
        for (const Int& a : divisors(lo))
            for (const Int& b : divisors(hi))
                for (int sign : {1, -1}) {
                    mpq_class t(sign * a, b);
                    t.canonicalize();
                    if (!seen.insert(t).second || eval_poly(p, t) != 0) continue;
                    out.rational_members.push_back(make_member(s, t.get_num(), t.get_den(), root_multiplicity(p, t)));
                }
    return out;
}

// --------------------------------------------------------------- evaluation

namespace {

mpq_class half_if(bool b) { return b ? mpq_class(1, 2) : mpq_class(0); }

}  // namespace

mpq_class ev_2tors_typeI(const mpq_class& t, const mpq_class& d, Place v) {
    if (t == 0 || d == 0) throw std::invalid_argument("symbol of zero");
    return half_if(hilbert(t, d, v) == -1);
}

mpq_class ev_2tors_typeII(const QSqrt5& t, const QSqrt5& d, Place v) {
    if (t.is_zero() || d.is_zero()) throw std::invalid_argument("symbol of zero");
    mpq_class s = 0;
    for (const QuadPlace& w : places_above(v)) s += half_if(hilbert_sqrt5(t, d, w) == -1);
    return mod_one(s);
}

mpq_class ev_4tors_cyclic(const mpq_class& t, CyclicField field, Place v) {
    if (t == 0) throw std::invalid_argument("symbol of zero");
    const long m = field == CyclicField::zeta5 ? 5 : 17;
    const long g = field == CyclicField::zeta5 ? 2 : 3;
    const std::vector<long> h = field == CyclicField::zeta5 ? std::vector<long>{1} : std::vector<long>{1, 16};
    return mod_one(-cyclic_symbol_invariant(artin_cyclotomic(t, v, m, h), g, m, h));
}

QSqrt5 recipe_function(const Recipe& r, const Point& x) {
    if (x[0] == 0) throw std::invalid_argument("the point lies on V(X0)");
    QSqrt5 num;
    if (r.degree == 1) {
        if (r.form.size() != 5) throw std::invalid_argument("a linear form has 5 coefficients");
        for (int i = 0; i < 5; ++i) num = num + r.form[i] * QSqrt5(x[i]);
    } else if (r.degree == 2) {
        if (r.form.size() != 15) throw std::invalid_argument("a quadratic form has 15 coefficients");
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) num = num + r.form[QuadForm::monomial(i, j)] * QSqrt5(mpz_class(x[i]) * x[j]);
    } else {
        throw std::invalid_argument("recipe degree must be 1 or 2");
    }
    mpz_class den = x[0];
    if (r.degree == 2) den *= x[0];
    return num / QSqrt5(mpq_class(den));
}

std::optional<mpq_class> evaluate(const Recipe& r, const Point& x, Place v) {
    QSqrt5 t = recipe_function(r, x);
    if (t.is_zero()) return std::nullopt;
    switch (r.kind) {
        case RecipeKind::type_I:
            if (t.y != 0 || r.d.y != 0) throw std::invalid_argument("type I recipes are rational");
            return ev_2tors_typeI(t.x, r.d.x, v);
        case RecipeKind::type_II:
            return ev_2tors_typeII(t, r.d, v);
        case RecipeKind::cyclic:
            if (t.y != 0) throw std::invalid_argument("cyclic recipes are rational");
            return ev_4tors_cyclic(t.x, r.field, v);
    }
    throw std::logic_error("unknown recipe kind");
}

std::vector<Place> reciprocity_places(const Recipe& r, const Point& x) {
    QSqrt5 t = recipe_function(r, x);
    std::vector<mpq_class> xs;
    switch (r.kind) {
        case RecipeKind::type_I:
            xs = {t.x, r.d.x};
            break;
        case RecipeKind::type_II:
            xs = {t.norm(), r.d.norm(), 5};
            for (const mpq_class& c : {t.x, t.y, r.d.x, r.d.y})
                if (c != 0) xs.push_back(c);
            break;
        case RecipeKind::cyclic:
            xs = {t.x, r.field == CyclicField::zeta5 ? 5 : 17};
            break;
    }
    std::vector<Place> out{Place::real()};
    for (long p : bad_primes(xs)) out.push_back(Place::prime(p));
    return out;
}

bool PlaceSummary::violation() const {
    if (integral.empty()) return false;
    for (const auto& [v, n] : local)
        if (!integral.count(v)) return true;
    return false;
}

EvalReport audit(const Recipe& r, const std::vector<Point>& points, const std::vector<Place>& places) {
    EvalReport rep;
    rep.recipe = r.name;
    for (Place v : places) rep.places.push_back(PlaceSummary{v, {}, {}});
    for (const Point& x : points) {
        if (x[0] == 0 || recipe_function(r, x).is_zero()) {
            ++rep.skipped;
            continue;
        }
        PointEval row{x, {}, 0};
        for (Place v : reciprocity_places(r, x)) {
            mpq_class val = *evaluate(r, x, v);
            row.values.push_back({v, val});
            row.total += val;
        }
        row.total = mod_one(row.total);
        if (row.total != 0) ++rep.reciprocity_failures;
        for (PlaceSummary& ps : rep.places) {
            if (!is_integral_at(x, ps.v)) continue;
            mpq_class val = *evaluate(r, x, ps.v);
            ++ps.local[val];
            if (is_integral(x)) ++ps.integral[val];
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ------------------------------------------------------------------ fixtures

namespace {

QuadForm form(std::initializer_list<std::tuple<int, int, long>> terms) {
    QuadForm q;
    for (auto [i, j, c] : terms) q.c[QuadForm::monomial(i, j)] += c;
    return q;
}

std::vector<QSqrt5> rational(const QuadForm& q) {
    std::vector<QSqrt5> v;
    for (long c : q.c) v.push_back(QSqrt5(c));
    return v;
}

std::vector<QSqrt5> linear(std::initializer_list<long> cs) {
    std::vector<QSqrt5> v;
    for (long c : cs) v.push_back(QSqrt5(c));
    return v;
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> fs;
    {
        Fixture f;
        f.id = "ex418";
        f.surface.q1 = form({{0, 0, 1}, {0, 2, 2}, {0, 4, -4}, {1, 2, -2}, {1, 4, 4}, {1, 3, -1}, {2, 2, -1}});
        f.surface.q2 = form({{0, 4, -2}, {1, 4, 1}, {2, 3, 1}, {4, 4, -2}});
        f.listed_points = {{1, 1, 0, 1, 0}, {1, 1, -2, -3, -2}, {1, 331, 49, 900, 252}};
        Recipe r;
        r.name = "typeII";
        r.kind = RecipeKind::type_II;
        r.form = {QSqrt5(0), QSqrt5(3, 1), QSqrt5(4), QSqrt5(0), QSqrt5(0)};
        r.d = QSqrt5(4, 2);
        f.recipes = {r};
        f.bad_primes = {2, 5};
        f.galois = {SignedPerm({1, 3, 2, 5, 4}), SignedPerm({1, -2, 3, -4, 5})};
        fs.push_back(f);
    }
    {
        Fixture f;
        f.id = "ex421";
        f.surface.q1 = form({{0, 0, -1}, {0, 1, 8}, {0, 2, -4}, {0, 3, -10}, {1, 1, 4}, {1, 2, -6}, {1, 3, -8},
                             {2, 2, 2}, {2, 3, 3}, {3, 3, -1}, {3, 4, -1}});
        f.surface.q2 = form({{0, 0, 7}, {0, 1, 9}, {0, 3, 6}, {1, 1, 7}, {2, 4, 1}, {3, 3, 3}});
        f.listed_points = {{1, 0, 2, -1, -2}, {1, 1, 2, -1, -10}, {1, -20, -32, -9, 88}, {1, -80, -62, 11, 718}};
        Recipe r;
        r.name = "cyclic5";
        r.kind = RecipeKind::cyclic;
        r.form = linear({35, 50, -19, -2, 5});
        r.field = CyclicField::zeta5;
        f.recipes = {r};
        f.bad_primes = {2, 5, 31, 251};
        f.galois = {SignedPerm({2, 3, 1, 4, 5}), SignedPerm({-2, -1, -3, 5, -4})};
        fs.push_back(f);
    }
    {
        Fixture f;
        f.id = "ex423";
        f.surface.q1 = form({{0, 0, 1}, {0, 3, -1}, {1, 1, -1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}, {3, 3, 1}, {3, 4, -1}});
        f.surface.q2 = form({{0, 0, -1}, {0, 1, -1}, {0, 3, -1}, {1, 1, 1}, {2, 4, 1}});
        f.listed_points = {{1, -1, 0, 1, -1}, {1, 1, 0, -1, -1}, {1, 0, 1, 1, 2},       {1, 2, 0, 1, -1},
                           {1, 0, -2, 1, -1}, {1, 0, 0, -1, -3}, {1, 0, 3, -1, 0},      {1, 42, -221, -47, 8},
                           {1, 42, 9, -277, -222}};
        Recipe r1;
        r1.name = "cyclic17-q1";
        r1.kind = RecipeKind::cyclic;
        r1.degree = 2;
        r1.field = CyclicField::real_zeta17;
        r1.form = rational(form({{0, 2, 3}, {0, 3, -2}, {0, 4, 12}, {1, 1, -4}, {1, 2, 3}, {1, 3, -2}, {1, 4, 5},
                                 {2, 2, 1}, {2, 3, 17}, {2, 4, -22}, {3, 3, 15}, {3, 4, -13}, {4, 4, -1}}));
        Recipe r2 = r1;
        r2.name = "cyclic17-q2";
        r2.form = rational(form({{0, 2, 3}, {0, 3, -19}, {0, 4, -5}, {1, 1, -4}, {1, 2, 20}, {1, 3, 15}, {1, 4, 5},
                                 {2, 2, 1}, {2, 3, 17}, {2, 4, 12}, {3, 3, 15}, {3, 4, -13}, {4, 4, -1}}));
        f.recipes = {r1, r2};
        f.bad_primes = {2, 17};
        f.galois = {SignedPerm({-1, 3, 4, 5, -2})};
        fs.push_back(f);
    }
    {
        Fixture f;
        f.id = "ex515";
        f.surface.q1 = form({{0, 0, 1}, {0, 1, 2}, {0, 3, -3}, {1, 1, 1}, {1, 3, -3}, {2, 2, -1}, {2, 4, -1},
                             {3, 3, 2}, {3, 4, -1}});
        f.surface.q2 = form({{0, 0, -2}, {0, 1, -1}, {0, 3, 2}, {1, 1, -2}, {1, 3, 2}, {2, 4, 1}, {3, 3, -1}});
        f.listed_points = {{1, 1, -1, 2, -1},   {1, 15, -5, 4, -71},     {1, 20, 15, -6, 74},
                           {1, -9, -2, 1, -86}, {1, 41, 15, -6, 263},    {1, 223, -229, 308, -247},
                           {1, 299, -213, 312, -419}, {1, -96, -53, 22, -434}};
        Recipe r;
        r.name = "typeI";
        r.kind = RecipeKind::type_I;
        r.form = linear({0, 0, 1, 1, 0});
        r.d = QSqrt5(5);
        f.recipes = {r};
        f.bad_primes = {3, 5, 7, 19};
        // the largest subgroup in the type II normal form
        const WeylD5& w = WeylD5::get();
        ElementSet set;
        for (int i = 0; i < kWeylOrder; ++i)
            if (in_typeII_form(w.element(i))) set.set(i);
        for (int g : canonical_generators(set)) f.galois.push_back(w.element(g));
        fs.push_back(f);
    }
    for (Fixture& f : fs) f.surface.fixture = f.id;
    return fs;
}

const std::vector<Fixture>& all_fixtures() {
    static const std::vector<Fixture> fs = build_fixtures();
    return fs;
}

}  // namespace

const std::vector<std::string>& fixture_ids() {
    static const std::vector<std::string> ids = {"ex418", "ex421", "ex423", "ex515"};
    return ids;
}

const Fixture& fixture(const std::string& id) {
    for (const Fixture& f : all_fixtures())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown fixture " + id);
}

const Recipe& recipe(const Fixture& f, const std::string& name) {
    for (const Recipe& r : f.recipes)
        if (r.name == name) return r;
    throw std::invalid_argument("fixture " + f.id + " has no recipe " + name);
}

PencilSurface parse_surface(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("surface is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("surface must be a JSON object");
    PencilSurface s;
    for (auto [key, q] : {std::pair<const char*, QuadForm*>{"q1", &s.q1}, {"q2", &s.q2}}) {
        if (!j.contains(key) || !j[key].is_array() || j[key].size() != 15)
            throw std::invalid_argument(std::string(key) + " must be an array of 15 integers");
        for (int i = 0; i < 15; ++i) {
            if (!j[key][i].is_number_integer()) throw std::invalid_argument(std::string(key) + " must hold integers");
            q->c[i] = j[key][i].get<long>();
        }
    }
    if (j.contains("fixture")) {
        if (!j["fixture"].is_string()) throw std::invalid_argument("fixture must be a string");
        s.fixture = j["fixture"].get<std::string>();
        const auto& ids = fixture_ids();
        if (std::find(ids.begin(), ids.end(), s.fixture) == ids.end())
            throw std::invalid_argument("unknown fixture " + s.fixture);
    }
    return s;
}

}  // namespace brauer
