#include "brauer/local_invariant.hpp"

#include "brauer/residue_symbols.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace brauer {

namespace {

using i128 = __int128;

long mmod(i128 a, long m) {
    long r = static_cast<long>(a % m);
    return r < 0 ? r + m : r;
}

long mulmod(long a, long b, long m) { return mmod(static_cast<i128>(a) * b, m); }

long powmod(long a, unsigned long e, long m) {
    long r = 1 % m;
    a = mmod(a, m);
    for (; e; e >>= 1, a = mulmod(a, a, m))
        if (e & 1) r = mulmod(r, a, m);
    return r;
}

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, b, &r)) throw std::overflow_error("power exceeds machine range");
    }
    return r;
}

long mod_inverse(long a, long m) {
    mpz_class r, aa = a, mm = m;
    if (!mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t())) throw std::domain_error("not invertible");
    return r.get_si();
}

long residue_mod(const mpq_class& x, long m) {
    auto red = [m](const mpz_class& z) -> long {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(m));
        return r.get_si();
    };
    return mulmod(red(x.get_num()), mod_inverse(red(x.get_den()), m), m);
}

std::vector<long> prime_factors(long n) {
    std::vector<long> r;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            r.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) r.push_back(n);
    return r;
}

Vec vec2(long a, long b) { return {Int(a), Int(b)}; }

Cochain2 scaled(const Cochain2& c, long k) {
    Cochain2 r = c;
    for (Vec& v : r)
        for (Int& x : v) x *= k;
    return r;
}

// ex a homomorphism to Z/f with ex(frobenius) = 1 and kernel of order e
void check_ex(const FiniteGroup& g, const std::vector<int>& ex, int frob, int f, int e) {
    const int n = g.order();
    if (f < 1 || e < 1 || static_cast<long>(e) * f != n) throw std::invalid_argument("e f differs from the group order");
    if (static_cast<int>(ex.size()) != n) throw std::invalid_argument("ex needs one value per element");
    if (frob < 0 || frob >= n) throw std::invalid_argument("Frobenius out of range");
    int kernel = 0;
    for (int a = 0; a < n; ++a) {
        if (ex[a] < 0 || ex[a] >= f) throw std::invalid_argument("ex out of range");
        if (ex[a] == 0) ++kernel;
        for (int b = 0; b < n; ++b)
            if (ex[g.mul(a, b)] != (ex[a] + ex[b]) % f) throw std::invalid_argument("ex is not a homomorphism to Z/f");
    }
    if (ex[frob] != 1 % f) throw std::invalid_argument("ex(Frobenius) is not 1");
    if (kernel != e) throw std::invalid_argument("inertia group does not have order e");
}

mpq_class fraction(const Int& m, int f) {
    mpq_class r(m, f);
    r.canonicalize();
    return mod_one(r);
}

// m with [c] = m [st], after the common checks; f = order of st wanted
mpq_class compare_with_standard(const GModule& m, const Cochain2& c, const Cochain2& st, int f, int torsion = 4) {
    if (auto bad = cocycle2_violation(m, c))
        throw std::invalid_argument("not a 2-cocycle at (" + std::to_string((*bad)[0]) + ", " + std::to_string((*bad)[1]) +
                                    ", " + std::to_string((*bad)[2]) + ")");
    if (!is_coboundary2(m, scaled(c, torsion)))
        throw std::domain_error("the class is not annihilated by " + std::to_string(torsion));
    auto k = h2_class_compare(m, c, st);
    if (!k) throw std::runtime_error("the class is not a multiple of the standard class");
    return fraction(*k, f);
}

}  // namespace

// ---------------------------------------------------------------- discrete logs

long primitive_root(long p) {
    if (!is_prime(p)) throw std::invalid_argument("primitive root of a non-prime");
    if (p == 2) return 1;
    std::vector<long> fs = prime_factors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long l : fs) ok = ok && powmod(g, (p - 1) / l, p) != 1;
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

long discrete_log(long g, long x, long p) {
    x = mmod(x, p);
    if (x == 0) throw std::domain_error("logarithm of zero");
    const long n = p - 1;
    const long m = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
    std::unordered_map<long, long> baby;
    long y = 1;
    for (long j = 0; j < m; ++j, y = mulmod(y, g, p)) baby.emplace(y, j);
    long step = powmod(mod_inverse(g, p), m, p), z = x;
    for (long i = 0; i <= m; ++i, z = mulmod(z, step, p)) {
        auto it = baby.find(z);
        if (it != baby.end()) return (i * m + it->second) % n;
    }
    throw std::domain_error("element not in the group generated by the base");
}

// ------------------------------------------------------------------ tame data

std::vector<int> LocalExtensionData::inertia() const {
    std::vector<int> r;
    for (std::size_t g = 0; g < ex.size(); ++g)
        if (ex[g] == 0) r.push_back(static_cast<int>(g));
    return r;
}

void validate(const LocalExtensionData& d) {
    check_ex(d.group, d.ex, d.frobenius, d.f, d.e);
    if (d.qk < 2 || d.q != ipow(d.qk, d.f)) throw std::invalid_argument("q is not qk^f");
    if (d.q % 2 == 0) throw std::invalid_argument("residue characteristic 2 needs the wild engine");
    const long m = d.q - 1;
    const int n = d.group.order();
    if (static_cast<int>(d.dlog_pi.size()) != n) throw std::invalid_argument("dlog_pi needs one value per element");
    for (int a = 0; a < n; ++a) {
        long qa = powmod(d.qk, d.ex[a], m);
        for (int b = 0; b < n; ++b)
            if (mmod(d.dlog_pi[d.group.mul(a, b)], m) != mmod(d.dlog_pi[a] + static_cast<i128>(qa) * d.dlog_pi[b], m))
                throw std::invalid_argument("dlog_pi is not a crossed homomorphism");
        // pi / pi_l^e lies in k
        if (mmod(static_cast<i128>(d.e) * d.dlog_pi[a] + static_cast<i128>(qa) * d.dlog_base, m) != mmod(d.dlog_base, m))
            throw std::invalid_argument("pi / pi_l^e is not fixed by the group");
    }
}

GModule tame_module(const LocalExtensionData& d) {
    validate(d);
    const long m = d.q - 1;
    std::vector<IntMatrix> acts;
    for (int g : d.group.gens()) {
        IntMatrix a{{1, 0}, {mmod(d.dlog_pi[g], m), powmod(d.qk, d.ex[g], m)}};
        acts.push_back(a);
    }
    return GModule(d.group, FinAbGroup{1, {Int(m)}}, acts);
}

LocalCocycle standard_cocycle(const LocalExtensionData& d) {
    const int n = d.group.order();
    LocalCocycle st(static_cast<std::size_t>(n) * n, vec2(0, 0));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (d.ex[s] + d.ex[t] >= d.f) st[s * n + t] = vec2(d.e, mmod(d.dlog_base, d.q - 1));
    return st;
}

mpq_class invariant_tame(const LocalExtensionData& d, const LocalCocycle& c, int torsion) {
    if (d.f < 4) {
        ExtendedTame x = extend_unramified_4(d, c);
        return invariant_tame(x.data, x.cocycle, torsion);
    }
    GModule m = tame_module(d);
    const std::size_t n = d.group.order();
    if (c.size() != n * n) throw std::invalid_argument("cocycle needs |G|^2 values");
    return compare_with_standard(m, c, standard_cocycle(d), d.f, torsion);
}

UnramifiedLift unramified_4_group(const FiniteGroup& g, const std::vector<int>& ex, int f) {
    if (f != 1 && f != 2) throw std::invalid_argument("the lift is defined for f = 1, 2");
    using P = std::pair<int, int>;
    std::vector<P> gens;
    for (int s : g.gens()) gens.push_back({s, ex[s] % 4});
    gens.push_back({0, f});
    auto [grp, elems] = FiniteGroup::generate(P{0, 0}, gens, [&g](const P& a, const P& b) {
        return P{g.mul(a.first, b.first), (a.second + b.second) % 4};
    });
    UnramifiedLift r{std::move(grp), {}, {}};
    for (const P& x : elems) {
        r.pr1.push_back(x.first);
        r.pr2.push_back(x.second);
    }
    if (r.group.order() != 4 * g.order() / f) throw std::logic_error("unexpected order of the lifted group");
    return r;
}

namespace {

int find_pair(const UnramifiedLift& l, int a, int y) {
    for (int i = 0; i < l.group.order(); ++i)
        if (l.pr1[i] == a && l.pr2[i] == y) return i;
    throw std::logic_error("element missing from the lifted group");
}

}  // namespace

ExtendedTame extend_unramified_4(const LocalExtensionData& d, const LocalCocycle& c) {
    if (d.f >= 4) return {d, c, {}};
    validate(d);
    UnramifiedLift l = unramified_4_group(d.group, d.ex, d.f);
    const long q2 = ipow(d.q, 4 / d.f);
    const long scale = (q2 - 1) / (d.q - 1);
    LocalExtensionData r;
    r.group = l.group;
    r.qk = d.qk;
    r.q = q2;
    r.f = 4;
    r.e = d.e;
    r.ex = l.pr2;
    r.frobenius = find_pair(l, d.frobenius, 1);
    for (int a : l.pr1) r.dlog_pi.push_back(mulmod(mmod(d.dlog_pi[a], d.q - 1), scale, q2 - 1));
    r.dlog_base = mulmod(mmod(d.dlog_base, d.q - 1), scale, q2 - 1);
    const int n = d.group.order(), n2 = r.group.order();
    if (c.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("cocycle needs |G|^2 values");
    LocalCocycle c2(static_cast<std::size_t>(n2) * n2);
    for (int s = 0; s < n2; ++s)
        for (int t = 0; t < n2; ++t) {
            Vec v = c[l.pr1[s] * n + l.pr1[t]];
            if (v.size() != 2) throw std::invalid_argument("tame cocycle values are pairs");
            v[1] = mod_floor(v[1], Int(d.q - 1)) * scale;
            c2[s * n2 + t] = v;
        }
    return {std::move(r), std::move(c2), std::move(l.pr1)};
}

Cochain2 cocycle_from_cyclic_algebra(const FiniteGroup& g, int sigma, const Vec& a) {
    const int n = g.order();
    std::vector<int> pos(n, -1);
    int x = 0;
    for (int i = 0; i < n; ++i, x = g.mul(x, sigma)) {
        if (pos[x] >= 0) throw std::invalid_argument("sigma does not generate the group");
        pos[x] = i;
    }
    Cochain2 c(static_cast<std::size_t>(n) * n, Vec(a.size()));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (pos[s] + pos[t] >= n) c[s * n + t] = a;
    return c;
}

LocalExtensionData quadratic_tame(const mpq_class& a, long p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("quadratic_tame needs an odd prime");
    if (a == 0) throw std::invalid_argument("zero has no square root class");
    int v = valuation(a, p);
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p, std::abs(v));
    mpq_class u = v >= 0 ? mpq_class(a / pv) : mpq_class(a * pv);
    long ur = residue_mod(u, p), r = primitive_root(p);
    LocalExtensionData d;
    d.qk = p;
    if (v % 2 == 0 && legendre(mpz_class(ur), p) == 1) {
        d.group = FiniteGroup::cyclic(1);
        d.q = p;
        d.ex = {0};
        d.dlog_pi = {0};
        return d;
    }
    d.group = FiniteGroup::cyclic(2);
    if (v % 2 == 0) {
        // unramified, pi_l = p
        d.f = 2;
        d.q = p * p;
        d.ex = {0, 1};
        d.frobenius = 1;
        d.dlog_pi = {0, 0};
    } else {
        // pi_l = sqrt(p u), conjugation sends it to -pi_l, pi / pi_l^2 = 1/u
        d.e = 2;
        d.q = p;
        d.ex = {0, 0};
        d.dlog_pi = {0, (p - 1) / 2};
        d.dlog_base = mmod(-discrete_log(r, ur, p), p - 1);
    }
    return d;
}

LocalExtensionData tame_fixture(long qk, int f, int e, long base_log) {
    if (qk < 3 || f < 1 || e < 1) throw std::invalid_argument("bad fixture parameters");
    LocalExtensionData d;
    d.qk = qk;
    d.f = f;
    d.e = e;
    d.q = ipow(qk, f);
    const long m = d.q - 1;
    if (m % e) throw std::invalid_argument("e must divide q - 1");
    if (mmod(base_log, m) % (m / (qk - 1))) throw std::invalid_argument("base_log is not the log of an element of k");
    const int n = e * f;
    std::vector<long> qpow(f);
    for (int b = 0; b < f; ++b) qpow[b] = powmod(qk, b, e);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = x % e, b = x / e, c = y % e, dd = y / e;
            int a2 = static_cast<int>((a + c * qpow[b]) % e), b2 = (b + dd) % f;
            table[x][y] = a2 + e * b2;
        }
    std::vector<int> gens;
    if (e > 1) gens.push_back(1);
    if (f > 1) gens.push_back(e);
    if (gens.empty()) gens.push_back(0);
    d.group = FiniteGroup(table, gens);
    d.frobenius = f > 1 ? e : 0;
    for (int x = 0; x < n; ++x) {
        d.ex.push_back(x / e);
        d.dlog_pi.push_back((x % e) * (m / e));
    }
    d.dlog_base = mmod(base_log, m);
    validate(d);
    return d;
}

Vec tame_value(const LocalExtensionData& d, const mpq_class& b) {
    const long p = d.qk;
    if (!is_prime(p)) throw std::invalid_argument("tame_value needs k = Q_p");
    if (b == 0) throw std::invalid_argument("zero has no valuation");
    int v = valuation(b, p);
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p, std::abs(v));
    mpq_class w = v >= 0 ? mpq_class(b / pv) : mpq_class(b * pv);
    const long m = d.q - 1;
    long lw = discrete_log(primitive_root(p), residue_mod(w, p), p);
    long lg = mmod(static_cast<i128>(lw) * (m / (p - 1)) + static_cast<i128>(v) * d.dlog_base, m);
    return vec2(static_cast<long>(d.e) * v, lg);
}

// ------------------------------------------------------------ residue fields

namespace {

std::vector<long> unpack(long a, long p, int r) {
    std::vector<long> d(r);
    for (int i = 0; i < r; ++i, a /= p) d[i] = a % p;
    return d;
}

long pack(const std::vector<long>& d, long p) {
    long a = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + mmod(d[i], p);
    return a;
}

// a mod b for monic b over F_p, both low degree first
std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& b, long p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        long c = mmod(a[i], p);
        if (!c) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = mmod(a[i - db + j] - c * b[j], p);
    }
    a.resize(std::max(db, 0));
    for (long& x : a) x = mmod(x, p);
    return a;
}

LocalElt first_irreducible(long p, int r) {
    long count = ipow(p, r);
    for (long t = 0; t < count; ++t) {
        LocalElt poly = unpack(t, p, r);
        poly.push_back(1);
        bool irreducible = true;
        for (int d = 1; irreducible && 2 * d <= r; ++d) {
            long nq = ipow(p, d);
            for (long s = 0; s < nq && irreducible; ++s) {
                std::vector<long> q = unpack(s, p, d);
                q.push_back(1);
                std::vector<long> rem = poly_rem(poly, q, p);
                bool zero = true;
                for (long x : rem) zero = zero && x == 0;
                if (zero) irreducible = false;
            }
        }
        if (irreducible) return poly;
    }
    throw std::logic_error("no irreducible polynomial found");
}

long residue_pow(long a, std::uint64_t k, long p, const LocalElt& poly) {
    long r = 1;
    for (; k; k >>= 1, a = residue_mul(a, a, p, poly))
        if (k & 1) r = residue_mul(r, a, p, poly);
    return r;
}

}  // namespace

long residue_mul(long a, long b, long p, const LocalElt& poly) {
    const int r = static_cast<int>(poly.size()) - 1;
    std::vector<long> x = unpack(a, p, r), y = unpack(b, p, r), z(2 * r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    return pack(poly_rem(z, poly, p), p);
}

long residue_primitive(long p, const LocalElt& poly) {
    const int r = static_cast<int>(poly.size()) - 1;
    const long q = ipow(p, r);
    if (q == 2) return 1;
    std::vector<long> fs = prime_factors(q - 1);
    for (long g = 2; g < q; ++g) {
        bool ok = true;
        for (long l : fs) ok = ok && residue_pow(g, (q - 1) / l, p, poly) != 1;
        if (ok) return g;
    }
    throw std::logic_error("no primitive element");
}

long residue_log(long g, long x, long p, const LocalElt& poly) {
    if (x == 0) throw std::domain_error("logarithm of zero");
    const int r = static_cast<int>(poly.size()) - 1;
    const long n = ipow(p, r) - 1;
    const long m = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
    std::unordered_map<long, long> baby;
    long y = 1;
    for (long j = 0; j < m; ++j, y = residue_mul(y, g, p, poly)) baby.emplace(y, j);
    long step = residue_pow(residue_pow(g, n - 1, p, poly), m, p, poly), z = x;
    for (long i = 0; i <= m; ++i, z = residue_mul(z, step, p, poly)) {
        auto it = baby.find(z);
        if (it != baby.end()) return (i * m + it->second) % n;
    }
    throw std::domain_error("element not in the group generated by the base");
}

// --------------------------------------------------------------- local rings

LocalRing::LocalRing(LocalRingSpec spec, int n) : spec_(std::move(spec)), n_(n) {
    const long p = spec_.p;
    const int r = spec_.r, e = spec_.e;
    if (!is_prime(p)) throw std::invalid_argument("residue characteristic must be prime");
    if (r < 1 || e < 1 || n < 1) throw std::invalid_argument("bad ring parameters");
    if (static_cast<int>(spec_.eisenstein.size()) != e) throw std::invalid_argument("need e Eisenstein coefficients");
    for (const LocalElt& s : spec_.eisenstein)
        if (static_cast<int>(s.size()) != r) throw std::invalid_argument("Eisenstein coefficients lie in W");
    prec_ = (n + e - 1) / e;
    pn_ = ipow(p, prec_);
    if (pn_ > (1L << 62) / p) throw std::overflow_error("precision exceeds machine range");
    mod_.resize(dim());
    for (int k = 0; k < e; ++k) {
        int ex = n - k <= 0 ? 0 : (n - k + e - 1) / e;
        for (int i = 0; i < r; ++i) mod_[k * r + i] = ipow(p, ex);
    }
    poly_ = first_irreducible(p, r);
    LocalElt eps(dim(), 0);
    for (int k = 0; k < e; ++k)
        for (int i = 0; i < r; ++i) {
            long s = spec_.eisenstein[k][i];
            if (mmod(s, p) != 0) throw std::invalid_argument("Eisenstein coefficients must lie in pW");
            eps[k * r + i] = mmod(s / p, pn_);
            spec_.eisenstein[k][i] = mmod(s, pn_);
        }
    // Frobenius on W: the root of P congruent to x^p
    LocalElt x(r, 0);
    if (r > 1) x[1] = 1;
    else x[0] = mmod(-poly_[0], pn_);
    auto wpow = [this](LocalElt a, long k) -> LocalElt {
        LocalElt res(spec_.r, 0);
        res[0] = 1 % pn_;
        for (; k; k >>= 1, a = wmul(a, a))
            if (k & 1) res = wmul(res, a);
        return res;
    };
    auto peval = [&](const LocalElt& y, bool derivative) -> LocalElt {
        LocalElt acc(r, 0), yp(r, 0);
        yp[0] = 1;
        for (int i = derivative ? 1 : 0; i <= r; ++i) {
            long c = derivative ? mmod(static_cast<i128>(poly_[i]) * i, pn_) : poly_[i];
            LocalElt term = wpow(y, derivative ? i - 1 : i);
            for (int j = 0; j < r; ++j) acc[j] = mmod(acc[j] + static_cast<i128>(c) * term[j], pn_);
        }
        (void)yp;
        return acc;
    };
    LocalElt y = wpow(x, p);
    for (int it = 0; it < 2 * prec_ + 4; ++it) {
        LocalElt fy = peval(y, false);
        bool zero = true;
        for (long c : fy) zero = zero && c == 0;
        if (zero) break;
        LocalElt step = wmul(fy, winv(peval(y, true)));
        for (int j = 0; j < r; ++j) y[j] = mmod(y[j] - step[j], pn_);
    }
    // Frobenius^k(x) for k < r, as polynomials in x composed
    std::vector<LocalElt> fx{x};
    for (int k = 1; k < r; ++k) {
        LocalElt prev = fx.back(), img(r, 0), ypow(r, 0);
        ypow[0] = 1;
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) img[j] = mmod(img[j] + static_cast<i128>(prev[i]) * ypow[j], pn_);
            ypow = wmul(ypow, y);
        }
        fx.push_back(img);
    }
    frob_pow_.assign(r, {});
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < r; ++i) frob_pow_[k].push_back(wpow(fx[k], i));
    // p / pi^e = (sum_k (s_k / p) pi^k)^-1
    eps_inv_ = inv(reduce(eps));
}

double LocalRing::log2_size() const {
    double s = 0;
    for (long m : mod_) s += std::log2(static_cast<double>(m));
    return s;
}

LocalElt LocalRing::wmul(const LocalElt& a, const LocalElt& b) const {
    const int r = spec_.r;
    std::vector<i128> z(2 * r - 1, 0);
    for (int i = 0; i < r; ++i)
        if (a[i])
            for (int j = 0; j < r; ++j) z[i + j] = (z[i + j] + static_cast<i128>(a[i]) * b[j]) % pn_;
    for (int d = 2 * r - 2; d >= r; --d) {
        i128 c = z[d] % pn_;
        if (!c) continue;
        for (int i = 0; i < r; ++i) z[d - r + i] = (z[d - r + i] - c * poly_[i]) % pn_;
    }
    LocalElt res(r);
    for (int i = 0; i < r; ++i) res[i] = mmod(z[i], pn_);
    return res;
}

LocalElt LocalRing::winv(const LocalElt& a) const {
    const long p = spec_.p;
    const int r = spec_.r;
    LocalElt red(r);
    for (int i = 0; i < r; ++i) red[i] = mmod(a[i], p);
    long res = pack(red, p);
    if (res == 0) throw std::domain_error("not a unit of W");
    long q = ipow(p, r);
    LocalElt z = unpack(residue_pow(res, q - 2, p, poly_), p, r);
    for (int it = 0; it < 70; ++it) {
        LocalElt az = wmul(a, z), two(r, 0);
        two[0] = 2;
        for (int i = 0; i < r; ++i) two[i] = mmod(two[i] - az[i], pn_);
        LocalElt nz = wmul(z, two);
        if (nz == z) break;
        z = nz;
    }
    return z;
}

LocalElt LocalRing::reduce(LocalElt a) const {
    if (static_cast<int>(a.size()) != dim()) throw std::invalid_argument("element has the wrong length");
    for (int i = 0; i < dim(); ++i) a[i] = mmod(a[i], mod_[i]);
    return a;
}

LocalElt LocalRing::from_rational(const mpq_class& x) const {
    LocalElt a = zero();
    a[0] = residue_mod(x, pn_);
    return reduce(a);
}

LocalElt LocalRing::x() const {
    LocalElt a = zero();
    for (int i = 0; i < spec_.r; ++i) a[i] = frob_pow_[0].size() > 1 ? frob_pow_[0][1][i] : (i == 0 ? mmod(-poly_[0], pn_) : 0);
    return reduce(a);
}

LocalElt LocalRing::pi() const {
    LocalElt a = zero();
    if (spec_.e > 1) {
        a[spec_.r] = 1;
    } else {
        for (int i = 0; i < spec_.r; ++i) a[i] = spec_.eisenstein[0][i];
    }
    return reduce(a);
}

LocalElt LocalRing::add(const LocalElt& a, const LocalElt& b) const {
    LocalElt c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = mmod(static_cast<i128>(a[i]) + b[i], mod_[i]);
    return c;
}

LocalElt LocalRing::sub(const LocalElt& a, const LocalElt& b) const {
    LocalElt c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = mmod(static_cast<i128>(a[i]) - b[i], mod_[i]);
    return c;
}

LocalElt LocalRing::mul(const LocalElt& a, const LocalElt& b) const {
    const int r = spec_.r, e = spec_.e;
    std::vector<LocalElt> c(2 * e - 1, LocalElt(r, 0));
    auto part = [r](const LocalElt& v, int k) { return LocalElt(v.begin() + k * r, v.begin() + (k + 1) * r); };
    for (int i = 0; i < e; ++i) {
        LocalElt ai = part(a, i);
        bool zero = true;
        for (long x : ai) zero = zero && x == 0;
        if (zero) continue;
        for (int j = 0; j < e; ++j) {
            LocalElt t = wmul(ai, part(b, j));
            for (int k = 0; k < r; ++k) c[i + j][k] = mmod(static_cast<i128>(c[i + j][k]) + t[k], pn_);
        }
    }
    for (int d = 2 * e - 2; d >= e; --d)
        for (int k = 0; k < e; ++k) {
            LocalElt t = wmul(c[d], spec_.eisenstein[k]);
            for (int i = 0; i < r; ++i) c[d - e + k][i] = mmod(static_cast<i128>(c[d - e + k][i]) + t[i], pn_);
        }
    LocalElt res(dim());
    for (int k = 0; k < e; ++k)
        for (int i = 0; i < r; ++i) res[k * r + i] = c[k][i];
    return reduce(res);
}

LocalElt LocalRing::pow(LocalElt a, std::uint64_t k) const {
    LocalElt r = one();
    for (; k; k >>= 1, a = mul(a, a))
        if (k & 1) r = mul(r, a);
    return r;
}

long LocalRing::residue(const LocalElt& a) const {
    LocalElt d(spec_.r);
    for (int i = 0; i < spec_.r; ++i) d[i] = mmod(a[i], spec_.p);
    return pack(d, spec_.p);
}

bool LocalRing::is_unit(const LocalElt& a) const { return residue(a) != 0; }

LocalElt LocalRing::inv(const LocalElt& a) const {
    const long p = spec_.p;
    const int r = spec_.r;
    long res = residue(a);
    if (res == 0) throw std::domain_error("not a unit");
    LocalElt z = zero();
    LocalElt digits = unpack(residue_pow(res, ipow(p, r) - 2, p, poly_), p, r);
    for (int i = 0; i < r; ++i) z[i] = digits[i];
    z = reduce(z);
    const LocalElt two = from_rational(2);
    for (int it = 0; it < 70; ++it) {
        LocalElt nz = mul(z, sub(two, mul(a, z)));
        if (nz == z) break;
        z = nz;
    }
    return z;
}

int LocalRing::valuation(const LocalElt& a) const {
    int v = n_;
    for (int k = 0; k < spec_.e; ++k)
        for (int i = 0; i < spec_.r; ++i) {
            long c = mmod(a[k * spec_.r + i], mod_[k * spec_.r + i]);
            if (!c) continue;
            int w = 0;
            while (c % spec_.p == 0) c /= spec_.p, ++w;
            v = std::min(v, k + spec_.e * w);
        }
    return v;
}

LocalElt LocalRing::unit_part(const LocalElt& a, int& v) const {
    v = valuation(a);
    if (v >= n_) throw std::domain_error("element vanishes at this precision");
    // pi^-1 = pi^(e-1) (p / pi^e) / p
    LocalElt t = mul(pow(pi(), spec_.e - 1), eps_inv_);
    LocalElt y = mul(a, pow(t, v));
    const long pv = ipow(spec_.p, v);
    for (int i = 0; i < dim(); ++i) {
        if (mod_[i] >= pv) {
            if (y[i] % pv) throw std::logic_error("division by a power of p is not exact");
            y[i] /= pv;
        } else {
            y[i] = 0;
        }
    }
    return reduce(y);
}

LocalElt LocalRing::frobenius(const LocalElt& a, int k) const {
    const int r = spec_.r;
    k = ((k % r) + r) % r;
    LocalElt res(dim(), 0);
    for (int c = 0; c < spec_.e; ++c)
        for (int i = 0; i < r; ++i) {
            long coef = a[c * r + i];
            if (!coef) continue;
            const LocalElt& xi = frob_pow_[k][i];
            for (int j = 0; j < r; ++j) res[c * r + j] = mmod(res[c * r + j] + static_cast<i128>(coef) * xi[j], pn_);
        }
    return reduce(res);
}

LocalElt LocalRing::apply(const LocalElt& a, int frob_power, const LocalElt& pi_image) const {
    const int r = spec_.r;
    LocalElt fa = frobenius(a, frob_power), res = zero(), pk = one();
    LocalElt img = reduce(pi_image);
    for (int k = 0; k < spec_.e; ++k) {
        LocalElt coef = zero();
        for (int i = 0; i < r; ++i) coef[i] = fa[k * r + i];
        res = add(res, mul(coef, pk));
        pk = mul(pk, img);
    }
    return res;
}

std::uint64_t LocalRing::encode(const LocalElt& a) const {
    std::uint64_t key = 0;
    for (int i = dim() - 1; i >= 0; --i) key = key * static_cast<std::uint64_t>(mod_[i]) + static_cast<std::uint64_t>(mmod(a[i], mod_[i]));
    return key;
}

LocalElt LocalRing::decode(std::uint64_t key) const {
    LocalElt a(dim());
    for (int i = 0; i < dim(); ++i) {
        a[i] = static_cast<long>(key % static_cast<std::uint64_t>(mod_[i]));
        key /= static_cast<std::uint64_t>(mod_[i]);
    }
    return a;
}

// ---------------------------------------------------------------- unit groups

UnitGroup::UnitGroup(const LocalRing& ring) : ring_(ring) {
    if (ring.log2_size() > 24.0 + 1e-9) throw std::length_error("local ring exceeds 2^24 elements");
    const long p = ring.p();
    const int r = ring.r(), n = ring.n();
    q_ = ipow(p, r);
    g0_ = residue_primitive(p, ring.poly());
    one_order_ = static_cast<std::uint64_t>(std::llround(std::exp2(ring.log2_size()))) / static_cast<std::uint64_t>(q_);

    // 1-units, generated by 1 + x^i pi^k
    std::vector<LocalElt> cand;
    const LocalElt pi = ring.pi(), x = ring.x();
    LocalElt pik = ring.one();
    for (int k = 1; k < n; ++k) {
        pik = ring.mul(pik, pi);
        for (int i = 0; i < r; ++i) cand.push_back(ring.add(ring.one(), ring.mul(ring.pow(x, i), pik)));
    }
    std::vector<std::uint64_t> keys{ring.encode(ring.one())};
    index_.reserve(one_order_ * 2);
    index_.emplace(keys[0], 0);
    const std::size_t K = cand.size();
    IntMatrix rel(1 + K, 1 + K);
    rel(0, 0) = q_ - 1;
    auto digits = [this](std::uint64_t idx) {
        std::vector<long> d;
        for (long m : digit_mod_) {
            d.push_back(static_cast<long>(idx % static_cast<std::uint64_t>(m)));
            idx /= static_cast<std::uint64_t>(m);
        }
        return d;
    };
    for (std::size_t i = 0; i < K; ++i) {
        long o = 1;
        LocalElt y = cand[i];
        while (!index_.count(ring.encode(y))) {
            y = ring.pow(y, static_cast<std::uint64_t>(p));
            o *= p;
        }
        std::vector<long> d = digits(index_.at(ring.encode(y)));
        rel(1 + i, 1 + i) = o;
        for (std::size_t j = 0; j < d.size(); ++j) rel(1 + j, 1 + i) -= d[j];
        const std::size_t h = keys.size();
        LocalElt gj = ring.one();
        for (long j = 1; j < o; ++j) {
            gj = ring.mul(gj, cand[i]);
            for (std::size_t t = 0; t < h; ++t) {
                std::uint64_t k = ring.encode(ring.mul(ring.decode(keys[t]), gj));
                index_.emplace(k, static_cast<std::uint32_t>(keys.size()));
                keys.push_back(k);
            }
        }
        digit_mod_.push_back(o);
    }
    if (keys.size() != one_order_) throw std::logic_error("1-unit candidates do not generate");

    Presentation pres = present(rel, 1 + K);
    group_ = pres.group;
    to_group_ = pres.to_group;
    // lifts of the generators: Teichmueller part times 1-unit part
    LocalElt g0 = ring.zero();
    LocalElt dg = unpack(g0_, p, r);
    for (int i = 0; i < r; ++i) g0[i] = dg[i];
    g0 = ring.reduce(g0);
    const std::uint64_t c = static_cast<std::uint64_t>(mod_inverse(static_cast<long>(one_order_ % static_cast<std::uint64_t>(q_ - 1 ? q_ - 1 : 1)), q_ - 1 ? q_ - 1 : 1));
    const LocalElt teich = ring.pow(g0, one_order_ * (q_ - 1 == 1 ? 1 : c));
    for (std::size_t j = 0; j < group_.ngens(); ++j) {
        LocalElt y = ring.pow(teich, static_cast<std::uint64_t>(mod_floor(pres.from_group(0, j), Int(q_ - 1)).get_ui()));
        for (std::size_t i = 0; i < K; ++i) {
            std::uint64_t ex = mod_floor(pres.from_group(1 + i, j), Int(static_cast<unsigned long>(one_order_))).get_ui();
            y = ring.mul(y, ring.pow(cand[i], ex));
        }
        lifts_.push_back(y);
    }
}

Vec UnitGroup::pr(const LocalElt& a0) const {
    LocalElt a = ring_.reduce(a0);
    if (!ring_.is_unit(a)) throw std::domain_error("pr is only defined on units");
    Vec raw(1 + digit_mod_.size());
    raw[0] = q_ > 2 ? residue_log(g0_, ring_.residue(a), ring_.p(), ring_.poly()) : 0;
    // the 1-unit component a^((q-1) d) with (q-1) d = 1 mod #U1
    std::uint64_t d = 1;
    if (one_order_ > 1) {
        mpz_class inv, qq = q_ - 1, oo = static_cast<unsigned long>(one_order_);
        mpz_invert(inv.get_mpz_t(), qq.get_mpz_t(), oo.get_mpz_t());
        d = inv.get_ui();
    }
    LocalElt u = ring_.pow(a, static_cast<std::uint64_t>(q_ - 1) * d);
    auto it = index_.find(ring_.encode(u));
    if (it == index_.end()) throw std::logic_error("1-unit not found");
    std::uint64_t idx = it->second;
    for (std::size_t i = 0; i < digit_mod_.size(); ++i) {
        raw[1 + i] = static_cast<long>(idx % static_cast<std::uint64_t>(digit_mod_[i]));
        idx /= static_cast<std::uint64_t>(digit_mod_[i]);
    }
    return group_.reduce(to_group_ * raw);
}

// ------------------------------------------------------------------ wild data

namespace {

void check_wild(const WildExtensionData& d) {
    check_ex(d.group, d.ex, d.frobenius, d.f, d.e);
    if (d.ring.e != d.e || d.ring.r != d.f) throw std::invalid_argument("ring does not match e and f over Q_p");
    const std::size_t n = d.group.order();
    if (d.pi_image.size() != n) throw std::invalid_argument("pi_image needs one value per element");
}

LocalRing full_ring(const WildExtensionData& d) { return LocalRing(d.ring, d.e * d.precision); }

LocalElt to_level(const LocalRing& ring, const LocalElt& a) { return ring.reduce(a); }

// the root of P_small in W of degree r_big, at the precision of big
LocalElt embed_root(const LocalRing& big, const LocalElt& small_poly) {
    const long p = big.p();
    const int rb = big.r();
    const long qb = ipow(p, rb);
    auto eval = [&](const LocalElt& y, bool derivative) {
        LocalElt acc = big.zero(), yp = big.one();
        const int deg = static_cast<int>(small_poly.size()) - 1;
        for (int i = 0; i <= deg; ++i) {
            if (derivative ? i >= 1 : true) {
                long c = derivative ? small_poly[i] * i : small_poly[i];
                LocalElt term = derivative ? big.pow(y, i - 1) : yp;
                acc = big.add(acc, big.mul(big.from_rational(c), term));
            }
            yp = big.mul(yp, y);
        }
        return acc;
    };
    for (long t = 0; t < qb; ++t) {
        LocalElt y = big.zero();
        LocalElt dg = unpack(t, p, rb);
        for (int i = 0; i < rb; ++i) y[i] = dg[i];
        y = big.reduce(y);
        if (big.residue(eval(y, false)) != 0) continue;
        for (int it = 0; it < 200; ++it) {
            LocalElt fy = eval(y, false);
            if (big.valuation(fy) >= big.n()) break;
            y = big.sub(y, big.mul(fy, big.inv(eval(y, true))));
        }
        return y;
    }
    throw std::logic_error("no root of the residue polynomial");
}

}  // namespace

ExtendedWild extend_unramified_4(const WildExtensionData& d, const WildCocycle& c) {
    if (d.f >= 4) return {d, c, {}};
    check_wild(d);
    UnramifiedLift l = unramified_4_group(d.group, d.ex, d.f);
    const int r = d.ring.r, rb = 4 * r / d.f, e = d.e;
    // W_r inside W_rb
    auto unramified = [&](int deg) {
        LocalRingSpec w{d.ring.p, deg, 1, {LocalElt(deg, 0)}};
        w.eisenstein[0][0] = d.ring.p;
        return w;
    };
    LocalRing wbig(unramified(rb), d.precision);
    const LocalElt poly_small = LocalRing(unramified(r), 1).poly();
    LocalElt root = embed_root(wbig, poly_small);
    std::vector<LocalElt> rpow{wbig.one()};
    for (int i = 1; i < r; ++i) rpow.push_back(wbig.mul(rpow.back(), root));
    auto map_w = [&](const LocalElt& a, int k) {
        LocalElt y = wbig.zero();
        for (int i = 0; i < r; ++i) y = wbig.add(y, wbig.mul(wbig.from_rational(a[k * r + i]), rpow[i]));
        return y;
    };
    auto map_elt = [&](const LocalElt& a) {
        LocalElt res(static_cast<std::size_t>(e) * rb, 0);
        for (int k = 0; k < e; ++k) {
            LocalElt y = map_w(a, k);
            for (int i = 0; i < rb; ++i) res[k * rb + i] = y[i];
        }
        return res;
    };
    WildExtensionData x;
    x.group = l.group;
    x.f = 4;
    x.e = e;
    x.ex = l.pr2;
    x.frobenius = find_pair(l, d.frobenius, 1);
    x.precision = d.precision;
    x.ring = LocalRingSpec{d.ring.p, rb, e, {}};
    for (int k = 0; k < e; ++k) {
        LocalElt s = map_w(LocalElt(d.ring.eisenstein[k]), 0);
        x.ring.eisenstein.push_back(s);
    }
    for (int a : l.pr1) x.pi_image.push_back(map_elt(d.pi_image[a]));
    x.base_ratio = map_elt(d.base_ratio);
    const int n = d.group.order(), n2 = x.group.order();
    if (c.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("cocycle needs |G|^2 values");
    WildCocycle c2(static_cast<std::size_t>(n2) * n2);
    for (int s = 0; s < n2; ++s)
        for (int t = 0; t < n2; ++t) {
            const WildValue& v = c[l.pr1[s] * n + l.pr1[t]];
            c2[s * n2 + t] = {v.valuation, map_elt(v.unit)};
        }
    return {std::move(x), std::move(c2), std::move(l.pr1)};
}

WildResult invariant_wild(const WildExtensionData& d, const WildCocycle& c, int n) {
    if (d.f < 4) {
        ExtendedWild x = extend_unramified_4(d, c);
        return invariant_wild(x.data, x.cocycle, n);
    }
    check_wild(d);
    const int order = d.group.order();
    if (c.size() != static_cast<std::size_t>(order) * order) throw std::invalid_argument("cocycle needs |G|^2 values");
    if (n < 1 || n + 2 * d.e > d.e * d.precision) throw std::invalid_argument("n outside the precision of the data");
    LocalRing full = full_ring(d);
    LocalRing ring(d.ring, n);
    UnitGroup units(ring);
    const FinAbGroup base = direct_sum(FinAbGroup::free(1), units.group());
    const std::size_t k = base.ngens();
    auto image = [&](int v, const LocalElt& u) {
        Vec y(k);
        y[0] = v;
        Vec w = units.pr(to_level(ring, u));
        for (std::size_t i = 0; i < w.size(); ++i) y[1 + i] = w[i];
        return y;
    };
    std::vector<IntMatrix> acts;
    for (int g : d.group.gens()) {
        IntMatrix a(k, k);
        int v;
        LocalElt ratio = full.unit_part(full.reduce(d.pi_image[g]), v);
        if (v != 1) throw std::invalid_argument("pi_image is not a uniformiser");
        Vec col0 = image(1, ratio);
        for (std::size_t i = 0; i < k; ++i) a(i, 0) = col0[i];
        const LocalElt img = ring.reduce(d.pi_image[g]);
        for (std::size_t j = 0; j + 1 < k; ++j) {
            Vec col = image(0, ring.apply(units.lifts()[j], d.ex[g], img));
            for (std::size_t i = 0; i < k; ++i) a(i, 1 + j) = col[i];
        }
        acts.push_back(a);
    }
    GModule m(d.group, base, acts);
    Cochain2 st(static_cast<std::size_t>(order) * order, Vec(k));
    const Vec st_value = image(d.e, d.base_ratio);
    for (int s = 0; s < order; ++s)
        for (int t = 0; t < order; ++t)
            if (d.ex[s] + d.ex[t] >= d.f) st[s * order + t] = st_value;
    Cochain2 ci(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) ci[i] = image(c[i].valuation, c[i].unit);
    if (!is_cocycle2(m, st)) throw std::logic_error("standard cocycle fails the cocycle identity");
    if (is_coboundary2(m, scaled(st, d.f / 2))) return {std::nullopt, n};
    return {compare_with_standard(m, ci, st, d.f), n};
}

WildResult invariant_wild_auto(const WildExtensionData& d, const WildCocycle& c, int n_start, int n_cap) {
    WildResult last{std::nullopt, n_start};
    for (int n = n_start; n <= n_cap; ++n) {
        try {
            last = invariant_wild(d, c, n);
        } catch (const std::length_error&) {
            return {std::nullopt, n};
        }
        if (last.invariant) return last;
    }
    return last;
}

WildCocycle cocycle_from_cyclic_algebra(const FiniteGroup& g, int sigma, const WildValue& a) {
    Cochain2 pattern = cocycle_from_cyclic_algebra(g, sigma, Vec{1});
    WildCocycle c(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i][0] == 1) c[i] = a;
        else c[i] = {0, LocalElt(a.unit.size(), 0)}, c[i].unit[0] = 1;
    }
    return c;
}

WildExtensionData quadratic_wild(const mpq_class& a, long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (a == 0) throw std::invalid_argument("zero has no square root class");
    WildExtensionData d;
    d.precision = std::max(8, static_cast<int>(58 / std::log2(static_cast<double>(p))) - 1);
    const long pm = ipow(p, d.precision);
    int v = valuation(a, p);
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p, std::abs(v));
    mpq_class u = v >= 0 ? mpq_class(a / pv) : mpq_class(a * pv);
    const long u8 = residue_mod(u, p == 2 ? 8 : p);
    bool square = v % 2 == 0 && (p == 2 ? u8 == 1 : legendre(mpz_class(u8), p) == 1);
    bool unramified = v % 2 == 0 && !square && (p != 2 || u8 == 5);
    if (square) {
        d.group = FiniteGroup::cyclic(1);
        d.ex = {0};
        d.ring = LocalRingSpec{p, 1, 1, {{p}}};
        d.pi_image = {{p}};
        d.base_ratio = {1};
        return d;
    }
    d.group = FiniteGroup::cyclic(2);
    if (unramified) {
        d.f = 2;
        d.ex = {0, 1};
        d.frobenius = 1;
        d.ring = LocalRingSpec{p, 2, 1, {{p, 0}}};
        d.pi_image = {{p, 0}, {p, 0}};
        d.base_ratio = {1, 0};
        return d;
    }
    d.e = 2;
    d.ex = {0, 0};
    // the square class representative dd, and pi_l = sqrt dd or 1 + sqrt dd
    long dd = (v % 2 ? p : 1) * (p == 2 ? u8 : residue_mod(u, pm));
    if (v % 2 == 0 && p != 2) throw std::logic_error("unit classes are unramified for odd p");
    if (dd % 2 == 0 || p != 2) {
        d.ring = LocalRingSpec{p, 1, 2, {{mmod(dd, pm)}, {0}}};
        d.pi_image = {{0, 1}, {0, pm - 1}};
    } else {
        d.ring = LocalRingSpec{p, 1, 2, {{dd - 1}, {2}}};
        d.pi_image = {{0, 1}, {2, pm - 1}};
    }
    LocalRing full = full_ring(d);
    d.base_ratio = full.inv(full.reduce({d.ring.eisenstein[0][0] / p, d.ring.eisenstein[1][0] / p}));
    return d;
}

WildValue wild_value(const WildExtensionData& d, const mpq_class& b) {
    if (b == 0) throw std::invalid_argument("zero has no valuation");
    const long p = d.ring.p;
    LocalRing full = full_ring(d);
    int v = valuation(b, p);
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p, std::abs(v));
    mpq_class w = v >= 0 ? mpq_class(b / pv) : mpq_class(b * pv);
    LocalElt ratio = full.reduce(d.base_ratio);
    if (v < 0) ratio = full.inv(ratio);
    LocalElt unit = full.mul(full.from_rational(w), full.pow(ratio, static_cast<std::uint64_t>(std::abs(v))));
    return {d.e * v, unit};
}

}  // namespace brauer
