#include "brauer/residue_symbols.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace brauer {

namespace {

using i128 = __int128;

long mulmod(long a, long b, long m) { return static_cast<long>(static_cast<i128>(a) * b % m); }

long powmod(long a, long e, long m) {
    long r = 1 % m;
    a %= m;
    if (a < 0) a += m;
    for (; e > 0; e >>= 1, a = mulmod(a, a, m))
        if (e & 1) r = mulmod(r, a, m);
    return r;
}

long invmod(long a, long m) {
    mpz_class r, aa = a, mm = m;
    if (!mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t())) throw std::domain_error("not invertible");
    return r.get_si();
}

long mod_of(const mpz_class& a, long m) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_si();
}

// residue of a p-integral rational modulo m = p^k
long residue(const mpq_class& x, long m) {
    long d = mod_of(x.get_den(), m);
    return mulmod(mod_of(x.get_num(), m), invmod(d, m), m);
}

// a representative integer of the square class of a nonzero rational
mpz_class square_class_int(const mpq_class& a) {
    if (a == 0) throw std::invalid_argument("Hilbert symbol of zero");
    return a.get_num() * a.get_den();
}

mpz_class strip(const mpz_class& n, long p, int& v) {
    mpz_class u = n;
    v = static_cast<int>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), mpz_class(p).get_mpz_t()));
    return u;
}

void check_prime(long p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int valuation(const mpz_class& n, long p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    int v;
    strip(n, p, v);
    return v;
}

int valuation(const mpq_class& x, long p) { return valuation(x.get_num(), p) - valuation(x.get_den(), p); }

long legendre(const mpz_class& a, long p) { return mpz_legendre(a.get_mpz_t(), mpz_class(p).get_mpz_t()); }

long sqrt_mod(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    for (long r = 0; r < p; ++r)
        if (mulmod(r, r, p) == a) return r;
    return -1;
}

int hilbert_qp(const mpq_class& a, const mpq_class& b, long p) {
    check_prime(p);
    int al, be;
    mpz_class u = strip(square_class_int(a), p, al), v = strip(square_class_int(b), p, be);
    if (p == 2) {
        long u8 = mod_of(u, 8), v8 = mod_of(v, 8);
        auto eps = [](long x) { return ((x - 1) / 2) & 1; };
        auto omega = [](long x) { return ((x * x - 1) / 8) & 1; };
        long e = eps(u8) * eps(v8) + al * omega(v8) + be * omega(u8);
        return e % 2 ? -1 : 1;
    }
    long s = ((static_cast<long>(al) * be % 2) && ((p - 1) / 2 % 2)) ? -1 : 1;
    if (be % 2) s *= legendre(u, p);
    if (al % 2) s *= legendre(v, p);
    return static_cast<int>(s);
}

int hilbert_real(const mpq_class& a, const mpq_class& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
    return a < 0 && b < 0 ? -1 : 1;
}

int hilbert(const mpq_class& a, const mpq_class& b, Place v) { return v.is_real() ? hilbert_real(a, b) : hilbert_qp(a, b, v.p); }

std::vector<long> bad_primes(const std::vector<mpq_class>& xs) {
    std::set<long> ps{2};
    for (const mpq_class& x : xs)
        for (mpz_class n : {x.get_num(), x.get_den()}) {
            n = abs(n);
            for (long d = 2; n > 1 && d <= 10000000; ++d) {
                if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                    ps.insert(d);
                    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= d;
                }
                if (mpz_class(d) * d > n) break;
            }
            if (n > 1) {
                if (!n.fits_slong_p() || !is_prime(n.get_si())) throw std::domain_error("factorization out of range");
                ps.insert(n.get_si());
            }
        }
    return {ps.begin(), ps.end()};
}

// ------------------------------------------------------------- Q(sqrt 5)

QSqrt5 operator/(const QSqrt5& a, const QSqrt5& b) {
    mpq_class n = b.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt 5)");
    QSqrt5 c = a * b.conj();
    return {c.x / n, c.y / n};
}

std::string QSqrt5::str() const { return x.get_str() + (y < 0 ? "-" : "+") + mpq_class(abs(y)).get_str() + "*sqrt5"; }

std::string QuadPlace::str() const {
    switch (kind) {
        case Kind::real: return branch > 0 ? "inf+" : "inf-";
        case Kind::split: return "(" + std::to_string(p) + ",sqrt5=" + std::to_string(branch) + ")";
        case Kind::inert: return "(" + std::to_string(p) + ")";
        case Kind::ramified: return "(sqrt5)";
    }
    return "?";
}

std::vector<QuadPlace> places_above(Place v) {
    using K = QuadPlace::Kind;
    if (v.is_real()) return {{K::real, 0, 1}, {K::real, 0, -1}};
    check_prime(v.p);
    if (v.p == 5) return {{K::ramified, 5, 0}};
    if (v.p == 2) return {{K::inert, 2, 0}};
    long r = sqrt_mod(5, v.p);
    if (r < 0) return {{K::inert, v.p, 0}};
    return {{K::split, v.p, r}, {K::split, v.p, v.p - r}};
}

int sign_at(const QSqrt5& a, int branch) {
    // sign of x + s*y*sqrt5
    mpq_class x = a.x, y = branch * a.y;
    int sx = sgn(x), sy = sgn(y);
    if (sx == 0) return sy;
    if (sy == 0 || sx == sy) return sx;
    // opposite signs: compare x^2 with 5 y^2
    return x * x > 5 * y * y ? sx : sy;
}

namespace {

// Residue data of an element at a finite place: the valuation and the
// residue of a / pi^v in the residue field F_p or F_p[sqrt 5].
struct LocalUnit {
    int v;
    long u0, u1;  // u0 + u1*sqrt5 in the residue field
};

long lift_root(long r, long m) {
    // Newton iteration for r^2 = 5 modulo m = p^K
    long x = r;
    for (int i = 0; i < 64; ++i) {
        long f = (mulmod(x, x, m) - 5 % m + m) % m;
        if (f == 0) break;
        x = (x - mulmod(f, invmod(mulmod(2, x, m), m), m) + m) % m;
    }
    return x;
}

LocalUnit local_unit(const QSqrt5& a, const QuadPlace& w) {
    using K = QuadPlace::Kind;
    if (a.is_zero()) throw std::invalid_argument("symbol of zero");
    const long p = w.p;
    if (w.kind == K::inert) {
        int v = INT32_MAX;
        for (const mpq_class* c : {&a.x, &a.y})
            if (*c != 0) v = std::min(v, valuation(*c, p));
        mpz_class pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), p, std::abs(v));
        mpq_class scale = v >= 0 ? mpq_class(mpz_class(1), pv) : mpq_class(pv);
        return {v, residue(a.x * scale, p), residue(a.y * scale, p)};
    }
    if (w.kind == K::ramified) {
        int v = valuation(a.norm(), 5);
        QSqrt5 b = a;
        for (int i = 0; i < v; ++i) b = QSqrt5(b.y, b.x / 5);
        for (int i = 0; i > v; --i) b = QSqrt5(5 * b.y, b.x);
        return {v, residue(b.x, 5), 0};
    }
    if (w.kind == K::split) {
        mpz_class d = lcm(a.x.get_den(), a.y.get_den());
        mpz_class X = a.x.get_num() * (d / a.x.get_den()), Y = a.y.get_num() * (d / a.y.get_den());
        mpz_class n = X * X - 5 * Y * Y;
        int kk = valuation(n, p) + 1;
        mpz_class mz;
        mpz_ui_pow_ui(mz.get_mpz_t(), p, kk);
        if (!mz.fits_slong_p() || mz > mpz_class(1) << 60) throw std::domain_error("precision exceeds machine range");
        long m = mz.get_si();
        long r = lift_root(w.branch, m);
        long t = (mod_of(X, m) + mulmod(mod_of(Y, m), r, m)) % m;
        int v0 = 0;
        while (t % p == 0) t /= p, ++v0;
        int vd;
        mpz_class du = strip(d, p, vd);
        long u = mulmod(t % p, invmod(mod_of(du, p), p), p);
        return {v0 - vd, u, 0};
    }
    throw std::logic_error("no residue field at a real place");
}

// x^e in F_p[sqrt 5] (or F_p when the sqrt 5 part vanishes)
std::array<long, 2> fpow(std::array<long, 2> x, long e, long p) {
    std::array<long, 2> r{1, 0};
    auto mul = [p](const std::array<long, 2>& a, const std::array<long, 2>& b) {
        return std::array<long, 2>{(mulmod(a[0], b[0], p) + mulmod(5 * a[1] % p, b[1], p)) % p,
                                   (mulmod(a[0], b[1], p) + mulmod(a[1], b[0], p)) % p};
    };
    for (; e > 0; e >>= 1, x = mul(x, x))
        if (e & 1) r = mul(r, x);
    return r;
}

int tame_symbol(const LocalUnit& a, const LocalUnit& b, long p, long q) {
    // ((-1)^(ab) u^b / v^a)^((q-1)/2), with the residue field of size q
    auto pw = [&](const LocalUnit& x, long e) {
        long ee = ((e % (q - 1)) + (q - 1)) % (q - 1);
        return fpow({x.u0, x.u1}, ee, p);
    };
    std::array<long, 2> t1 = pw(a, b.v), t2 = pw(b, -static_cast<long>(a.v));
    std::array<long, 2> t{(mulmod(t1[0], t2[0], p) + mulmod(5 * t1[1] % p, t2[1], p)) % p,
                          (mulmod(t1[0], t2[1], p) + mulmod(t1[1], t2[0], p)) % p};
    if ((static_cast<long>(a.v) * b.v) % 2) t = {(p - t[0]) % p, (p - t[1]) % p};
    std::array<long, 2> s = fpow(t, (q - 1) / 2, p);
    if (s[1] != 0) throw std::logic_error("tame symbol outside F_p");
    if (s[0] == 1) return 1;
    if (s[0] == p - 1) return -1;
    throw std::logic_error("tame symbol is not a sign");
}

// O / 2^5 for O the integers of Q_2(sqrt 5), basis (1, w) with w^2 = w + 1
constexpr long kMod2 = 32;
using O2 = std::array<long, 2>;

O2 omul(const O2& a, const O2& b) {
    return {(a[0] * b[0] + a[1] * b[1]) % kMod2, (a[0] * b[1] + a[1] * b[0] + a[1] * b[1]) % kMod2};
}

// a unit times 2^(v mod 2), reduced modulo 2^5
O2 two_adic_class(const QSqrt5& a) {
    // x + y sqrt5 = (x - y) + 2y w
    mpq_class c0 = a.x - a.y, c1 = 2 * a.y;
    int v = INT32_MAX;
    for (const mpq_class* c : {&c0, &c1})
        if (*c != 0) v = std::min(v, valuation(*c, 2));
    mpq_class scale = v >= 0 ? mpq_class(mpz_class(1), mpz_class(1) << v) : mpq_class(mpz_class(mpz_class(1) << -v));
    O2 u{residue(c0 * scale, kMod2), residue(c1 * scale, kMod2)};
    if (((v % 2) + 2) % 2) u = {2 * u[0] % kMod2, 2 * u[1] % kMod2};
    return u;
}

int hilbert_two_adic_sqrt5(const QSqrt5& a, const QSqrt5& b) {
    // primitive solutions of z^2 = a x^2 + b y^2 modulo 2^5 lift, since the
    // gradient has valuation at most 2
    O2 ca = two_adic_class(a), cb = two_adic_class(b);
    const int n = kMod2 * kMod2;
    std::vector<O2> el(n), sq(n);
    std::vector<char> is_sq(n, 0), is_unit_sq(n, 0);
    auto code = [](const O2& x) { return static_cast<int>(x[0] * kMod2 + x[1]); };
    auto unit = [](const O2& x) { return (x[0] % 2) || (x[1] % 2); };
    for (int i = 0; i < n; ++i) {
        el[i] = {i / kMod2, i % kMod2};
        sq[i] = omul(el[i], el[i]);
        is_sq[code(sq[i])] = 1;
        if (unit(el[i])) is_unit_sq[code(sq[i])] = 1;
    }
    std::vector<O2> ax(n), by(n);
    for (int i = 0; i < n; ++i) ax[i] = omul(ca, sq[i]), by[i] = omul(cb, sq[i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            O2 t{(ax[i][0] + by[j][0]) % kMod2, (ax[i][1] + by[j][1]) % kMod2};
            bool prim = unit(el[i]) || unit(el[j]);
            if (prim ? is_sq[code(t)] : is_unit_sq[code(t)]) return 1;
        }
    return -1;
}

}  // namespace

int valuation_at(const QSqrt5& a, const QuadPlace& w) {
    if (w.kind == QuadPlace::Kind::real) return 0;
    if (w.kind == QuadPlace::Kind::inert && w.p == 2) {
        mpq_class c0 = a.x - a.y, c1 = 2 * a.y;
        int v = INT32_MAX;
        for (const mpq_class* c : {&c0, &c1})
            if (*c != 0) v = std::min(v, valuation(*c, 2));
        return v;
    }
    return local_unit(a, w).v;
}

int hilbert_sqrt5(const QSqrt5& a, const QSqrt5& b, const QuadPlace& w) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("Hilbert symbol of zero");
    using K = QuadPlace::Kind;
    if (w.kind == K::real) return sign_at(a, static_cast<int>(w.branch)) < 0 && sign_at(b, static_cast<int>(w.branch)) < 0 ? -1 : 1;
    if (w.p == 2) return hilbert_two_adic_sqrt5(a, b);
    long q = w.kind == K::inert ? w.p * w.p : w.p;
    return tame_symbol(local_unit(a, w), local_unit(b, w), w.p, q);
}

// ------------------------------------------------------------------ Artin

namespace {

std::vector<long> closure_mod(const std::vector<long>& h, long m) {
    std::set<long> s{1 % m};
    std::vector<long> list{1 % m};
    for (std::size_t i = 0; i < list.size(); ++i)
        for (long g : h) {
            long x = mulmod(list[i], ((g % m) + m) % m, m);
            if (s.insert(x).second) list.push_back(x);
        }
    return list;
}

long coset_rep(long c, long m, const std::vector<long>& H) {
    long best = m;
    for (long h : H) best = std::min(best, mulmod(c, h, m));
    return best;
}

}  // namespace

long artin_cyclotomic(const mpq_class& a, Place v, long m, const std::vector<long>& Hgens) {
    if (a == 0) throw std::invalid_argument("Artin symbol of zero");
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    std::vector<long> H = closure_mod(Hgens, m);
    if (m == 1) return 0;
    long c;
    if (v.is_real()) {
        c = a < 0 ? m - 1 : 1;
    } else {
        check_prime(v.p);
        long p = v.p, pk = 1, rest = m;
        while (rest % p == 0) rest /= p, pk *= p;
        int al = valuation(a, p);
        mpq_class u = a;
        mpz_class pa;
        mpz_ui_pow_ui(pa.get_mpz_t(), p, std::abs(al));
        u = al >= 0 ? mpq_class(u / pa) : mpq_class(u * pa);
        // unramified part: Frobenius to the power al on Z/rest
        long c1 = al >= 0 ? powmod(p, al, rest) : powmod(invmod(p % rest, rest), -al, rest);
        // ramified part: u^-1 on Z/p^k
        long c2 = pk > 1 ? invmod(residue(u, pk), pk) : 0;
        // combine by CRT
        c = c1;
        if (pk > 1) {
            long t = mulmod(((c2 - c1) % pk + pk) % pk, invmod(rest % pk, pk), pk);
            c = (c1 + rest * t) % m;
        }
        c %= m;
    }
    return coset_rep(c, m, H);
}

mpq_class cyclic_symbol_invariant(long coset, long g, long m, const std::vector<long>& Hgens) {
    std::vector<long> H = closure_mod(Hgens, m);
    long target = coset_rep(((coset % m) + m) % m, m, H);
    long x = 1 % m;
    long n = 0, found = -1;
    do {
        if (coset_rep(x, m, H) == target && found < 0) found = n;
        x = mulmod(x, ((g % m) + m) % m, m);
        ++n;
    } while (coset_rep(x, m, H) != coset_rep(1 % m, m, H) && n <= m);
    if (found < 0) throw std::invalid_argument("coset is not a power of the generator");
    mpq_class r(found, n);
    r.canonicalize();
    return r;
}

mpq_class mod_one(mpq_class x) {
    x.canonicalize();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - f;
}

std::string frac_str(const mpq_class& x) {
    mpq_class y = x;
    y.canonicalize();
    if (y.get_den() == 1) return y.get_num().get_str();
    return y.get_num().get_str() + "/" + y.get_den().get_str();
}

}  // namespace brauer
