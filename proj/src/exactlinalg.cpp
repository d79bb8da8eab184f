#include "brauer/exactlinalg.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace brauer {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec IntMatrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec IntMatrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
    IntMatrix m(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
    }
    return m;
}

IntMatrix IntMatrix::vcat(const IntMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vcat: column mismatch");
    IntMatrix m(rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), m.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), m.a_.begin() + a_.size());
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

Vec operator*(const IntMatrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (v[k] != 0) r[i] += a(i, k) * v[k];
    return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// ------------------------------------------------------------ Smith form

namespace {

struct SnfState {
    IntMatrix a, u, v, uinv;
    bool tu, tv;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        if (tu) {
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
            for (std::size_t r = 0; r < uinv.rows(); ++r) std::swap(uinv(r, i), uinv(r, j));
        }
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        if (tv)
            for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(j, k) != 0) a(i, k) += c * a(j, k);
        if (tu) {
            for (std::size_t k = 0; k < u.cols(); ++k)
                if (u(j, k) != 0) u(i, k) += c * u(j, k);
            for (std::size_t r = 0; r < uinv.rows(); ++r)
                if (uinv(r, i) != 0) uinv(r, j) -= c * uinv(r, i);
        }
    }
    // col_i += c * col_j
    void add_col(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (a(k, j) != 0) a(k, i) += c * a(k, j);
        if (tv)
            for (std::size_t k = 0; k < v.rows(); ++k)
                if (v(k, j) != 0) v(k, i) += c * v(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
        if (tu) {
            for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
            for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
        }
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool want_u, bool want_v) {
    const std::size_t R = m.rows(), C = m.cols();
    SnfState st{m, want_u ? IntMatrix::identity(R) : IntMatrix(), want_v ? IntMatrix::identity(C) : IntMatrix(),
                want_u ? IntMatrix::identity(R) : IntMatrix(), want_u, want_v};
    IntMatrix& a = st.a;
    std::size_t t = 0;
    for (; t < std::min(R, C); ++t) {
        for (;;) {
            // pivot: smallest absolute value, then lowest (row, col)
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi == R || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) pi = i, pj = j;
                }
            if (pi == R) goto done;
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (a(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                st.add_row(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (a(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                st.add_col(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        st.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) st.negate_row(t);
    }
done:
    SmithForm out;
    out.rank = t;
    out.s = std::move(st.a);
    out.u = std::move(st.u);
    out.v = std::move(st.v);
    out.uinv = std::move(st.uinv);
    return out;
}

// ------------------------------------------------------- row compression

namespace {

struct Overflow {};

inline long long ck_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline long long ck_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline long long ck_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

struct I64 {
    using T = long long;
    static T mul(T a, T b) { return ck_mul(a, b); }
    static T add(T a, T b) { return ck_add(a, b); }
    static T sub(T a, T b) { return ck_sub(a, b); }
    static T mod(T a, T m) {
        T r = a % m;
        return r < 0 ? r + m : r;
    }
    static T divq(T a, T b) { return a / b; }  // exact use only
    static bool zero(T a) { return a == 0; }
    static T gcdext(T a, T b, T& s, T& t) {
        T os = 1, ot = 0, cs = 0, ct = 1;
        while (b != 0) {
            T q = a / b;
            T r = a - q * b;
            a = b, b = r;
            T ns = ck_sub(os, ck_mul(q, cs));
            os = cs, cs = ns;
            T nt = ck_sub(ot, ck_mul(q, ct));
            ot = ct, ct = nt;
        }
        if (a < 0) a = -a, os = -os, ot = -ot;
        s = os, t = ot;
        return a;
    }
    static T from(const Int& x) {
        if (!x.fits_slong_p()) throw Overflow{};
        return x.get_si();
    }
    static Int to(T x) { return Int(static_cast<long>(x)); }
};

struct Big {
    using T = Int;
    static T mul(const T& a, const T& b) { return a * b; }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mod(const T& a, const T& m) { return mod_floor(a, m); }
    static T divq(const T& a, const T& b) { return a / b; }
    static bool zero(const T& a) { return a == 0; }
    static T gcdext(const T& a, const T& b, T& s, T& t) { return ext_gcd(a, b, s, t); }
    static T from(const Int& x) { return x; }
    static Int to(const T& x) { return x; }
};

// Incremental integral echelon of a set of rows sharing one modulus m (0 = exact).
template <class A>
std::vector<std::vector<typename A::T>> echelon(const std::vector<const Int*>& rows, std::size_t n, const Int& m) {
    using T = typename A::T;
    const bool modular = m != 0;
    T mm = modular ? A::from(m) : T(0);
    std::vector<std::vector<T>> basis;
    std::vector<int> piv_row(n, -1);
    std::vector<T> r(n);
    auto norm = [&](std::vector<T>& v, std::size_t from) {
        if (modular)
            for (std::size_t k = from; k < n; ++k) v[k] = A::mod(v[k], mm);
    };
    for (const Int* src : rows) {
        for (std::size_t k = 0; k < n; ++k) r[k] = A::from(src[k]);
        norm(r, 0);
        for (std::size_t c = 0; c < n; ++c) {
            if (A::zero(r[c])) continue;
            int bi = piv_row[c];
            if (bi < 0) {
                piv_row[c] = static_cast<int>(basis.size());
                basis.push_back(r);
                break;
            }
            auto& b = basis[bi];
            T s, t;
            T g = A::gcdext(b[c], r[c], s, t);
            T rb = A::divq(r[c], g), bb = A::divq(b[c], g);
            // new_b = s*b + t*r ; new_r = rb*b - bb*r  (determinant s*(-bb) - t*rb = -1)
            std::vector<T> nb(n);
            for (std::size_t k = c; k < n; ++k) {
                nb[k] = A::add(A::mul(s, b[k]), A::mul(t, r[k]));
                r[k] = A::sub(A::mul(rb, b[k]), A::mul(bb, r[k]));
            }
            for (std::size_t k = 0; k < c; ++k) nb[k] = b[k];
            norm(nb, c);
            norm(r, c);
            b = std::move(nb);
        }
    }
    return basis;
}

}  // namespace

CompressedRows compress_rows(const IntMatrix& a, const std::vector<Int>& moduli) {
    const std::size_t n = a.cols();
    std::map<Int, std::vector<const Int*>> groups;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int m = moduli.empty() ? Int(0) : moduli.at(i);
        if (m == 1) continue;  // equations mod 1 are vacuous
        groups[m].push_back(&a(i, 0));
    }
    std::vector<Vec> out_rows;
    std::vector<Int> out_mod;
    for (auto& [m, rows] : groups) {
        if (n == 0) break;
        std::vector<Vec> res;
        bool done = false;
        if (m == 0 || m.fits_slong_p()) {
            try {
                auto b = echelon<I64>(rows, n, m);
                for (auto& r : b) {
                    Vec v(n);
                    for (std::size_t k = 0; k < n; ++k) v[k] = I64::to(r[k]);
                    res.push_back(std::move(v));
                }
                done = true;
            } catch (const Overflow&) {
                res.clear();
            }
        }
        if (!done) res = echelon<Big>(rows, n, m);
        for (auto& v : res) {
            out_rows.push_back(std::move(v));
            out_mod.push_back(m);
        }
    }
    CompressedRows cr;
    cr.rows = IntMatrix(out_rows.size(), n);
    for (std::size_t i = 0; i < out_rows.size(); ++i)
        for (std::size_t k = 0; k < n; ++k) cr.rows(i, k) = out_rows[i][k];
    cr.moduli = std::move(out_mod);
    return cr;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    const std::size_t n = a.cols();
    IntMatrix r = compress_rows(a).rows;
    if (r.rows() == 0) return IntMatrix::identity(n);
    SmithForm s = smith_normal_form(r, false, true);
    IntMatrix k(n, n - s.rank);
    for (std::size_t j = s.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j - s.rank) = s.v(i, j);
    return k;
}

IntMatrix lattice_basis(const IntMatrix& g) {
    return compress_rows(g.transpose()).rows.transpose();
}

std::optional<AffineSolution> solve_affine(const IntMatrix& a, const Vec& y, const std::vector<Int>& moduli) {
    const std::size_t n = a.cols();
    if (y.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    IntMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = y[i];
    }
    CompressedRows cr = compress_rows(aug, moduli);
    const std::size_t R = cr.rows.rows();
    std::size_t slack = 0;
    for (const Int& m : cr.moduli)
        if (m != 0) ++slack;
    IntMatrix b(R, n + slack);
    Vec rhs(R);
    std::size_t sc = n;
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < n; ++j) b(i, j) = cr.rows(i, j);
        rhs[i] = cr.rows(i, n);
        if (cr.moduli[i] != 0) b(i, sc++) = cr.moduli[i];
    }
    const std::size_t N = n + slack;
    AffineSolution sol;
    sol.particular.assign(n, 0);
    if (R == 0) {
        sol.kernel = IntMatrix::identity(n);
        return sol;
    }
    SmithForm s = smith_normal_form(b, true, true);
    Vec uy = s.u * rhs;
    Vec w(N);
    for (std::size_t i = 0; i < R; ++i) {
        if (i < s.rank) {
            if (!mpz_divisible_p(uy[i].get_mpz_t(), s.s(i, i).get_mpz_t())) return std::nullopt;
            w[i] = uy[i] / s.s(i, i);
        } else if (uy[i] != 0) {
            return std::nullopt;
        }
    }
    Vec z = s.v * w;
    for (std::size_t j = 0; j < n; ++j) sol.particular[j] = z[j];
    IntMatrix k(n, N - s.rank);
    for (std::size_t j = s.rank; j < N; ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j - s.rank) = s.v(i, j);
    sol.kernel = std::move(k);
    return sol;
}

std::optional<Vec> solve_system(const IntMatrix& a, const Vec& y, const std::vector<Int>& moduli) {
    auto s = solve_affine(a, y, moduli);
    if (!s) return std::nullopt;
    return s->particular;
}

// ------------------------------------------------------------ FinAbGroup

std::vector<Int> FinAbGroup::moduli() const {
    std::vector<Int> m(free_rank, 0);
    m.insert(m.end(), torsion.begin(), torsion.end());
    return m;
}

Vec FinAbGroup::reduce(Vec x) const {
    if (x.size() != ngens()) throw std::invalid_argument("element length does not match group");
    for (std::size_t i = free_rank; i < x.size(); ++i) x[i] = mod_floor(x[i], torsion[i - free_rank]);
    return x;
}

bool FinAbGroup::is_zero(const Vec& x) const {
    Vec r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

Int FinAbGroup::order() const {
    if (free_rank) return 0;
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
}

Int FinAbGroup::exponent() const {
    if (free_rank) return 0;
    return torsion.empty() ? Int(1) : torsion.back();
}

Int FinAbGroup::element_order(const Vec& x) const {
    Vec r = reduce(x);
    for (std::size_t i = 0; i < free_rank; ++i)
        if (r[i] != 0) return 0;
    Int o = 1;
    for (std::size_t i = free_rank; i < r.size(); ++i) {
        const Int& d = torsion[i - free_rank];
        Int g = gcd(r[i], d);
        Int oi = d / g;
        o = lcm(o, oi);
    }
    return o;
}

std::string FinAbGroup::str() const {
    if (ngens() == 0) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank) {
        os << "Z";
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    // group equal factors: Z/4 + (Z/2)^2, largest first
    std::vector<std::pair<Int, int>> runs;
    for (auto it = torsion.rbegin(); it != torsion.rend(); ++it) {
        if (!runs.empty() && runs.back().first == *it)
            ++runs.back().second;
        else
            runs.push_back({*it, 1});
    }
    for (auto& [d, k] : runs) {
        if (!first) os << " + ";
        first = false;
        if (k == 1)
            os << "Z/" << d.get_str();
        else
            os << "(Z/" << d.get_str() << ")^" << k;
    }
    return os.str();
}

FinAbGroup FinAbGroup::cyclic(const Int& n) {
    if (n == 0) return free(1);
    if (n == 1) return {};
    return FinAbGroup{0, {abs(n)}};
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    IntMatrix rel(a.ngens() + b.ngens(), a.torsion.size() + b.torsion.size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.torsion.size(); ++i) rel(a.free_rank + i, c++) = a.torsion[i];
    for (std::size_t i = 0; i < b.torsion.size(); ++i) rel(a.ngens() + b.free_rank + i, c++) = b.torsion[i];
    return present(rel, a.ngens() + b.ngens()).group;
}

// ------------------------------------------------------------------ AbHom

Vec AbHom::apply(const Vec& x) const { return target.reduce(matrix * x); }

bool AbHom::well_defined() const {
    if (matrix.rows() != target.ngens() || matrix.cols() != source.ngens()) return false;
    for (std::size_t i = 0; i < source.torsion.size(); ++i) {
        Vec e(source.ngens());
        e[source.free_rank + i] = source.torsion[i];
        if (!target.is_zero(matrix * e)) return false;
    }
    return true;
}

namespace {

IntMatrix relation_matrix(const std::vector<Int>& moduli) {
    std::size_t t = 0;
    for (const Int& m : moduli)
        if (m != 0) ++t;
    IntMatrix r(moduli.size(), t);
    std::size_t c = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i] != 0) r(i, c++) = moduli[i];
    return r;
}

IntMatrix relation_matrix(const FinAbGroup& g) { return relation_matrix(g.moduli()); }

Vec reduce_mod(Vec x, const std::vector<Int>& moduli) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (moduli[i] != 0) x[i] = mod_floor(x[i], moduli[i]);
    return x;
}

// L / rel for a lattice L (basis columns, n x k) containing the relation lattice.
Presentation quotient_of_lattice(const IntMatrix& basis, const IntMatrix& rel) {
    const std::size_t k = basis.cols();
    IntMatrix c(k, rel.cols());
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        auto x = solve_system(basis, rel.col(j));
        if (!x) throw std::logic_error("relation lattice not contained in lattice");
        for (std::size_t i = 0; i < k; ++i) c(i, j) = (*x)[i];
    }
    return present(c, k);
}

}  // namespace

Presentation present(const IntMatrix& relations, std::size_t n) {
    if (relations.rows() != n) throw std::invalid_argument("present: relation rows must equal generator count");
    SmithForm s = smith_normal_form(relations, true, false);
    std::vector<std::size_t> free_idx, tors_idx;
    for (std::size_t i = 0; i < n; ++i) {
        Int d = s.diag(i);
        if (i >= s.rank || d == 0)
            free_idx.push_back(i);
        else if (d != 1)
            tors_idx.push_back(i);
    }
    Presentation p;
    p.group.free_rank = free_idx.size();
    for (auto i : tors_idx) p.group.torsion.push_back(s.s(i, i));
    std::vector<std::size_t> order = free_idx;
    order.insert(order.end(), tors_idx.begin(), tors_idx.end());
    p.to_group = IntMatrix(order.size(), n);
    p.from_group = IntMatrix(n, order.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            p.to_group(r, j) = s.u(order[r], j);
            p.from_group(j, r) = s.uinv(j, order[r]);
        }
    }
    // reduce torsion rows of to_group for tidier coordinates
    for (std::size_t r = p.group.free_rank; r < order.size(); ++r)
        for (std::size_t j = 0; j < n; ++j) p.to_group(r, j) = mod_floor(p.to_group(r, j), p.group.torsion[r - p.group.free_rank]);
    return p;
}

Cokernel cokernel(const AbHom& h) {
    const std::size_t m = h.target.ngens();
    IntMatrix rel = relation_matrix(h.target).hcat(h.matrix);
    Presentation p = present(rel, m);
    Cokernel c;
    c.group = p.group;
    c.proj = AbHom{h.target, p.group, p.to_group};
    c.lift = p.from_group;
    return c;
}

IntMatrix kernel_generators(const IntMatrix& h, const std::vector<Int>& source_moduli,
                            const std::vector<Int>& target_moduli) {
    auto sol = solve_affine(h, Vec(h.rows()), target_moduli);
    return lattice_basis(sol->kernel.hcat(relation_matrix(source_moduli)));
}

Kernel kernel(const AbHom& h) {
    const std::size_t na = h.source.ngens();
    IntMatrix basis = kernel_generators(h.matrix, h.source.moduli(), h.target.moduli());
    Presentation p = quotient_of_lattice(basis, relation_matrix(h.source));
    Kernel k;
    k.group = p.group;
    IntMatrix inc = basis * p.from_group;
    for (std::size_t j = 0; j < inc.cols(); ++j) {
        Vec c = h.source.reduce(inc.col(j));
        for (std::size_t i = 0; i < na; ++i) inc(i, j) = c[i];
    }
    k.inclusion = AbHom{p.group, h.source, inc};
    return k;
}

std::optional<Vec> solve(const AbHom& h, const Vec& y) {
    auto x = solve_system(h.matrix, y, h.target.moduli());
    if (!x) return std::nullopt;
    return h.source.reduce(*x);
}

Kernel subgroup(const FinAbGroup& a, const IntMatrix& gens) {
    IntMatrix relA = relation_matrix(a);
    IntMatrix basis = lattice_basis(gens.hcat(relA));
    Presentation p = quotient_of_lattice(basis, relA);
    Kernel k;
    k.group = p.group;
    IntMatrix inc = basis * p.from_group;
    for (std::size_t j = 0; j < inc.cols(); ++j) {
        Vec c = a.reduce(inc.col(j));
        for (std::size_t i = 0; i < a.ngens(); ++i) inc(i, j) = c[i];
    }
    k.inclusion = AbHom{p.group, a, inc};
    return k;
}

Subquotient subquotient(const FinAbGroup& a, const IntMatrix& sub_gens, const IntMatrix& sub2_gens) {
    return subquotient(a.moduli(), sub_gens, sub2_gens);
}

Subquotient subquotient(const std::vector<Int>& moduli, const IntMatrix& sub_gens, const IntMatrix& sub2_gens) {
    IntMatrix rel = relation_matrix(moduli);
    IntMatrix b1 = lattice_basis(sub_gens.hcat(rel));
    IntMatrix b2 = lattice_basis(sub2_gens.hcat(rel));
    Presentation p = quotient_of_lattice(b1, b2);
    Subquotient q;
    q.group = p.group;
    q.basis = b1;
    q.to_group = p.to_group;
    q.moduli = moduli;
    q.reps = b1 * p.from_group;
    for (std::size_t j = 0; j < q.reps.cols(); ++j) {
        Vec c = reduce_mod(q.reps.col(j), moduli);
        for (std::size_t i = 0; i < moduli.size(); ++i) q.reps(i, j) = c[i];
    }
    return q;
}

std::optional<Vec> Subquotient::coords(const Vec& x) const {
    auto c = solve_system(basis, x);
    if (!c) return std::nullopt;
    return group.reduce(to_group * *c);
}

}  // namespace brauer
