// Exact integer linear algebra over Z and Z/nZ.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

using Int = mpz_class;
using Vec = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    IntMatrix transpose() const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    // [this | other]
    IntMatrix hcat(const IntMatrix& other) const;
    // [this ; other]
    IntMatrix vcat(const IntMatrix& other) const;
    bool is_zero() const;
    Int det() const;  // Bareiss, square only

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend Vec operator*(const IntMatrix& a, const Vec& v);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// u * m * v == s, s diagonal with d1 | d2 | ... , u and v unimodular.
struct SmithForm {
    IntMatrix s, u, v;
    IntMatrix uinv;  // inverse of u, filled whenever u is
    std::size_t rank = 0;
    Int diag(std::size_t i) const { return i < s.rows() && i < s.cols() ? s(i, i) : Int(0); }
};

SmithForm smith_normal_form(const IntMatrix& m, bool want_u = true, bool want_v = true);

// Integer row reduction without transform tracking. Rows i carry modulus
// moduli[i] (0 = exact equation); only rows of equal modulus are combined.
// Returns the compressed rows and their moduli; the row module over each
// modulus class is unchanged.
struct CompressedRows {
    IntMatrix rows;
    std::vector<Int> moduli;
};
CompressedRows compress_rows(const IntMatrix& a, const std::vector<Int>& moduli = {});

// Basis (as columns) of {x in Z^n : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);
// Basis (as columns) of the lattice spanned by the columns of g.
IntMatrix lattice_basis(const IntMatrix& g);

// Affine solution set {x : a x == y, row i taken mod moduli[i]}.
struct AffineSolution {
    Vec particular;
    IntMatrix kernel;  // columns generate the homogeneous solutions
};
std::optional<AffineSolution> solve_affine(const IntMatrix& a, const Vec& y,
                                           const std::vector<Int>& moduli = {});
std::optional<Vec> solve_system(const IntMatrix& a, const Vec& y,
                                const std::vector<Int>& moduli = {});

// Z^r (+) Z/d1 (+) ... (+) Z/dk with d1 | d2 | ... and each di >= 2.
// Element coordinates: free part first, then torsion part.
struct FinAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    std::size_t ngens() const { return free_rank + torsion.size(); }
    Int modulus(std::size_t i) const { return i < free_rank ? Int(0) : torsion[i - free_rank]; }
    std::vector<Int> moduli() const;
    Vec reduce(Vec x) const;
    bool is_zero(const Vec& x) const;
    bool is_trivial() const { return ngens() == 0; }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;                   // 0 for infinite groups
    Int element_order(const Vec& x) const;  // 0 for infinite order
    Int exponent() const;                // 0 for infinite groups
    std::string str() const;

    static FinAbGroup free(std::size_t r) { return FinAbGroup{r, {}}; }
    static FinAbGroup cyclic(const Int& n);
    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

struct AbHom {
    FinAbGroup source, target;
    IntMatrix matrix;  // target.ngens() x source.ngens()

    Vec apply(const Vec& x) const;
    bool well_defined() const;
};

// Z^n / span(columns of relations) in invariant-factor form.
struct Presentation {
    FinAbGroup group;
    IntMatrix to_group;    // group.ngens() x n : Z^n -> group coordinates
    IntMatrix from_group;  // n x group.ngens() : a section on generators
};
Presentation present(const IntMatrix& relations, std::size_t n);

struct Cokernel {
    FinAbGroup group;
    AbHom proj;      // target(h) -> group
    IntMatrix lift;  // group coords -> target coords (section)
};
Cokernel cokernel(const AbHom& h);

struct Kernel {
    FinAbGroup group;
    AbHom inclusion;  // group -> source(h)
};
Kernel kernel(const AbHom& h);

// x with h(x) = y in target(h), or nullopt.
std::optional<Vec> solve(const AbHom& h, const Vec& y);

// Subgroup generated by columns of gens (coordinates of a), as an abstract
// group with its inclusion.
Kernel subgroup(const FinAbGroup& a, const IntMatrix& gens);

// sub / sub2 for sub2 <= sub <= a, both given by generator columns in
// a-coordinates.
struct Subquotient {
    FinAbGroup group;
    IntMatrix reps;       // a.ngens() x group.ngens(), one representative per generator
    IntMatrix basis;      // lattice basis of the preimage of sub in Z^n
    IntMatrix to_group;   // basis coords -> quotient coords
    std::vector<Int> moduli;  // coordinate moduli of the ambient group
    // Quotient coordinates of x (a-coordinates); nullopt if x is not in sub.
    std::optional<Vec> coords(const Vec& x) const;
};
Subquotient subquotient(const FinAbGroup& a, const IntMatrix& sub_gens, const IntMatrix& sub2_gens);
// Same for a group given by per-coordinate moduli (0 = free coordinate).
Subquotient subquotient(const std::vector<Int>& moduli, const IntMatrix& sub_gens, const IntMatrix& sub2_gens);

// Generators (columns) of {x : h x == 0 modulo target_moduli}, together with
// the source relations.
IntMatrix kernel_generators(const IntMatrix& h, const std::vector<Int>& source_moduli,
                            const std::vector<Int>& target_moduli);

Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t);
Int mod_floor(const Int& a, const Int& m);

}  // namespace brauer
