#ifndef KTYPE_LINALG_HPP
#define KTYPE_LINALG_HPP

#include <utility>
#include <vector>

#include "ktype/scalar.hpp"

namespace ktype {

// Dense matrix over Rational, row-major.  All operations are exact.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    Rational trace() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix& operator*=(const Rational& c);
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;  // matrix * column
    std::vector<Rational> row(int r) const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

// tr(a*b) without forming the product.
Rational trace_of_product(const Matrix& a, const Matrix& b);

// Reduced row echelon form and rank.  Deterministic: pivots are the first
// nonzero entry scanning each column top to bottom, pivot entries
// normalized to 1, eliminated above and below.
std::pair<Matrix, int> rref(const Matrix& m);

// Subspace of an ambient coordinate space, kept in canonical form: the
// basis is the RREF of its row vectors, so equal subspaces compare equal as
// matrices.
class Subspace {
  public:
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
    // Canonicalizes the given spanning rows.
    static Subspace span(int ambient, const std::vector<std::vector<Rational>>& rows);
    // Rows already in RREF (trusted, used internally).
    static Subspace from_rref(int ambient, Matrix rref_basis);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    int ambient_;
    Matrix basis_;
};

// {x : m x = 0}, canonical basis, dim = cols - rank.
Subspace kernel(const Matrix& m);

// All X (d x e, flattened row-major) with A_k X = X B_k for every block
// pair; the Hom-space solver behind every multiplicity in the artifact.
Subspace solve_hom_system(const std::vector<std::pair<Matrix, Matrix>>& blocks);

// Smallest subspace containing seed and invariant under every generator
// (column-vector action; vectors are stored as rows).
Subspace spin(const std::vector<Matrix>& generators, const Subspace& seed);

// Incremental row-echelon accumulator with sparse rows.  Rows are kept in
// echelon (not fully reduced) order while inserting; finalize() produces
// the canonical RREF.  This is the workhorse behind kernel, spin and the
// enveloping-algebra closure, where most inserted rows are redundant.
class EchelonAccumulator {
  public:
    explicit EchelonAccumulator(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the current rows; if independent, inserts the
    // normalized result and returns true.
    bool insert(std::vector<Rational> v);
    // As insert, but hands back the reduced normalized row when it was
    // independent.  Spinning loops use it as the next frontier element:
    // same span, but entries stay echelon-sized instead of growing with
    // the word length.
    bool insert_reduced(std::vector<Rational> v, std::vector<Rational>* reduced_out);
    // Reduction only; true iff v lies in the current row space.
    bool reduces_to_zero(const std::vector<Rational>& v) const;

    // Canonical RREF of the accumulated row space.
    Matrix to_rref() const;
    Subspace to_subspace() const;
    // Dense copies of the (echelon, not fully reduced) rows, insertion-independent order by pivot.
    std::vector<std::vector<Rational>> echelon_rows() const;

  private:
    using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by index, pivot first
    void reduce(std::vector<Rational>& v) const;

    int ambient_;
    std::vector<SparseRow> rows_;       // ordered by pivot column
    std::vector<int> pivots_;           // pivot column of rows_[k]
};

}  // namespace ktype

#endif
