#include "ktype/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "ktype/errors.hpp"

namespace ktype {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (rows[r].size() != rows[0].size()) throw usage_error("Matrix::from_rows: ragged rows");
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Rational Matrix::trace() const {
    if (!is_square()) throw usage_error("Matrix::trace on non-square matrix");
    Rational t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error("Matrix: shape mismatch in +");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw usage_error("Matrix: shape mismatch in -");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw usage_error("Matrix: shape mismatch in *");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Matrix& Matrix::operator*=(const Rational& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw usage_error("Matrix::apply: dimension mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rational& a = at(i, j);
            if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
        }
    return r;
}

std::vector<Rational> Matrix::row(int r) const {
    std::vector<Rational> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << "[";
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
        os << "]\n";
    }
    return os.str();
}

Rational trace_of_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw usage_error("trace_of_product: shape mismatch");
    Rational t(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& x = a.at(i, k);
            if (x.is_zero()) continue;
            const Rational& y = b.at(k, i);
            if (y.is_zero()) continue;
            t += x * y;
        }
    return t;
}

std::pair<Matrix, int> rref(const Matrix& m) {
    Matrix r = m;
    int rank = 0;
    for (int col = 0; col < r.cols() && rank < r.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < r.rows(); ++i)
            if (!r.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < r.cols(); ++c) std::swap(r.at(pivot, c), r.at(rank, c));
        Rational inv = r.at(rank, col).inv();
        for (int c = col; c < r.cols(); ++c) r.at(rank, c) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == rank) continue;
            const Rational f = r.at(i, col);
            if (f.is_zero()) continue;
            for (int c = col; c < r.cols(); ++c) {
                if (r.at(rank, c).is_zero()) continue;
                r.at(i, c) -= f * r.at(rank, c);
            }
        }
        ++rank;
    }
    return {r, rank};
}

Subspace Subspace::span(int ambient, const std::vector<std::vector<Rational>>& rows) {
    EchelonAccumulator acc(ambient);
    for (const auto& v : rows) {
        if (static_cast<int>(v.size()) != ambient) throw usage_error("Subspace::span: bad row length");
        acc.insert(v);
    }
    return acc.to_subspace();
}

Subspace Subspace::from_rref(int ambient, Matrix rref_basis) {
    Subspace s(ambient);
    s.basis_ = std::move(rref_basis);
    return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw usage_error("Subspace::contains: bad vector length");
    std::vector<Rational> w = v;
    // reduce against RREF rows
    for (int r = 0; r < basis_.rows(); ++r) {
        int p = -1;
        for (int c = 0; c < ambient_; ++c)
            if (!basis_.at(r, c).is_zero()) {
                p = c;
                break;
            }
        if (p < 0) continue;
        if (w[p].is_zero()) continue;
        const Rational f = w[p];
        for (int c = p; c < ambient_; ++c)
            if (!basis_.at(r, c).is_zero()) w[c] -= f * basis_.at(r, c);
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace kernel(const Matrix& m) {
    EchelonAccumulator rowspace(m.cols());
    for (int r = 0; r < m.rows(); ++r) rowspace.insert(m.row(r));
    Matrix R = rowspace.to_rref();
    int rank = R.rows();

    std::vector<int> pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!R.at(r, c).is_zero()) {
                pivots.push_back(c);
                is_pivot[c] = true;
                break;
            }

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (int r = 0; r < rank; ++r) v[pivots[r]] = -R.at(r, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

Subspace solve_hom_system(const std::vector<std::pair<Matrix, Matrix>>& blocks) {
    if (blocks.empty()) throw usage_error("solve_hom_system: no blocks");
    const int d = blocks[0].first.rows();
    const int e = blocks[0].second.rows();
    for (const auto& [A, B] : blocks) {
        if (!A.is_square() || !B.is_square()) throw usage_error("solve_hom_system: blocks must be square");
        if (A.rows() != d || B.rows() != e) throw usage_error("solve_hom_system: inconsistent block sizes");
    }
    // Unknowns: X[r][c] at index r*e + c.  Equations: (A X - X B)[r][c] = 0.
    EchelonAccumulator acc(d * e);
    std::vector<Rational> eq;
    for (const auto& [A, B] : blocks) {
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < e; ++c) {
                eq.assign(static_cast<size_t>(d) * e, Rational(0));
                for (int j = 0; j < d; ++j)
                    if (!A.at(r, j).is_zero()) eq[static_cast<size_t>(j) * e + c] += A.at(r, j);
                for (int j = 0; j < e; ++j)
                    if (!B.at(j, c).is_zero()) eq[static_cast<size_t>(r) * e + j] -= B.at(j, c);
                acc.insert(eq);
            }
        }
    }
    return kernel(acc.to_rref());
}

Subspace spin(const std::vector<Matrix>& generators, const Subspace& seed) {
    const int n = seed.ambient();
    for (const auto& g : generators)
        if (!g.is_square() || g.rows() != n) throw usage_error("spin: generator dimension mismatch");
    EchelonAccumulator acc(n);
    std::vector<std::vector<Rational>> frontier;
    std::vector<Rational> red;
    for (int r = 0; r < seed.basis().rows(); ++r) {
        if (acc.insert_reduced(seed.basis().row(r), &red)) frontier.push_back(red);
    }
    while (!frontier.empty() && acc.dim() < n) {
        std::vector<std::vector<Rational>> next;
        for (const auto& v : frontier) {
            for (const auto& g : generators) {
                if (acc.insert_reduced(g.apply(v), &red)) next.push_back(red);
                if (acc.dim() == n) break;
            }
            if (acc.dim() == n) break;
        }
        frontier = std::move(next);
    }
    return acc.to_subspace();
}

// --------------------------------------------------------------------------
// EchelonAccumulator

void EchelonAccumulator::reduce(std::vector<Rational>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational& lead = v[pivots_[k]];
        if (lead.is_zero()) continue;
        const Rational f = lead;  // row pivot entries are normalized to 1
        for (const auto& [idx, val] : rows_[k]) v[idx] -= f * val;
    }
}

bool EchelonAccumulator::insert(std::vector<Rational> v) {
    return insert_reduced(std::move(v), nullptr);
}

bool EchelonAccumulator::insert_reduced(std::vector<Rational> v, std::vector<Rational>* reduced_out) {
    if (static_cast<int>(v.size()) != ambient_) throw usage_error("EchelonAccumulator: bad row length");
    reduce(v);
    int pivot = -1;
    for (int i = 0; i < ambient_; ++i)
        if (!v[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) return false;
    const Rational inv = v[pivot].inv();
    SparseRow row;
    for (int i = pivot; i < ambient_; ++i)
        if (!v[i].is_zero()) row.emplace_back(i, v[i] * inv);
    if (reduced_out) {
        reduced_out->assign(ambient_, Rational(0));
        for (const auto& [idx, val] : row) (*reduced_out)[idx] = val;
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t at = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + at, std::move(row));
    return true;
}

bool EchelonAccumulator::reduces_to_zero(const std::vector<Rational>& v) const {
    std::vector<Rational> w = v;
    reduce(w);
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<std::vector<Rational>> EchelonAccumulator::echelon_rows() const {
    std::vector<std::vector<Rational>> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        std::vector<Rational> v(ambient_, Rational(0));
        for (const auto& [idx, val] : row) v[idx] = val;
        out.push_back(std::move(v));
    }
    return out;
}

Matrix EchelonAccumulator::to_rref() const {
    // Rows are in echelon order; back-eliminate to full reduced form.
    auto rows = echelon_rows();
    const int k = static_cast<int>(rows.size());
    for (int i = k - 1; i >= 0; --i) {
        for (int j = 0; j < i; ++j) {
            const Rational f = rows[j][pivots_[i]];
            if (f.is_zero()) continue;
            for (int c = pivots_[i]; c < ambient_; ++c)
                if (!rows[i][c].is_zero()) rows[j][c] -= f * rows[i][c];
        }
    }
    Matrix m(k, ambient_);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < ambient_; ++c) m.at(r, c) = rows[r][c];
    return m;
}

Subspace EchelonAccumulator::to_subspace() const {
    return Subspace::from_rref(ambient_, to_rref());
}

}  // namespace ktype
