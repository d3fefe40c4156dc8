#include "ktype/modlab.hpp"

#include <algorithm>

#include "ktype/errors.hpp"

namespace ktype {

namespace {

std::vector<Rational> vectorize(const Matrix& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

Matrix devectorize(const std::vector<Rational>& v, int d) {
    Matrix m(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(r, c) = v[static_cast<size_t>(r) * d + c];
    return m;
}

std::vector<Matrix> full_matrix_unit_basis(int d) {
    std::vector<Matrix> basis;
    basis.reserve(static_cast<size_t>(d) * d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            Matrix u(d, d);
            u.at(r, c) = 1;
            basis.push_back(std::move(u));
        }
    return basis;
}

}  // namespace

EnvelopingAlgebra envelope(const AlgebraModule& m) {
    const int d = m.dim;
    // {T_1..T_{n-1}, theta_1} already generates: T_i theta_i T_i = q theta_{i+1}
    std::vector<Matrix> gens = m.t_action;
    if (m.has_theta()) gens.push_back(m.theta_action[0]);
    EchelonAccumulator acc(d * d);
    std::vector<Matrix> frontier;
    std::vector<Rational> red;
    {
        Matrix id = Matrix::identity(d);
        acc.insert(vectorize(id));
        frontier.push_back(std::move(id));
    }
    bool full = false;
    while (!frontier.empty() && !full) {
        std::vector<Matrix> next;
        for (const auto& b : frontier) {
            for (const auto& g : gens) {
                // frontier holds the reduced representative: same span,
                // but entries stay echelon-sized
                if (acc.insert_reduced(vectorize(g * b), &red)) next.push_back(devectorize(red, d));
                if (acc.dim() == d * d) {
                    full = true;
                    break;
                }
            }
            if (full) break;
        }
        frontier = std::move(next);
    }
    if (acc.dim() > d * d) throw internal_error("envelope: dimension exceeded d^2");
    if (full) return EnvelopingAlgebra(d, full_matrix_unit_basis(d));  // RREF of a spanning set of M_d
    Matrix basis_rref = acc.to_rref();
    std::vector<Matrix> basis;
    basis.reserve(basis_rref.rows());
    for (int r = 0; r < basis_rref.rows(); ++r) basis.push_back(devectorize(basis_rref.row(r), d));
    return EnvelopingAlgebra(d, basis);
}

Subspace radical(const EnvelopingAlgebra& a) {
    const int m = a.dim();
    // shortcut: the full matrix algebra is semisimple
    if (a.is_full_matrix_algebra()) return Subspace(m);
    Matrix gram(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Rational t = trace_of_product(a.basis()[i], a.basis()[j]);
            gram.at(i, j) = t;
            gram.at(j, i) = t;
        }
    return kernel(gram);
}

std::vector<Matrix> radical_matrices(const EnvelopingAlgebra& a) {
    const Subspace j = radical(a);
    std::vector<Matrix> out;
    for (int r = 0; r < j.dim(); ++r) {
        Matrix x(a.ambient_dim(), a.ambient_dim());
        for (int k = 0; k < a.dim(); ++k) {
            const Rational& c = j.basis().at(r, k);
            if (c.is_zero()) continue;
            Matrix scaled = a.basis()[k];
            scaled *= c;
            x += scaled;
        }
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

// Quotient of the module by an invariant subspace given by RREF rows.
QuotientModule quotient_by(const AlgebraModule& m, const Subspace& inv) {
    const int d = m.dim;
    const int r = inv.dim();
    const int h = d - r;
    std::vector<int> pivots;
    std::vector<bool> is_pivot(d, false);
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < d; ++c)
            if (!inv.basis().at(i, c).is_zero()) {
                pivots.push_back(c);
                is_pivot[c] = true;
                break;
            }
    std::vector<int> free_cols;
    for (int c = 0; c < d; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // projection: reduce a vector modulo inv, read off the free coordinates
    Matrix proj(h, d);
    for (int c = 0; c < d; ++c) {
        if (!is_pivot[c]) {
            proj.at(static_cast<int>(std::lower_bound(free_cols.begin(), free_cols.end(), c) -
                                     free_cols.begin()),
                    c) = 1;
            continue;
        }
        // e_c reduces to e_c - row with that pivot; pivot coord vanishes
        const int row = static_cast<int>(std::lower_bound(pivots.begin(), pivots.end(), c) -
                                         pivots.begin());
        for (int k = 0; k < h; ++k) proj.at(k, c) = -inv.basis().at(row, free_cols[k]);
    }
    Matrix sect(d, h);
    for (int k = 0; k < h; ++k) sect.at(free_cols[k], k) = 1;

    AlgebraModule qm{m.params, h, {}, {}, Provenance::Quotient};
    for (const auto& g : m.t_action) qm.t_action.push_back(proj * g * sect);
    for (const auto& g : m.theta_action) qm.theta_action.push_back(proj * g * sect);
    if (h > 0 && m.has_theta() && should_validate(h)) validate_algebra_module(qm);
    return QuotientModule{std::move(qm), std::move(proj), std::move(sect), d};
}

// pivots must be sorted ascending for quotient_by's lower_bound lookups;
// Subspace RREF rows guarantee that.

}  // namespace

QuotientModule cosocle(const AlgebraModule& m) {
    const EnvelopingAlgebra env = envelope(m);
    const auto rad = radical_matrices(env);
    EchelonAccumulator span(m.dim);
    for (const auto& j : rad)
        for (int c = 0; c < m.dim; ++c) {
            std::vector<Rational> col(m.dim);
            for (int r = 0; r < m.dim; ++r) col[r] = j.at(r, c);
            span.insert(std::move(col));
        }
    const Subspace jm = span.to_subspace();
    QuotientModule q = quotient_by(m, jm);
    if (m.provenance == Provenance::InducedStandard) {
        if (q.module.dim == 0) throw internal_error("cosocle: standard module has zero head");
        bool irreducible;
        if (q.module.dim == m.dim) {
            // head = m and its radical is already known to vanish; the full
            // matrix algebra acts irreducibly, otherwise fall back to the
            // commutant criterion
            irreducible = env.is_full_matrix_algebra() || hom_space(m, m).dim() == 1;
        } else {
            irreducible = is_irreducible(q.module);
        }
        if (!irreducible)
            throw internal_error(
                "cosocle: head of a standard module is reducible (convention or relation bug)");
    }
    return q;
}

bool is_irreducible(const AlgebraModule& m) {
    if (m.dim == 0) return false;
    const EnvelopingAlgebra env = envelope(m);
    // A = M_d forces simplicity and a scalar commutant at once.
    if (env.is_full_matrix_algebra()) return true;
    const auto rad = radical_matrices(env);
    for (const auto& j : rad)
        if (!j.is_zero()) return false;
    return hom_space(m, m).dim() == 1;
}

Subspace hom_space(const AlgebraModule& m1, const AlgebraModule& m2) {
    if (m1.params != m2.params) throw usage_error("hom_space: params mismatch");
    if (m1.has_theta() != m2.has_theta())
        throw usage_error("hom_space: generator arity mismatch (restrict both to T generators)");
    const auto g1 = m1.generators();
    const auto g2 = m2.generators();
    std::vector<std::pair<Matrix, Matrix>> blocks;
    for (size_t k = 0; k < g1.size(); ++k) blocks.emplace_back(g2[k], g1[k]);
    if (blocks.empty()) {
        // rank-1 algebra: every linear map intertwines
        EchelonAccumulator acc(m1.dim * m2.dim);
        std::vector<Rational> v(static_cast<size_t>(m1.dim) * m2.dim, Rational(0));
        for (size_t i = 0; i < v.size(); ++i) {
            v[i] = 1;
            acc.insert(v);
            v[i] = 0;
        }
        return acc.to_subspace();
    }
    return solve_hom_system(blocks);
}

}  // namespace ktype
