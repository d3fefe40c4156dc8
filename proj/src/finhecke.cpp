#include "ktype/finhecke.hpp"

#include <algorithm>
#include <map>

#include "ktype/errors.hpp"

namespace ktype {

HeckeParams::HeckeParams(int n, Rational q) : n_(n), q_(std::move(q)) {
    if (n < 1) throw parameter_error("HeckeParams: rank must be positive");
    if (q_.is_zero() || q_ == Rational(-1)) throw parameter_error("HeckeParams: q must avoid {0,-1}");
    // quantum integers [k]_q = 1 + q + ... + q^{k-1} must not vanish up to k = n
    Rational qk(1), qpow(1);
    for (int k = 2; k <= n; ++k) {
        qpow *= q_;
        qk += qpow;
        if (qk.is_zero())
            throw parameter_error("HeckeParams: semisimplicity guard failed, [" + std::to_string(k) +
                                  "]_q = 0 at q = " + q_.str());
    }
}

HeckeElement HeckeElement::unit(const HeckeParams& params) {
    return t_basis(params, Permutation(params.n()));
}

HeckeElement HeckeElement::t_basis(const HeckeParams& params, const Permutation& w) {
    if (w.degree() != params.n()) throw usage_error("HeckeElement: permutation degree mismatch");
    HeckeElement e(params);
    e.coeffs_.emplace(w, Rational(1));
    return e;
}

Rational HeckeElement::coeff(const Permutation& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void HeckeElement::add(const Permutation& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (params_ != o.params_) throw usage_error("HeckeElement: params mismatch in +");
    for (const auto& [w, c] : o.coeffs_) add(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [w, v] : coeffs_) v *= c;
    return *this;
}

HeckeElement left_mul_simple(int i, const HeckeElement& a) {
    const HeckeParams& params = a.params();
    const Rational& q = params.q();
    const Rational qm1 = q - Rational(1);
    HeckeElement out(params);
    const Permutation s = Permutation::simple(params.n(), i);
    for (const auto& [v, c] : a.coeffs()) {
        const Permutation vinv = v.inverse();
        if (vinv.apply(i) < vinv.apply(i + 1)) {
            out.add(s * v, c);  // length goes up: T_s T_v = T_{sv}
        } else {
            out.add(s * v, q * c);  // T_s T_v = q T_{sv} + (q-1) T_v
            out.add(v, qm1 * c);
        }
    }
    return out;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.params() != b.params()) throw usage_error("hecke_mul: params mismatch");
    HeckeElement out(a.params());
    for (const auto& [w, cw] : a.coeffs()) {
        HeckeElement acc = b;
        const std::vector<int> word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_mul_simple(*it, acc);
        acc *= cw;
        out += acc;
    }
    return out;
}

void check_hecke_relations(const HeckeParams& params, const std::vector<Matrix>& t_action,
                           bool usage) {
    auto fail = [&](const std::string& msg) {
        if (usage) throw usage_error(msg);
        throw internal_error(msg);
    };
    const int k = static_cast<int>(t_action.size());
    if (k != params.n() - 1) fail("hecke relations: expected n-1 generator matrices");
    const int d = k ? t_action[0].rows() : 1;
    const Rational& q = params.q();
    const Matrix id = Matrix::identity(d);
    for (int i = 0; i < k; ++i) {
        const Matrix& T = t_action[i];
        if (!T.is_square() || T.rows() != d) fail("hecke relations: ragged generator matrices");
        // (T - q)(T + 1) = 0
        Matrix lhs = (T - id * q) * (T + id);
        if (!lhs.is_zero()) fail("hecke relations: quadratic relation fails at i=" + std::to_string(i + 1));
    }
    for (int i = 0; i + 1 < k; ++i) {
        Matrix lhs = t_action[i] * t_action[i + 1] * t_action[i];
        Matrix rhs = t_action[i + 1] * t_action[i] * t_action[i + 1];
        if (lhs != rhs) fail("hecke relations: braid relation fails at i=" + std::to_string(i + 1));
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j)
            if (t_action[i] * t_action[j] != t_action[j] * t_action[i])
                fail("hecke relations: distant generators do not commute");
}

namespace {

FiniteModule one_dim(const HeckeParams& params, const Rational& value) {
    Matrix m(1, 1);
    m.at(0, 0) = value;
    return FiniteModule{params, 1, std::vector<Matrix>(params.n() - 1, m)};
}

}  // namespace

FiniteModule sign_character(const HeckeParams& params) { return one_dim(params, Rational(-1)); }

FiniteModule trivial_character(const HeckeParams& params) { return one_dim(params, params.q()); }

FiniteModule regular_representation(const HeckeParams& params) {
    const auto basis = all_permutations(params.n());
    std::map<Permutation, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    const int d = static_cast<int>(basis.size());
    std::vector<Matrix> mats;
    for (int i = 1; i < params.n(); ++i) {
        Matrix m(d, d);
        for (int c = 0; c < d; ++c) {
            HeckeElement img = left_mul_simple(i, HeckeElement::t_basis(params, basis[c]));
            for (const auto& [w, coeff] : img.coeffs()) m.at(index.at(w), c) = coeff;
        }
        mats.push_back(std::move(m));
    }
    return FiniteModule{params, d, std::move(mats)};
}

FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b) {
    if (a.params != b.params) throw usage_error("direct_sum: params mismatch");
    const int d = a.dim + b.dim;
    std::vector<Matrix> mats;
    for (size_t k = 0; k < a.t_action.size(); ++k) {
        Matrix m(d, d);
        for (int r = 0; r < a.dim; ++r)
            for (int c = 0; c < a.dim; ++c) m.at(r, c) = a.t_action[k].at(r, c);
        for (int r = 0; r < b.dim; ++r)
            for (int c = 0; c < b.dim; ++c) m.at(a.dim + r, a.dim + c) = b.t_action[k].at(r, c);
        mats.push_back(std::move(m));
    }
    return FiniteModule{a.params, d, std::move(mats)};
}

namespace {

// Standard Young tableaux of a shape, each encoded by the (0-based) row of
// every entry 1..n; enumerated and then sorted into lexicographic order so
// indices are canonical.
std::vector<std::vector<int>> enumerate_syt(const Partition& shape) {
    const int n = shape.size();
    std::vector<std::vector<int>> out;
    std::vector<int> fill(shape.length(), 0);
    std::vector<int> row_of(n, -1);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.push_back(row_of);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            if (fill[r] >= shape.parts()[r]) continue;
            if (r > 0 && fill[r] >= fill[r - 1]) continue;
            row_of[k] = r;
            ++fill[r];
            self(self, k + 1);
            --fill[r];
        }
    };
    if (n == 0)
        out.emplace_back();
    else
        rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// column (0-based) of every entry, recovered from the row word
std::vector<int> columns_of(const std::vector<int>& row_of) {
    std::vector<int> col(row_of.size());
    std::map<int, int> seen;  // row -> boxes used so far
    for (size_t k = 0; k < row_of.size(); ++k) col[k] = seen[row_of[k]]++;
    return col;
}

}  // namespace

SpechtModule::SpechtModule(const HeckeParams& params, const Partition& label)
    : params_(params), label_(label) {
    if (label.size() != params.n()) throw usage_error("SpechtModule: label must partition n");
    const Rational& q = params.q();
    const Partition shape = label.conjugate();  // seminormal form on the conjugate shape
    const auto tabs = enumerate_syt(shape);
    const int d = static_cast<int>(tabs.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < d; ++i) index.emplace(tabs[i], i);

    // diagonal coefficient (q-1)/(1 - q^{-delta}); delta = +1 gives q,
    // delta = -1 gives -1
    auto alpha = [&](long delta) { return (q - 1) / (Rational(1) - q.pow(-delta)); };
    // off-diagonal pair product is fixed by det = -q
    auto offdiag_back = [&](long adelta) {
        Rational qd = q.pow(adelta);
        Rational num = (q - 1) * (q - 1) * qd;
        Rational den = (qd - 1) * (qd - 1);
        return q - num / den;
    };

    const int n = params.n();
    for (int i = 1; i < n; ++i) {
        Matrix m(d, d);
        for (int c = 0; c < d; ++c) {
            const auto& t = tabs[c];
            const auto cols = columns_of(t);
            const long delta = (cols[i] - t[i]) - (cols[i - 1] - t[i - 1]);  // content difference
            if (t[i - 1] == t[i]) {
                m.at(c, c) = q;  // same row
            } else if (cols[i - 1] == cols[i]) {
                m.at(c, c) = Rational(-1);  // same column
            } else {
                std::vector<int> swapped = t;
                std::swap(swapped[i - 1], swapped[i]);
                const int c2 = index.at(swapped);
                m.at(c, c) = alpha(delta);
                m.at(c2, c) = delta > 0 ? Rational(1) : offdiag_back(-delta);
            }
        }
        matrices_.push_back(std::move(m));
    }
    if (n == 1) matrices_.clear();
    check_hecke_relations(params_, matrices_, /*usage=*/false);
    if (d != count_syt(label)) throw internal_error("SpechtModule: dimension != SYT count");
}

long multiplicity(const SpechtModule& s, const FiniteModule& m) {
    if (s.params() != m.params) throw usage_error("multiplicity: params mismatch");
    check_hecke_relations(m.params, m.t_action, /*usage=*/true);
    if (s.params().n() == 1) return m.dim;  // H_{S_1} is trivial; everything is a sum of units
    std::vector<std::pair<Matrix, Matrix>> blocks;
    for (size_t k = 0; k < m.t_action.size(); ++k) blocks.emplace_back(m.t_action[k], s.t_action()[k]);
    return solve_hom_system(blocks).dim();
}

}  // namespace ktype
