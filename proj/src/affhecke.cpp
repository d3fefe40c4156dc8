#include "ktype/affhecke.hpp"

#include <algorithm>
#include <cstdlib>

#include "ktype/errors.hpp"

namespace ktype {

std::pair<LaurentPoly, LaurentPoly> bl_commute(int i, const LaurentPoly& p) {
    const int n = p.nvars();
    if (i < 1 || i >= n) throw usage_error("bl_commute: simple index out of range");
    LaurentPoly moved = p.swap_vars(i);
    LaurentPoly diff = p - moved;
    if (diff.is_zero()) return {std::move(moved), LaurentPoly::zero(n)};
    // denominator 1 - th_i th_{i+1}^{-1}
    LaurentPoly den = LaurentPoly::constant(n, 1);
    ExponentVec e(n, 0);
    e[i - 1] = 1;
    e[i] = -1;
    den -= LaurentPoly::from_terms(n, {{e, Rational(1)}});
    LaurentPoly corr = laurent_divide_exact(diff, den);
    return {std::move(moved), std::move(corr)};
}

NormalFormElement NormalFormElement::unit(const HeckeParams& params) {
    return t_basis(params, Permutation(params.n()));
}

NormalFormElement NormalFormElement::t_basis(const HeckeParams& params, const Permutation& w) {
    NormalFormElement e(params);
    e.add(w, LaurentPoly::constant(params.n(), 1));
    return e;
}

NormalFormElement NormalFormElement::theta(const HeckeParams& params, int j, int exp) {
    return from_poly(params, LaurentPoly::monomial(params.n(), j, exp));
}

NormalFormElement NormalFormElement::from_poly(const HeckeParams& params, const LaurentPoly& p) {
    if (p.nvars() != params.n()) throw usage_error("NormalFormElement: variable count mismatch");
    NormalFormElement e(params);
    e.add(Permutation(params.n()), p);
    return e;
}

NormalFormElement NormalFormElement::from_hecke(const HeckeElement& h) {
    NormalFormElement e(h.params());
    for (const auto& [w, c] : h.coeffs()) e.add(w, LaurentPoly::constant(h.params().n(), c));
    return e;
}

LaurentPoly NormalFormElement::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly::zero(params_.n()) : it->second;
}

void NormalFormElement::add(const Permutation& w, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NormalFormElement& NormalFormElement::operator+=(const NormalFormElement& o) {
    if (params_ != o.params_) throw usage_error("NormalFormElement: params mismatch in +");
    for (const auto& [w, p] : o.terms_) add(w, p);
    return *this;
}

NormalFormElement& NormalFormElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, p] : terms_) p *= c;
    return *this;
}

NormalFormElement left_mul_simple(int i, const NormalFormElement& a) {
    const HeckeParams& params = a.params();
    const Rational& q = params.q();
    const Rational qm1 = q - Rational(1);
    NormalFormElement out(params);
    const Permutation s = Permutation::simple(params.n(), i);
    for (const auto& [w, p] : a.terms()) {
        const Permutation winv = w.inverse();
        if (winv.apply(i) < winv.apply(i + 1)) {
            out.add(s * w, p);
        } else {
            out.add(s * w, p * q);
            out.add(w, p * qm1);
        }
    }
    return out;
}

NormalFormElement right_mul_simple(const NormalFormElement& a, int i) {
    const HeckeParams& params = a.params();
    const Rational& q = params.q();
    const Rational qm1 = q - Rational(1);
    NormalFormElement out(params);
    const Permutation s = Permutation::simple(params.n(), i);
    for (const auto& [w, p] : a.terms()) {
        // p T_i = T_i (s_i p) + (q-1) c
        auto [moved, corr] = bl_commute(i, p);
        // T_w T_i part
        if (w.apply(i) < w.apply(i + 1)) {
            out.add(w * s, moved);
        } else {
            out.add(w * s, moved * q);
            out.add(w, moved * qm1);
        }
        if (!corr.is_zero()) out.add(w, corr * qm1);
    }
    return out;
}

NormalFormElement right_mul_poly(const NormalFormElement& a, const LaurentPoly& p) {
    NormalFormElement out(a.params());
    for (const auto& [w, pw] : a.terms()) out.add(w, laurent_mul(pw, p));
    return out;
}

NormalFormElement left_mul_poly(const LaurentPoly& p, const NormalFormElement& a) {
    const HeckeParams& params = a.params();
    if (p.nvars() != params.n()) throw usage_error("left_mul_poly: variable count mismatch");
    const Rational qm1 = params.q() - Rational(1);
    NormalFormElement out(params);
    // p * T_w p_w, recursing on a reduced word of w from the left:
    // p T_j = T_j (s_j p) + (q-1) c
    auto through = [&](auto&& self, const LaurentPoly& poly, const std::vector<int>& word,
                       size_t at) -> NormalFormElement {
        if (at == word.size()) return NormalFormElement::from_poly(params, poly);
        const int j = word[at];
        auto [moved, corr] = bl_commute(j, poly);
        NormalFormElement head = left_mul_simple(j, self(self, moved, word, at + 1));
        if (!corr.is_zero()) {
            NormalFormElement tail = self(self, corr, word, at + 1);
            tail *= qm1;
            head += tail;
        }
        return head;
    };
    for (const auto& [w, pw] : a.terms()) {
        const std::vector<int> word = reduced_word(w);
        NormalFormElement part = through(through, p, word, 0);
        out += right_mul_poly(part, pw);
    }
    return out;
}

NormalFormElement nf_mul(const NormalFormElement& a, const NormalFormElement& b) {
    if (a.params() != b.params()) throw usage_error("nf_mul: params mismatch");
    NormalFormElement out(a.params());
    for (const auto& [w, pw] : a.terms()) {
        NormalFormElement y = left_mul_poly(pw, b);
        const std::vector<int> word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = left_mul_simple(*it, y);
        out += y;
    }
    return out;
}

CentralCharacterData::CentralCharacterData(std::vector<Rational> values) : z(std::move(values)) {
    if (z.empty()) throw usage_error("CentralCharacterData: empty");
    for (const auto& v : z)
        if (v.is_zero()) throw usage_error("CentralCharacterData: entries must be nonzero");
}

std::vector<Matrix> AlgebraModule::generators() const {
    std::vector<Matrix> g = t_action;
    g.insert(g.end(), theta_action.begin(), theta_action.end());
    return g;
}

AlgebraModule from_finite(const FiniteModule& m) {
    return AlgebraModule{m.params, m.dim, m.t_action, {}, Provenance::Other};
}

bool should_validate(int dim) {
    const char* env = std::getenv("HECKE_DEBUG_RELATIONS");
    if (env && std::string(env) == "1") return true;
    return dim <= 24;
}

void validate_algebra_module(const AlgebraModule& m) {
    const int n = m.params.n();
    check_hecke_relations(m.params, m.t_action, /*usage=*/false);
    if (static_cast<int>(m.theta_action.size()) != n)
        throw internal_error("validate_algebra_module: expected n theta matrices");
    for (const auto& th : m.theta_action) {
        if (!th.is_square() || th.rows() != m.dim)
            throw internal_error("validate_algebra_module: theta matrix shape mismatch");
        if (rref(th).second != m.dim)
            throw internal_error("validate_algebra_module: theta matrix not invertible");
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (m.theta_action[a] * m.theta_action[b] != m.theta_action[b] * m.theta_action[a])
                throw internal_error("validate_algebra_module: theta matrices do not commute");
    // Bernstein-Lusztig on generators:
    //   T_i th_i     = th_{i+1} T_i - (q-1) th_{i+1}
    //   T_i th_{i+1} = th_i     T_i + (q-1) th_{i+1}
    //   T_i th_j     = th_j     T_i              (j != i, i+1)
    const Rational qm1 = m.params.q() - Rational(1);
    for (int i = 1; i < n; ++i) {
        const Matrix& T = m.t_action[i - 1];
        for (int j = 1; j <= n; ++j) {
            const Matrix& Th = m.theta_action[j - 1];
            Matrix lhs = T * Th;
            Matrix rhs(m.dim, m.dim);
            if (j == i) {
                rhs = m.theta_action[i] * T - m.theta_action[i] * qm1;
            } else if (j == i + 1) {
                rhs = m.theta_action[i - 1] * T + m.theta_action[i] * qm1;
            } else {
                rhs = Th * T;
            }
            if (lhs != rhs)
                throw internal_error("validate_algebra_module: Bernstein-Lusztig relation fails at (i=" +
                                     std::to_string(i) + ", j=" + std::to_string(j) + ")");
        }
    }
}

AlgebraModule principal_series(const HeckeParams& params, const CentralCharacterData& chi) {
    const int n = params.n();
    if (chi.n() != n) throw usage_error("principal_series: character length mismatch");
    const auto basis = all_permutations(n);
    std::map<Permutation, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    const int d = static_cast<int>(basis.size());

    AlgebraModule mod{params, d, {}, {}, Provenance::PrincipalSeries};
    for (int i = 1; i < n; ++i) {
        Matrix mat(d, d);
        for (int c = 0; c < d; ++c) {
            NormalFormElement img = left_mul_simple(i, NormalFormElement::t_basis(params, basis[c]));
            for (const auto& [u, g] : img.terms()) mat.at(index.at(u), c) = laurent_eval(g, chi.z);
        }
        mod.t_action.push_back(std::move(mat));
    }
    for (int j = 1; j <= n; ++j) {
        Matrix mat(d, d);
        const LaurentPoly thj = LaurentPoly::monomial(n, j);
        for (int c = 0; c < d; ++c) {
            NormalFormElement img = left_mul_poly(thj, NormalFormElement::t_basis(params, basis[c]));
            for (const auto& [u, g] : img.terms()) mat.at(index.at(u), c) = laurent_eval(g, chi.z);
        }
        mod.theta_action.push_back(std::move(mat));
    }
    if (should_validate(d)) validate_algebra_module(mod);
    return mod;
}

Rational line_multiplier(int line) {
    if (line < 0) throw usage_error("line_multiplier: negative line id");
    if (line == 0) return Rational(1);
    // consecutive primes starting from 5, taken in pairs: 5/7, 11/13, ...
    auto is_prime = [](long v) {
        for (long d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return v > 1;
    };
    long p1 = 0, p2 = 0, v = 5;
    for (int k = 0; k < line; ++k) {
        p1 = p2 = 0;
        while (p2 == 0) {
            if (is_prime(v)) {
                if (p1 == 0)
                    p1 = v;
                else
                    p2 = v;
            }
            ++v;
        }
    }
    return Rational(p1) / Rational(p2);
}

std::vector<Rational> segment_eval(const Segment& seg, const Rational& q) {
    const Rational mult = line_multiplier(seg.line);
    std::vector<Rational> vals;
    vals.reserve(seg.length);
    for (int k = seg.length - 1; k >= 0; --k) vals.push_back(q.pow(seg.start + k) * mult);
    return vals;
}

AlgebraModule induced_standard_module(const HeckeParams& params, const Multisegment& m) {
    const int n = params.n();
    if (m.total() != n) throw usage_error("induced_standard_module: total segment length != n");
    if (!is_langlands_ordered(m))
        throw usage_error("induced_standard_module: segments not in Langlands order");
    const Rational& q = params.q();

    // Internal layout: blocks in reverse list order.  With the BL convention
    // fixed in bl_commute, the unique irreducible quotient of the induced
    // module sits at the ascending-start (anti-Langlands) layout; the n=2
    // linked pair is the witness either way.
    std::vector<int> lengths;
    std::vector<Rational> zeta;
    for (auto it = m.segments.rbegin(); it != m.segments.rend(); ++it) {
        lengths.push_back(it->length);
        for (auto& v : segment_eval(*it, q)) zeta.push_back(v);
    }
    const Composition comp(lengths);

    // BL consistency of the one-dimensional parabolic module: inside each
    // block the theta values must fall by a factor q left to right.
    for (int i = 1; i < n; ++i)
        if (comp.simple_in_parabolic(i) && zeta[i - 1] != q * zeta[i])
            throw parameter_error("induced_standard_module: block values violate the BL relation");

    const auto reps = min_coset_reps(n, comp);
    const int d = static_cast<int>(reps.size());
    std::map<Permutation, int> index;
    for (int i = 0; i < d; ++i) index.emplace(reps[i], i);

    AlgebraModule mod{params, d, {}, {}, Provenance::InducedStandard};
    const Rational qm1 = q - Rational(1);
    for (int i = 1; i < n; ++i) {
        Matrix mat(d, d);
        for (int c = 0; c < d; ++c) {
            DeodharStep step = deodhar_step(i, reps[c], comp);
            if (auto* lo = std::get_if<LongerRep>(&step)) {
                mat.at(index.at(lo->rep), c) = 1;
            } else if (auto* sh = std::get_if<ShorterRep>(&step)) {
                // T_s T_x = q T_{sx} + (q-1) T_x when the length drops
                mat.at(index.at(sh->rep), c) = q;
                mat.at(c, c) = qm1;
            } else {
                mat.at(c, c) = Rational(-1);  // s x = x t, T_t v = -v
            }
        }
        mod.t_action.push_back(std::move(mat));
    }
    for (int j = 1; j <= n; ++j) {
        Matrix mat(d, d);
        const LaurentPoly thj = LaurentPoly::monomial(n, j);
        for (int c = 0; c < d; ++c) {
            NormalFormElement img = left_mul_poly(thj, NormalFormElement::t_basis(params, reps[c]));
            for (const auto& [u, g] : img.terms()) {
                auto [x, upar] = parabolic_factor(u, comp);
                Rational val = laurent_eval(g, zeta);
                if (length(upar) % 2) val = -val;
                mat.at(index.at(x), c) += val;
            }
        }
        mod.theta_action.push_back(std::move(mat));
    }
    if (should_validate(d)) validate_algebra_module(mod);
    return mod;
}

}  // namespace ktype
