#ifndef KTYPE_FINHECKE_HPP
#define KTYPE_FINHECKE_HPP

#include <map>
#include <vector>

#include "ktype/combin.hpp"
#include "ktype/linalg.hpp"
#include "ktype/scalar.hpp"
#include "ktype/symgroup.hpp"

namespace ktype {

// Rank and deformation parameter of H_W(q), W = S_n.  Construction enforces
// the semisimplicity guard: q not in {0,-1} and no quantum factorial
// [k]_q = 1 + q + ... + q^{k-1} vanishes for k <= n.
class HeckeParams {
  public:
    HeckeParams(int n, Rational q);
    int n() const { return n_; }
    const Rational& q() const { return q_; }
    friend bool operator==(const HeckeParams& a, const HeckeParams& b) {
        return a.n_ == b.n_ && a.q_ == b.q_;
    }
    friend bool operator!=(const HeckeParams& a, const HeckeParams& b) { return !(a == b); }

  private:
    int n_;
    Rational q_;
};

// Element of H_W(q) in the T_w basis; zero coefficients never stored.
class HeckeElement {
  public:
    explicit HeckeElement(const HeckeParams& params) : params_(params) {}
    static HeckeElement unit(const HeckeParams& params);                       // T_e
    static HeckeElement t_basis(const HeckeParams& params, const Permutation& w);

    const HeckeParams& params() const { return params_; }
    const std::map<Permutation, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const Permutation& w) const;
    void add(const Permutation& w, const Rational& c);

    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator*=(const Rational& c);
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
    }

  private:
    HeckeParams params_;
    std::map<Permutation, Rational> coeffs_;
};

// T_{s_i} * a, by the deformed multiplication rule.
HeckeElement left_mul_simple(int i, const HeckeElement& a);

// Product in H_W(q), computed one simple reflection at a time along a
// reduced word.  Mismatched params are a usage error.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

// Finite-dimensional H_W(q)-module presented by the action matrices of
// T_1..T_{n-1}.
struct FiniteModule {
    HeckeParams params;
    int dim;
    std::vector<Matrix> t_action;  // n-1 matrices, dim x dim
};

// Throws if the matrices violate the quadratic relation (T_i - q)(T_i + 1) = 0,
// the braid relations, or distant commutation.  usage=true throws
// usage_error (bad caller input), else internal_error (construction bug).
void check_hecke_relations(const HeckeParams& params, const std::vector<Matrix>& t_action,
                           bool usage);

// One-dimensional characters: T_i -> -1 (Steinberg/sign type) and T_i -> q
// (trivial type).  Both satisfy the quadratic relation identically.
FiniteModule sign_character(const HeckeParams& params);
FiniteModule trivial_character(const HeckeParams& params);

// Left regular representation on the T_w basis, lexicographic order.
FiniteModule regular_representation(const HeckeParams& params);

// Direct sum, for multiplicity additivity tests.
FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b);

// Specht module in rational seminormal form.
//
// Labeling convention (fixed project-wide): the label follows the partition
// order in which (n) is minimal, so specht_module(min_label) IS the
// sign/Steinberg-type character and specht_module(max_label) the trivial
// one.  Internally the seminormal construction runs on standard Young
// tableaux of the conjugate shape, which realizes exactly that dictionary.
// Entries are rational functions of q; no square roots appear.
class SpechtModule {
  public:
    SpechtModule(const HeckeParams& params, const Partition& label);

    const HeckeParams& params() const { return params_; }
    const Partition& label() const { return label_; }
    int dim() const { return static_cast<int>(matrices_.empty() ? 1 : matrices_[0].rows()); }
    const std::vector<Matrix>& t_action() const { return matrices_; }
    FiniteModule as_module() const { return FiniteModule{params_, dim(), matrices_}; }

  private:
    HeckeParams params_;
    Partition label_;
    std::vector<Matrix> matrices_;
};

// dim Hom_{H_W(q)}(S^label, m) = multiplicity of the Specht module in m
// (semisimple, absolutely irreducible constituents).  The matrices of m are
// relation-checked first; violations are a usage error.
long multiplicity(const SpechtModule& s, const FiniteModule& m);

}  // namespace ktype

#endif
