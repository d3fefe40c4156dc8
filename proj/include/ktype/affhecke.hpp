#ifndef KTYPE_AFFHECKE_HPP
#define KTYPE_AFFHECKE_HPP

#include <map>
#include <string>
#include <vector>

#include "ktype/finhecke.hpp"
#include "ktype/linalg.hpp"
#include "ktype/scalar.hpp"
#include "ktype/segments.hpp"
#include "ktype/symgroup.hpp"

namespace ktype {

// Bernstein-Lusztig commutation: returns (s_i p, c) with
//
//   T_i * p = (s_i p) * T_i + (q-1) * c,   c = (p - s_i p) / (1 - th_i th_{i+1}^{-1}).
//
// The same c also satisfies p * T_i = T_i * (s_i p) + (q-1) * c.  The
// division is always exact; failure is an internal error.
std::pair<LaurentPoly, LaurentPoly> bl_commute(int i, const LaurentPoly& p);

// Element of the affine Hecke algebra of GL_n in Bernstein normal form:
// sum over w of T_w * p_w(theta), p_w a Laurent polynomial.  Unique
// representation; constant coefficients reproduce H_W(q), T-trivial
// elements reproduce the Laurent ring.
class NormalFormElement {
  public:
    explicit NormalFormElement(const HeckeParams& params) : params_(params) {}
    static NormalFormElement unit(const HeckeParams& params);
    static NormalFormElement t_basis(const HeckeParams& params, const Permutation& w);
    static NormalFormElement theta(const HeckeParams& params, int j, int exp = 1);
    static NormalFormElement from_poly(const HeckeParams& params, const LaurentPoly& p);
    static NormalFormElement from_hecke(const HeckeElement& h);

    const HeckeParams& params() const { return params_; }
    const std::map<Permutation, LaurentPoly>& terms() const { return terms_; }
    LaurentPoly coeff(const Permutation& w) const;
    bool is_zero() const { return terms_.empty(); }

    void add(const Permutation& w, const LaurentPoly& p);
    NormalFormElement& operator+=(const NormalFormElement& o);
    NormalFormElement& operator*=(const Rational& c);

    friend bool operator==(const NormalFormElement& a, const NormalFormElement& b) {
        return a.params_ == b.params_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NormalFormElement& a, const NormalFormElement& b) { return !(a == b); }

  private:
    HeckeParams params_;
    std::map<Permutation, LaurentPoly> terms_;
};

// T_{s_i} * a  and  a * T_{s_i} in normal form.
NormalFormElement left_mul_simple(int i, const NormalFormElement& a);
NormalFormElement right_mul_simple(const NormalFormElement& a, int i);
// a * p for a Laurent polynomial p (theta part sits on the right; trivial).
NormalFormElement right_mul_poly(const NormalFormElement& a, const LaurentPoly& p);
// p * a: commutes p through every T_w of a via bl_commute.
NormalFormElement left_mul_poly(const LaurentPoly& p, const NormalFormElement& a);

// Associative product in normal form.
NormalFormElement nf_mul(const NormalFormElement& a, const NormalFormElement& b);

// theta-eigenvalue data of an unramified character: n nonzero rationals.
struct CentralCharacterData {
    std::vector<Rational> z;
    explicit CentralCharacterData(std::vector<Rational> values);
    int n() const { return static_cast<int>(z.size()); }
};

enum class Provenance { PrincipalSeries, InducedStandard, Quotient, Other };

// Finite-dimensional module over the affine Hecke algebra, presented by
// exact action matrices for T_1..T_{n-1} and theta_1..theta_n.  theta_action
// may be empty for a module of the finite subalgebra.
struct AlgebraModule {
    HeckeParams params;
    int dim;
    std::vector<Matrix> t_action;
    std::vector<Matrix> theta_action;
    Provenance provenance = Provenance::Other;

    bool has_theta() const { return !theta_action.empty(); }
    std::vector<Matrix> generators() const;
    FiniteModule restrict_to_t() const { return FiniteModule{params, dim, t_action}; }
};

// Wraps a module of the finite subalgebra (no theta part).
AlgebraModule from_finite(const FiniteModule& m);

// Verifies braid/quadratic on the T part, pairwise commutation and
// invertibility of the theta part, and the Bernstein-Lusztig relation
// between every T_i and theta_j.  Throws internal_error on failure.
void validate_algebra_module(const AlgebraModule& m);

// Relation checking is on by default up to this dimension; the environment
// variable HECKE_DEBUG_RELATIONS=1 forces it at every dimension.
bool should_validate(int dim);

// Values of theta on the Steinberg-type vector of one segment, scaled by the
// line multiplier: (q^{a+e-1}, ..., q^{a+1}, q^a), highest power first.
//
// Direction derivation (hard-coded after the fact): on a one-dimensional
// module with T_i = -1 and theta_j = zeta_j, the relation
// T_i th_i = th_{i+1} T_i - (q-1) th_{i+1} forces -zeta_i = -q zeta_{i+1},
// i.e. zeta_i = q * zeta_{i+1}: values must DECREASE by a factor q from
// left to right inside a segment.  The ascending choice fails the module
// validation, which is exactly the loud failure the design wants.
std::vector<Rational> segment_eval(const Segment& seg, const Rational& q);

// Multiplier attached to a cuspidal line: line 0 is 1, further lines use
// ratios of consecutive primes 5/7, 11/13, 17/19, ... so that values on
// distinct lines never differ by an integer power of q (for the q used
// here).
Rational line_multiplier(int line);

// Principal series H tensor_{A} C_chi on the basis {T_w (x) 1}, dimension n!.
AlgebraModule principal_series(const HeckeParams& params, const CentralCharacterData& chi);

// Standard module attached to a Langlands-ordered multisegment: induced
// from the one-dimensional Steinberg-type module (T_i -> -1 inside blocks,
// theta -> segment values) of the parabolic subalgebra given by the segment
// lengths.  Basis {T_x (x) v}, x minimal coset representatives; dimension
// n!/prod(e_i!).  Out-of-order segments are a usage error.
AlgebraModule induced_standard_module(const HeckeParams& params, const Multisegment& m);

}  // namespace ktype

#endif
