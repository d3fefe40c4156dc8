#ifndef KTYPE_SCALAR_HPP
#define KTYPE_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ktype/errors.hpp"

namespace ktype {

// Exact rational scalar.  Invariants: always reduced to lowest terms,
// denominator > 0, zero is 0/1.  GMP keeps arithmetic canonical once the
// operands are canonical; construction canonicalizes explicitly.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix with ints
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inv() const;
    // Integer exponent, negative allowed for nonzero base.
    Rational pow(long e) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

// Exponent vector of a Laurent monomial in theta_1..theta_n; entries may be
// negative.  std::vector's lexicographic operator< fixes the canonical term
// order.
using ExponentVec = std::vector<int32_t>;

// Laurent polynomial in n commuting variables theta_1..theta_n over the
// rationals.  Terms are stored sparsely, keyed by exponent vector; no zero
// coefficient is ever stored, so equality is structural.
class LaurentPoly {
  public:
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}
    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, const Rational& c);
    // theta_i^e with 1-based variable index.
    static LaurentPoly monomial(int nvars, int var, int exp = 1, const Rational& coeff = 1);
    static LaurentPoly from_terms(int nvars, std::map<ExponentVec, Rational> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<ExponentVec, Rational>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    // Coefficient of the given monomial (zero if absent).
    Rational coeff(const ExponentVec& e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Applies the simple transposition s_i (1-based, swaps theta_i and
    // theta_{i+1}) to every exponent vector.
    LaurentPoly swap_vars(int i) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

  private:
    void add_term(const ExponentVec& e, const Rational& c);

    int nvars_;
    std::map<ExponentVec, Rational> terms_;

    friend LaurentPoly laurent_mul(const LaurentPoly&, const LaurentPoly&);
};

// Exact product.  Mismatched variable counts are a usage error.
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient num/den in the Laurent ring.  Throws internal_error if den
// does not divide num exactly: in this artifact a failed division always
// means a bug in relation handling, not bad user input.
LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Evaluates at a point with all coordinates nonzero (negative exponents are
// inverted).  A zero coordinate is a domain error.
Rational laurent_eval(const LaurentPoly& p, const std::vector<Rational>& point);

}  // namespace ktype

#endif
