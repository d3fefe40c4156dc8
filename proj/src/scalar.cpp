#include "ktype/scalar.hpp"

#include <ostream>
#include <sstream>

namespace ktype {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v(text);
            v.canonicalize();
            return Rational(v);
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw domain_error("Rational::parse: zero denominator");
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw usage_error("Rational::parse: cannot parse '" + text + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw domain_error("Rational::inv of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw domain_error("Rational::pow: negative power of zero");
        return Rational(0);
    }
    mpq_class base = e > 0 ? v_ : mpq_class(1) / v_;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_set_ui(num.get_den_mpz_t(), 1);
    mpz_pow_ui(den.get_num_mpz_t(), base.get_den().get_mpz_t(), k);
    mpz_set_ui(den.get_den_mpz_t(), 1);
    return Rational(mpq_class(num / den));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
}

// ---------------------------------------------------------------------------

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(ExponentVec(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, int var, int exp, const Rational& coeff) {
    if (var < 1 || var > nvars) throw usage_error("LaurentPoly::monomial: variable index out of range");
    LaurentPoly p(nvars);
    if (coeff.is_zero()) return p;
    ExponentVec e(nvars, 0);
    e[var - 1] = exp;
    p.terms_.emplace(std::move(e), coeff);
    return p;
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::map<ExponentVec, Rational> terms) {
    LaurentPoly p(nvars);
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars)
            throw usage_error("LaurentPoly::from_terms: exponent vector length mismatch");
        if (!c.is_zero()) p.terms_.emplace(e, c);
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExponentVec(nvars_, 0);
}

Rational LaurentPoly::coeff(const ExponentVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVec& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw usage_error("LaurentPoly: variable count mismatch in +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw usage_error("LaurentPoly: variable count mismatch in -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::swap_vars(int i) const {
    if (i < 1 || i >= nvars_) throw usage_error("LaurentPoly::swap_vars: index out of range");
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        ExponentVec f = e;
        std::swap(f[i - 1], f[i]);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) throw usage_error("laurent_mul: variable count mismatch");
    LaurentPoly r(a.nvars());
    ExponentVec e(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int k = 0; k < a.nvars(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

namespace {

ExponentVec coordinate_min(const LaurentPoly& p) {
    ExponentVec m(p.nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (int k = 0; k < p.nvars(); ++k)
                if (e[k] < m[k]) m[k] = e[k];
        }
    }
    return m;
}

LaurentPoly shift_exponents(const LaurentPoly& p, const ExponentVec& shift) {
    std::map<ExponentVec, Rational> terms;
    for (const auto& [e, c] : p.terms()) {
        ExponentVec f = e;
        for (int k = 0; k < p.nvars(); ++k) f[k] += shift[k];
        terms.emplace(std::move(f), c);
    }
    return LaurentPoly::from_terms(p.nvars(), std::move(terms));
}

}  // namespace

// Normalizes both operands to honest polynomials (coordinate-wise minimal
// exponent zero) and runs single-divisor multivariate division in lex order.
// When the division is exact the leading term of every remainder is
// divisible by the leading term of the divisor, so a failed monomial
// division or a nonzero final remainder proves non-exactness.
LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.nvars() != den.nvars()) throw usage_error("laurent_divide_exact: variable count mismatch");
    if (den.is_zero()) throw internal_error("laurent_divide_exact: division by zero polynomial");
    const int n = num.nvars();
    if (num.is_zero()) return LaurentPoly::zero(n);

    ExponentVec mnum = coordinate_min(num);
    ExponentVec mden = coordinate_min(den);
    ExponentVec neg_mnum(n), neg_mden(n), qshift(n);
    for (int k = 0; k < n; ++k) {
        neg_mnum[k] = -mnum[k];
        neg_mden[k] = -mden[k];
        qshift[k] = mnum[k] - mden[k];
    }
    LaurentPoly r = shift_exponents(num, neg_mnum);
    LaurentPoly d = shift_exponents(den, neg_mden);

    // lex-leading term of the divisor (largest key in the ordered map)
    const auto& dlead = *d.terms().rbegin();
    std::map<ExponentVec, Rational> qterms;
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        ExponentVec t(n);
        for (int k = 0; k < n; ++k) {
            t[k] = rlead.first[k] - dlead.first[k];
            if (t[k] < 0) throw internal_error("laurent_divide_exact: non-exact division");
        }
        Rational c = rlead.second / dlead.second;
        qterms.emplace(t, c);
        LaurentPoly tmono = LaurentPoly::from_terms(n, {{t, c}});
        r -= laurent_mul(tmono, d);
    }
    LaurentPoly q = LaurentPoly::from_terms(n, std::move(qterms));
    return shift_exponents(q, qshift);
}

Rational laurent_eval(const LaurentPoly& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw usage_error("laurent_eval: point dimension mismatch");
    for (const auto& x : point)
        if (x.is_zero()) throw domain_error("laurent_eval: zero coordinate");
    Rational acc(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (int k = 0; k < p.nvars(); ++k)
            if (e[k] != 0) term *= point[k].pow(e[k]);
        acc += term;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int k = 0; k < nvars_; ++k)
            if (e[k] != 0) os << "*t" << (k + 1) << "^" << e[k];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.str();
}

}  // namespace ktype
