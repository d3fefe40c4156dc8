#include <doctest.h>

#include <random>

#include "ktype/errors.hpp"
#include "ktype/scalar.hpp"

using namespace ktype;

namespace {

Rational rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    return Rational(num(rng), den(rng));
}

LaurentPoly rand_poly(std::mt19937_64& rng, int nvars, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::map<ExponentVec, Rational> terms;
    for (int t = nterms(rng); t > 0; --t) {
        ExponentVec e(nvars);
        for (auto& x : e) x = expo(rng);
        terms[e] = rand_rat(rng);
    }
    return LaurentPoly::from_terms(nvars, std::move(terms));
}

LaurentPoly theta(int nvars, int var, int exp = 1) { return LaurentPoly::monomial(nvars, var, exp); }

}  // namespace

TEST_CASE("Rational stays reduced with positive denominator") {
    Rational a(2, 6);
    CHECK(a == Rational(1, 3));
    CHECK(a.str() == "1/3");
    Rational b(3, -6);
    CHECK(b.str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
}

TEST_CASE("Rational parse") {
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("x"), usage_error);
}

TEST_CASE("rational arithmetic is exact on random values") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 500; ++t) {
        Rational a = rand_rat(rng), b = rand_rat(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("Rational integer powers") {
    CHECK(Rational(2, 3).pow(2) == Rational(4, 9));
    CHECK(Rational(2, 3).pow(-1) == Rational(3, 2));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), domain_error);
}

TEST_CASE("laurent_mul: inverse monomials cancel") {
    auto p = laurent_mul(theta(2, 1, 1), theta(2, 1, -1));
    CHECK(p == LaurentPoly::constant(2, 1));
}

TEST_CASE("laurent_mul: identity element") {
    auto p = theta(2, 1) - theta(2, 2);
    CHECK(laurent_mul(p, LaurentPoly::constant(2, 1)) == p);
}

TEST_CASE("laurent_mul: difference of squares with negative exponents") {
    auto x = theta(2, 1, 1);  // t1
    LaurentPoly t1t2inv(2);
    t1t2inv = LaurentPoly::from_terms(2, {{{1, -1}, Rational(1)}});
    auto one = LaurentPoly::constant(2, 1);
    auto prod = laurent_mul(one - t1t2inv, one + t1t2inv);
    auto expect = one - LaurentPoly::from_terms(2, {{{2, -2}, Rational(1)}});
    CHECK(prod == expect);
    (void)x;
}

TEST_CASE("laurent_mul rejects mismatched variable counts") {
    CHECK_THROWS_AS(laurent_mul(theta(2, 1), theta(3, 1)), usage_error);
}

TEST_CASE("laurent ring axioms on random polynomials") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; ++t) {
        auto a = rand_poly(rng, 3), b = rand_poly(rng, 3), c = rand_poly(rng, 3);
        CHECK(laurent_mul(a, b) == laurent_mul(b, a));
        CHECK(laurent_mul(laurent_mul(a, b), c) == laurent_mul(a, laurent_mul(b, c)));
        CHECK(laurent_mul(a, b + c) == laurent_mul(a, b) + laurent_mul(a, c));
    }
}

TEST_CASE("laurent_divide_exact: Bernstein-Lusztig shape, verified by re-multiplication") {
    // (t1 - t2) / (1 - t1 t2^{-1})
    auto num = theta(2, 1) - theta(2, 2);
    auto den = LaurentPoly::constant(2, 1) - LaurentPoly::from_terms(2, {{{1, -1}, Rational(1)}});
    auto r = laurent_divide_exact(num, den);
    CHECK(laurent_mul(r, den) == num);
    CHECK(r == LaurentPoly::from_terms(2, {{{0, 1}, Rational(-1)}}));  // -t2
}

TEST_CASE("laurent_divide_exact: polynomial factorization") {
    auto num = LaurentPoly::from_terms(2, {{{2, 0}, Rational(1)}, {{0, 2}, Rational(-1)}});
    auto den = theta(2, 1) - theta(2, 2);
    CHECK(laurent_divide_exact(num, den) == theta(2, 1) + theta(2, 2));
}

TEST_CASE("laurent_divide_exact: division by one") {
    std::mt19937_64 rng(3);
    auto p = rand_poly(rng, 2);
    CHECK(laurent_divide_exact(p, LaurentPoly::constant(2, 1)) == p);
}

TEST_CASE("laurent_divide_exact: random exact quotients round-trip") {
    std::mt19937_64 rng(4);
    int done = 0;
    while (done < 40) {
        auto a = rand_poly(rng, 2), b = rand_poly(rng, 2);
        if (b.is_zero()) continue;
        auto prod = laurent_mul(a, b);
        CHECK(laurent_divide_exact(prod, b) == a);
        ++done;
    }
}

TEST_CASE("laurent_divide_exact flags non-exact division as internal error") {
    auto num = theta(2, 1) + LaurentPoly::constant(2, 1);
    auto den = theta(2, 2) + LaurentPoly::constant(2, 2);
    CHECK_THROWS_AS(laurent_divide_exact(num, den), internal_error);
}

TEST_CASE("laurent_eval basics") {
    std::vector<Rational> pt = {Rational(3), Rational(1)};
    CHECK(laurent_eval(LaurentPoly::from_terms(2, {{{1, -1}, Rational(1)}}), pt) == Rational(3));
    CHECK(laurent_eval(LaurentPoly::constant(2, 1), pt) == Rational(1));
    // (q-1) * t1 at q=3, point (5): 2*5 = 10
    auto p = theta(1, 1);
    p *= Rational(3) - Rational(1);
    CHECK(laurent_eval(p, {Rational(5)}) == Rational(10));
}

TEST_CASE("laurent_eval rejects zero coordinates and bad arity") {
    CHECK_THROWS_AS(laurent_eval(theta(2, 1), {Rational(0), Rational(1)}), domain_error);
    CHECK_THROWS_AS(laurent_eval(theta(2, 1), {Rational(1)}), usage_error);
}

TEST_CASE("laurent_eval is a ring homomorphism on random inputs") {
    std::mt19937_64 rng(5);
    std::vector<Rational> pt = {Rational(2), Rational(-3, 2), Rational(7)};
    for (int t = 0; t < 60; ++t) {
        auto a = rand_poly(rng, 3), b = rand_poly(rng, 3);
        CHECK(laurent_eval(laurent_mul(a, b), pt) == laurent_eval(a, pt) * laurent_eval(b, pt));
        CHECK(laurent_eval(a + b, pt) == laurent_eval(a, pt) + laurent_eval(b, pt));
    }
}

TEST_CASE("swap_vars is an involution and fixes symmetric polynomials") {
    std::mt19937_64 rng(6);
    auto p = rand_poly(rng, 3);
    CHECK(p.swap_vars(1).swap_vars(1) == p);
    auto sym = theta(2, 1) + theta(2, 2);
    CHECK(sym.swap_vars(1) == sym);
}
