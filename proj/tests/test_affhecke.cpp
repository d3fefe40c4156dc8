#include <doctest.h>

#include <random>

#include "ktype/affhecke.hpp"
#include "ktype/errors.hpp"

using namespace ktype;

namespace {

const Rational kQ(3);

LaurentPoly rand_poly(std::mt19937_64& rng, int nvars, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(-2, 2);
    std::uniform_int_distribution<long> val(-6, 6);
    std::map<ExponentVec, Rational> terms;
    for (int t = nterms(rng); t > 0; --t) {
        ExponentVec e(nvars);
        for (auto& x : e) x = expo(rng);
        terms[e] = Rational(val(rng));
    }
    return LaurentPoly::from_terms(nvars, std::move(terms));
}

LaurentPoly bl_denominator(int nvars, int i) {
    ExponentVec e(nvars, 0);
    e[i - 1] = 1;
    e[i] = -1;
    return LaurentPoly::constant(nvars, 1) - LaurentPoly::from_terms(nvars, {{e, Rational(1)}});
}

}  // namespace

TEST_CASE("bl_commute: symmetric polynomials have zero correction") {
    auto sym = LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(2, 2);
    auto [moved, corr] = bl_commute(1, sym);
    CHECK(moved == sym);
    CHECK(corr.is_zero());
}

TEST_CASE("bl_commute: theta_i moves to theta_{i+1} with correction -theta_{i+1}") {
    auto [moved, corr] = bl_commute(1, LaurentPoly::monomial(3, 1));
    CHECK(moved == LaurentPoly::monomial(3, 2));
    CHECK(corr == LaurentPoly::monomial(3, 2, 1, Rational(-1)));
    // re-expansion: corr * (1 - t1 t2^{-1}) = p - s_i p
    CHECK(laurent_mul(corr, bl_denominator(3, 1)) ==
          LaurentPoly::monomial(3, 1) - LaurentPoly::monomial(3, 2));
}

TEST_CASE("bl_commute: constants pass through") {
    auto c = LaurentPoly::constant(2, Rational(5, 7));
    auto [moved, corr] = bl_commute(1, c);
    CHECK(moved == c);
    CHECK(corr.is_zero());
}

TEST_CASE("bl_commute re-expansion identity on random inputs, rank <= 4") {
    std::mt19937_64 rng(21);
    for (int rank = 2; rank <= 4; ++rank)
        for (int t = 0; t < 40; ++t) {
            auto p = rand_poly(rng, rank);
            for (int i = 1; i < rank; ++i) {
                auto [moved, corr] = bl_commute(i, p);
                CHECK(moved == p.swap_vars(i));
                CHECK(laurent_mul(corr, bl_denominator(rank, i)) == p - moved);
            }
        }
}

TEST_CASE("normal form restricted to constants reproduces hecke_mul") {
    HeckeParams params(3, kQ);
    std::mt19937_64 rng(22);
    const auto perms = all_permutations(3);
    std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int t = 0; t < 25; ++t) {
        HeckeElement a(params), b(params);
        for (int k = 0; k < 2; ++k) {
            a.add(perms[pick(rng)], Rational(val(rng)));
            b.add(perms[pick(rng)], Rational(val(rng)));
        }
        auto lhs = nf_mul(NormalFormElement::from_hecke(a), NormalFormElement::from_hecke(b));
        auto rhs = NormalFormElement::from_hecke(hecke_mul(a, b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("normal form restricted to the theta part reproduces laurent_mul") {
    HeckeParams params(3, kQ);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        auto p = rand_poly(rng, 3), r = rand_poly(rng, 3);
        auto lhs = nf_mul(NormalFormElement::from_poly(params, p), NormalFormElement::from_poly(params, r));
        CHECK(lhs == NormalFormElement::from_poly(params, laurent_mul(p, r)));
    }
}

TEST_CASE("nf_mul matches the Bernstein-Lusztig identity for p * T_i") {
    HeckeParams params(2, kQ);
    std::mt19937_64 rng(24);
    for (int t = 0; t < 20; ++t) {
        auto p = rand_poly(rng, 2);
        auto lhs = nf_mul(NormalFormElement::from_poly(params, p),
                          NormalFormElement::t_basis(params, Permutation::simple(2, 1)));
        auto [moved, corr] = bl_commute(1, p);
        NormalFormElement rhs(params);
        rhs.add(Permutation::simple(2, 1), moved);
        corr *= kQ - Rational(1);
        rhs.add(Permutation(2), corr);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("nf_mul associativity on random triples, rank 2 and 3") {
    std::mt19937_64 rng(25);
    for (int rank = 2; rank <= 3; ++rank) {
        HeckeParams params(rank, kQ);
        const auto perms = all_permutations(rank);
        std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
        for (int t = 0; t < 10; ++t) {
            NormalFormElement a(params), b(params), c(params);
            a.add(perms[pick(rng)], rand_poly(rng, rank, 2));
            b.add(perms[pick(rng)], rand_poly(rng, rank, 2));
            c.add(perms[pick(rng)], rand_poly(rng, rank, 2));
            CHECK(nf_mul(nf_mul(a, b), c) == nf_mul(a, nf_mul(b, c)));
        }
    }
}

TEST_CASE("principal series: dimension and rank-1 case") {
    HeckeParams p1(1, kQ);
    auto m1 = principal_series(p1, CentralCharacterData({Rational(7)}));
    CHECK(m1.dim == 1);
    CHECK(m1.theta_action[0].at(0, 0) == Rational(7));

    HeckeParams p3(3, kQ);
    auto m3 = principal_series(p3, CentralCharacterData({Rational(1), Rational(5), Rational(25)}));
    CHECK(m3.dim == 6);
    CHECK_NOTHROW(validate_algebra_module(m3));
}

TEST_CASE("principal series at chi=(1,q): T eigen-structure and the sign-type line") {
    HeckeParams params(2, kQ);
    auto m = principal_series(params, CentralCharacterData({Rational(1), kQ}));
    CHECK(m.dim == 2);
    // characteristic data of T_1: trace q-1, determinant -q
    const Matrix& T = m.t_action[0];
    CHECK(T.trace() == kQ - Rational(1));
    CHECK(T.at(0, 0) * T.at(1, 1) - T.at(0, 1) * T.at(1, 0) == -kQ);
    // the line through (-q, 1) is a sign-type submodule: T v = -v,
    // theta_1 v = q v, theta_2 v = v
    std::vector<Rational> v = {-kQ, Rational(1)};
    auto tv = T.apply(v);
    CHECK(tv[0] == -v[0]);
    CHECK(tv[1] == -v[1]);
    auto th1v = m.theta_action[0].apply(v);
    CHECK(th1v[0] == kQ * v[0]);
    CHECK(th1v[1] == kQ * v[1]);
    auto th2v = m.theta_action[1].apply(v);
    CHECK(th2v[0] == v[0]);
    CHECK(th2v[1] == v[1]);
}

TEST_CASE("principal series restricted to T is the regular representation (n <= 3)") {
    for (int n = 2; n <= 3; ++n) {
        HeckeParams params(n, kQ);
        std::vector<Rational> z;
        for (int i = 0; i < n; ++i) z.push_back(Rational(1 + 4 * i));  // distinct non-linked values
        auto ps = principal_series(params, CentralCharacterData(z));
        for (const auto& label : enumerate_partitions(n)) {
            SpechtModule s(params, label);
            CHECK(multiplicity(s, ps.restrict_to_t()) == count_syt(label));
        }
    }
}

TEST_CASE("segment_eval: geometric progressions with the hard-coded direction") {
    CHECK(segment_eval(Segment(0, 1), kQ) == std::vector<Rational>{Rational(1)});
    CHECK(segment_eval(Segment(0, 3), kQ) == std::vector<Rational>{Rational(9), Rational(3), Rational(1)});
    CHECK(segment_eval(Segment(1, 2), kQ) == std::vector<Rational>{Rational(9), Rational(3)});
    // negative starts use inverse powers
    CHECK(segment_eval(Segment(-1, 1), kQ) == std::vector<Rational>{Rational(1, 3)});
}

TEST_CASE("line multipliers are prime-pair ratios") {
    CHECK(line_multiplier(0) == Rational(1));
    CHECK(line_multiplier(1) == Rational(5, 7));
    CHECK(line_multiplier(2) == Rational(11, 13));
    CHECK(line_multiplier(3) == Rational(17, 19));
}

TEST_CASE("induced standard module: single segment is the one-dimensional sign-type module") {
    for (int n = 2; n <= 4; ++n) {
        HeckeParams params(n, kQ);
        auto m = induced_standard_module(params, Multisegment({Segment(0, n)}));
        CHECK(m.dim == 1);
        for (const auto& t : m.t_action) CHECK(t.at(0, 0) == Rational(-1));
        // theta values: q^{n-1}, ..., q, 1
        for (int j = 0; j < n; ++j) CHECK(m.theta_action[j].at(0, 0) == kQ.pow(n - 1 - j));
        CHECK_NOTHROW(validate_algebra_module(m));
    }
}

TEST_CASE("induced standard module with all length-1 segments equals a principal series") {
    HeckeParams params(3, kQ);
    Multisegment m({Segment(2, 1), Segment(1, 1), Segment(0, 1)});  // Langlands order
    auto standard = induced_standard_module(params, m);
    // reversed layout: zeta = (1, q, q^2)
    auto ps = principal_series(params, CentralCharacterData({Rational(1), kQ, kQ* kQ}));
    CHECK(standard.dim == ps.dim);
    CHECK(standard.t_action == ps.t_action);
    CHECK(standard.theta_action == ps.theta_action);
}

TEST_CASE("induced standard module dimensions multiply out to n!") {
    HeckeParams params(3, kQ);
    auto m = induced_standard_module(params, Multisegment({Segment(0, 2), Segment(0, 1)}));
    CHECK(m.dim == 3);  // 3!/2!
    HeckeParams p4(4, kQ);
    auto m4 = induced_standard_module(p4, Multisegment({Segment(0, 2), Segment(0, 2)}));
    CHECK(m4.dim == 6);  // 4!/(2!2!)
}

TEST_CASE("induced standard module rejects out-of-order segments") {
    HeckeParams params(2, kQ);
    CHECK_THROWS_AS(induced_standard_module(params, Multisegment({Segment(0, 1), Segment(1, 1)})),
                    usage_error);
    CHECK_THROWS_AS(induced_standard_module(params, Multisegment({Segment(0, 1)})), usage_error);
}

TEST_CASE("standard modules pass the full relation suite (n <= 4 spot checks)") {
    HeckeParams params(4, kQ);
    for (const Multisegment& m :
         {Multisegment({Segment(2, 2), Segment(0, 2)}), Multisegment({Segment(1, 3), Segment(0, 1)}),
          Multisegment({Segment(3, 1), Segment(1, 2), Segment(0, 1)})}) {
        auto mod = induced_standard_module(params, m);
        CHECK_NOTHROW(validate_algebra_module(mod));
    }
}
