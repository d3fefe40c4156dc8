#include <doctest.h>

#include <map>
#include <set>

#include "ktype/errors.hpp"
#include "ktype/symgroup.hpp"

using namespace ktype;

namespace {

Permutation from_word(int n, const std::vector<int>& word) {
    Permutation w(n);
    for (int i : word) w = w * Permutation::simple(n, i);
    return w;
}

}  // namespace

TEST_CASE("length = inversion count") {
    CHECK(length(Permutation(4)) == 0);
    CHECK(length(Permutation({3, 2, 1})) == 3);  // longest element of S_3
    CHECK(length(Permutation::simple(4, 1)) == 1);
}

TEST_CASE("l(s*w) = l(w) +- 1") {
    for (const auto& w : all_permutations(4))
        for (int i = 1; i < 4; ++i) {
            int diff = length(Permutation::simple(4, i) * w) - length(w);
            CHECK((diff == 1 || diff == -1));
        }
}

TEST_CASE("reduced_word multiplies back to w, exhaustively in S_4") {
    for (const auto& w : all_permutations(4)) {
        const auto word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == length(w));
        Permutation prod(4);
        for (int i : word) prod = prod * Permutation::simple(4, i);
        CHECK(prod == w);
    }
    CHECK(reduced_word(Permutation(3)).empty());
    CHECK(reduced_word(Permutation({3, 2, 1})).size() == 3);
}

TEST_CASE("min_coset_reps counts and extremes") {
    CHECK(min_coset_reps(3, Composition({3})).size() == 1);
    CHECK(min_coset_reps(3, Composition({3}))[0] == Permutation(3));
    CHECK(min_coset_reps(3, Composition({1, 1, 1})).size() == 6);
    CHECK(min_coset_reps(3, Composition({2, 1})).size() == 3);
    CHECK(min_coset_reps(4, Composition({2, 2})).size() == 6);
}

TEST_CASE("coset representatives exhaust W/W_c with additive lengths (n <= 5)") {
    for (int n = 2; n <= 5; ++n) {
        const std::vector<std::vector<int>> comps =
            n == 2 ? std::vector<std::vector<int>>{{1, 1}, {2}}
                   : (n == 3 ? std::vector<std::vector<int>>{{2, 1}, {1, 2}, {3}}
                             : (n == 4 ? std::vector<std::vector<int>>{{2, 2}, {3, 1}, {1, 1, 2}}
                                       : std::vector<std::vector<int>>{{3, 2}, {2, 2, 1}}));
        for (const auto& parts : comps) {
            Composition c(parts);
            const auto reps = min_coset_reps(n, c);
            long size_wc = 1;
            for (int p : parts)
                for (int k = 2; k <= p; ++k) size_wc *= k;
            long fact = 1;
            for (int k = 2; k <= n; ++k) fact *= k;
            CHECK(static_cast<long>(reps.size()) * size_wc == fact);

            std::set<std::vector<int>> seen;
            for (const auto& w : all_permutations(n)) {
                auto [x, u] = parabolic_factor(w, c);
                CHECK(is_min_coset_rep(x, c));
                CHECK(x * u == w);
                CHECK(length(x) + length(u) == length(w));
                // u must lie in the parabolic: it fixes block boundaries
                int pos = 1;
                for (int p : parts) {
                    for (int k = 0; k < p; ++k) {
                        CHECK(u.apply(pos + k) >= pos);
                        CHECK(u.apply(pos + k) < pos + p);
                    }
                    pos += p;
                }
                seen.insert(x.images());
            }
            CHECK(seen.size() == reps.size());
        }
    }
}

TEST_CASE("deodhar_step on the identity") {
    Composition c({2, 1});
    // s_1 lies inside the first block
    auto step1 = deodhar_step(1, Permutation(3), c);
    REQUIRE(std::holds_alternative<StaysInParabolic>(step1));
    CHECK(std::get<StaysInParabolic>(step1).t == 1);
    // s_2 crosses blocks
    auto step2 = deodhar_step(2, Permutation(3), c);
    REQUIRE(std::holds_alternative<LongerRep>(step2));
    CHECK(length(std::get<LongerRep>(step2).rep) == 1);
}

TEST_CASE("deodhar_step exhaustive n=3, c=(2,1) against brute force") {
    Composition c({2, 1});
    const auto reps = min_coset_reps(3, c);
    for (const auto& x : reps) {
        for (int s = 1; s < 3; ++s) {
            const Permutation sx = Permutation::simple(3, s) * x;
            const auto step = deodhar_step(s, x, c);
            if (std::holds_alternative<StaysInParabolic>(step)) {
                const int t = std::get<StaysInParabolic>(step).t;
                CHECK(c.simple_in_parabolic(t));
                CHECK(sx == x * Permutation::simple(3, t));
            } else if (std::holds_alternative<LongerRep>(step)) {
                CHECK(std::get<LongerRep>(step).rep == sx);
                CHECK(is_min_coset_rep(sx, c));
                CHECK(length(sx) == length(x) + 1);
            } else {
                CHECK(std::get<ShorterRep>(step).rep == sx);
                CHECK(is_min_coset_rep(sx, c));
                CHECK(length(sx) == length(x) - 1);
            }
        }
    }
}

TEST_CASE("deodhar longer then same s comes back shorter") {
    Composition c({2, 2});
    for (const auto& x : min_coset_reps(4, c))
        for (int s = 1; s < 4; ++s) {
            const auto step = deodhar_step(s, x, c);
            if (auto* lo = std::get_if<LongerRep>(&step)) {
                const auto back = deodhar_step(s, lo->rep, c);
                REQUIRE(std::holds_alternative<ShorterRep>(back));
                CHECK(std::get<ShorterRep>(back).rep == x);
            }
        }
}

TEST_CASE("deodhar_step rejects non-minimal input") {
    Composition c({2, 1});
    // (2,1,3) has a descent inside the first block
    CHECK_THROWS_AS(deodhar_step(1, Permutation({2, 1, 3}), c), usage_error);
}

TEST_CASE("composition convention: right factor first") {
    // a = s_1, b = s_2 in S_3: (a*b)(1) = a(b(1)) = a(1) = 2
    Permutation a = Permutation::simple(3, 1), b = Permutation::simple(3, 2);
    CHECK((a * b).apply(1) == 2);
    CHECK((a * b) == from_word(3, {1, 2}));
}
