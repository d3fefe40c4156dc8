#include <doctest.h>

#include "ktype/combin.hpp"
#include "ktype/errors.hpp"

using namespace ktype;

TEST_CASE("partition construction and serialization") {
    Partition p({3, 1});
    CHECK(p.size() == 4);
    CHECK(p.str() == "[3,1]");
    CHECK(Partition::parse("[3,1]") == p);
    CHECK(Partition().str() == "[]");
    CHECK_THROWS_AS(Partition({1, 2}), usage_error);
    CHECK_THROWS_AS(Partition({0}), usage_error);
}

TEST_CASE("conjugate partition") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
}

TEST_CASE("dominance order: (k) is smallest, (1,...,1) is biggest") {
    CHECK(dominance_leq(Partition({3}), Partition({2, 1})));
    CHECK(dominance_leq(Partition({2, 1}), Partition({1, 1, 1})));
    // n=4: (3,1) <= (2,2) and not conversely
    CHECK(dominance_leq(Partition({3, 1}), Partition({2, 2})));
    CHECK(!dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({2, 1})), usage_error);
}

TEST_CASE("dominance order axioms, exhaustive for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = enumerate_partitions(n);
        for (const auto& a : parts) {
            CHECK(dominance_leq(a, a));
            CHECK(dominance_leq(min_label(n), a));
            CHECK(dominance_leq(a, max_label(n)));
            for (const auto& b : parts) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : parts)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("min and max labels") {
    CHECK(min_label(3) == Partition({3}));
    CHECK(max_label(3) == Partition({1, 1, 1}));
    CHECK(min_label(1) == max_label(1));
    CHECK_THROWS_AS(min_label(0), usage_error);
    CHECK_THROWS_AS(max_label(-2), usage_error);
}

TEST_CASE("count_syt on the spec shapes") {
    CHECK(count_syt(Partition({2, 1})) == 2);
    CHECK(count_syt(Partition({5})) == 1);
    CHECK(count_syt(Partition({1, 1, 1, 1})) == 1);
    CHECK(count_syt(Partition()) == 1);
}

TEST_CASE("hook-length equals backtracking and squares sum to n!") {
    long factorial = 1;
    for (int n = 1; n <= 6; ++n) {
        factorial *= n;
        long sum_sq = 0;
        for (const auto& p : enumerate_partitions(n)) {
            const long c = count_syt(p);
            CHECK(c == count_syt_by_enumeration(p));
            sum_sq += c * c;
        }
        CHECK(sum_sq == factorial);
    }
}

TEST_CASE("enumerate_partitions order and counts") {
    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0] == Partition());
    CHECK(enumerate_partitions(4).size() == 5);

    // descending lexicographic: each next partition is lexicographically smaller
    auto p6 = enumerate_partitions(6);
    for (size_t i = 0; i + 1 < p6.size(); ++i) CHECK(p6[i + 1].parts() < p6[i].parts());
}

TEST_CASE("kostka numbers against known values") {
    CHECK(kostka_number(Partition({2, 1}), {1, 1, 1}) == 2);
    CHECK(kostka_number(Partition({2, 1}), {2, 1}) == 1);
    CHECK(kostka_number(Partition({3}), {1, 1, 1}) == 1);
    CHECK(kostka_number(Partition({1, 1, 1}), {1, 1, 1}) == 1);
    CHECK(kostka_number(Partition({1, 1, 1}), {2, 1}) == 0);
    // K_{lambda,(1^n)} = #SYT(lambda)
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(kostka_number(p, std::vector<int>(n, 1)) == count_syt(p));
    CHECK_THROWS_AS(kostka_number(Partition({2}), {1, 1, 1}), usage_error);
}
