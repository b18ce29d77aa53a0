#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "partition_generators.hpp"
#include "simcore/errors.hpp"
#include "simcore/partition.hpp"

using namespace simcore;
using simcore::testing::partitions_up_to;

TEST_CASE("partition validation") {
    CHECK_NOTHROW(Partition{});
    CHECK_NOTHROW(Partition{3, 3, 1});
    CHECK_THROWS_AS(Partition({1, 2}), InvalidPartition);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidPartition);

    const Partition lambda{6, 4, 2, 2, 1, 1};
    CHECK(lambda.size() == 16);
    CHECK(lambda.length() == 6);
}

TEST_CASE("hook lengths reproduce the two drawn diagrams") {
    const HookGrid expected{{11, 8, 5, 4, 2, 1}, {8, 5, 2, 1}, {5, 2}, {4, 1}, {2}, {1}};
    CHECK(hook_lengths(Partition{6, 4, 2, 2, 1, 1}) == expected);

    const HookGrid small = hook_lengths(Partition{5, 3, 1, 1});
    CHECK(small == HookGrid{{8, 5, 4, 2, 1}, {5, 2, 1}, {2}, {1}});

    std::vector<int> first_column;
    for (const auto& row : small) first_column.push_back(row.front());
    CHECK(first_column == std::vector<int>{8, 5, 2, 1});

    CHECK(hook_lengths(Partition{}).empty());
}

TEST_CASE("beta_of") {
    CHECK(beta_of(Partition{5, 3, 1, 1}) == BetaSet{8, 5, 2, 1});
    CHECK(beta_of(Partition{6, 4, 2, 2, 1, 1}) == BetaSet{11, 8, 5, 4, 2, 1});
    CHECK(beta_of(Partition{}).empty());
}

TEST_CASE("partition_of_beta") {
    CHECK(partition_of_beta(BetaSet{11, 8, 5, 4, 2, 1}) == Partition{6, 4, 2, 2, 1, 1});
    CHECK(partition_of_beta(BetaSet{}) == Partition{});

    // lambda_i = beta_i - (r - i): 7-3, 3-2, 2-1, 1-0.
    const Partition lambda = partition_of_beta(BetaSet{7, 3, 2, 1});
    CHECK(lambda == Partition{4, 1, 1, 1});
    CHECK(beta_of(lambda) == BetaSet{7, 3, 2, 1});

    CHECK_THROWS_AS(BetaSet({3, 3, 1}), NotABetaSet);
    CHECK_THROWS_AS(BetaSet({2, 0}), NotABetaSet);
    CHECK_THROWS_AS(BetaSet({4, -1}), NotABetaSet);
}

TEST_CASE("is_subpartition") {
    CHECK(is_subpartition(Partition{2, 1, 1}, Partition{4, 2, 1, 1}));
    CHECK_FALSE(is_subpartition(Partition{2, 2}, Partition{4, 1, 1, 1}));
    CHECK(is_subpartition(Partition{}, Partition{}));
    CHECK_FALSE(is_subpartition(Partition{1, 1, 1}, Partition{5, 5}));
}

TEST_CASE("is_core examples") {
    const Partition kappa37{6, 4, 2, 2, 1, 1};
    const Partition small{5, 3, 1, 1};
    CHECK(is_core(kappa37, {3, 7}));
    CHECK(is_core_by_hooks(kappa37, {3, 7}));
    CHECK_FALSE(is_core(kappa37, {3, 7, 11}));
    CHECK_FALSE(is_core_by_hooks(kappa37, {3, 7, 11}));
    CHECK(is_core(small, {3, 7, 11}));
    CHECK(is_core_by_hooks(small, {3, 7, 11}));

    // A generator equal to a first-column hook.
    CHECK_FALSE(is_core(Partition{1}, {1}));
    CHECK(is_core(Partition{}, {1}));
}

TEST_CASE("generator sets are sorted and deduplicated") {
    const GeneratorSet gens{7, 3, 7, 11};
    CHECK(gens.values() == std::vector<int>{3, 7, 11});
    CHECK(gens.gcd() == 1);
    CHECK(GeneratorSet{4, 6}.gcd() == 2);
    CHECK_THROWS_AS(GeneratorSet(std::vector<int>{}), InvalidGenerators);
    CHECK_THROWS_AS(GeneratorSet({0, 3}), InvalidGenerators);
}

TEST_CASE("text round trip") {
    CHECK(to_string(Partition{6, 4, 2, 2, 1, 1}) == "6,4,2,2,1,1");
    CHECK(to_string(Partition{}) == "-");
    CHECK(to_paren_string(Partition{}) == "()");
    CHECK(parse_partition("-") == Partition{});
    CHECK(parse_partition("5,3,1,1") == Partition{5, 3, 1, 1});
    CHECK_THROWS_AS(parse_partition("5,,1"), Error);
    CHECK_THROWS_AS(parse_partition("5,x"), Error);
    CHECK_THROWS_AS(parse_partition("1,2"), InvalidPartition);
    for (const auto& lambda : partitions_up_to(8)) CHECK(parse_partition(to_string(lambda)) == lambda);
}

TEST_CASE("beta round trip and length preservation up to size 30") {
    std::size_t checked = 0;
    for (const auto& lambda : partitions_up_to(30)) {
        const BetaSet beta = beta_of(lambda);
        REQUIRE(partition_of_beta(beta) == lambda);
        REQUIRE(beta.size() == lambda.length());
        ++checked;
    }
    CHECK(checked == 28629);  // sum of p(n) for n <= 30
}

TEST_CASE("conjugation is an involution") {
    for (const auto& lambda : partitions_up_to(16)) {
        REQUIRE(lambda.conjugate().conjugate() == lambda);
        REQUIRE(lambda.conjugate().size() == lambda.size());
    }
}

TEST_CASE("hook scan and beta test agree") {
    std::vector<GeneratorSet> sets;
    for (int a = 1; a <= 12; ++a) {
        sets.push_back({a});
        for (int b = a + 1; b <= 12; ++b) {
            sets.push_back({a, b});
            for (int c = b + 1; c <= 12; ++c) sets.push_back({a, b, c});
        }
    }
    REQUIRE(sets.size() == 12 + 66 + 220);
    for (const auto& lambda : partitions_up_to(20))
        for (const auto& gens : sets)
            REQUIRE(is_core(lambda, gens) == is_core_by_hooks(lambda, gens));
}

TEST_CASE("subpartition order is a partial order") {
    const auto sample = partitions_up_to(7);
    for (const auto& x : sample) {
        REQUIRE(is_subpartition(x, x));
        for (const auto& y : sample) {
            if (is_subpartition(x, y) && is_subpartition(y, x)) REQUIRE(x == y);
            if (!is_subpartition(x, y)) continue;
            for (const auto& z : sample)
                if (is_subpartition(y, z)) REQUIRE(is_subpartition(x, z));
        }
    }
}
