#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "simcore/core_space.hpp"
#include "simcore/errors.hpp"

using namespace simcore;

namespace {

// Pascal's triangle, independent of the multiplicative formula in the library.
BigInt pascal_binomial(int n, int k) {
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next(row.size() + 1, 0);
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (j < row.size()) next[j] += row[j];
            if (j > 0) next[j] += row[j - 1];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

// All A-cores of size <= max_size, found without beta sets or posets. Rows are added on
// top of an existing partition; the hooks of a new top row depend only on the rows below
// it, so every intermediate shape must already avoid A.
std::vector<Partition> cores_by_hook_search(const GeneratorSet& gens, int max_size) {
    std::vector<Partition> out;
    std::vector<int> rows_bottom_up;  // rows_bottom_up.back() is the current top row
    std::function<void(int)> grow = [&](int size) {
        std::vector<int> parts(rows_bottom_up.rbegin(), rows_bottom_up.rend());
        const Partition lambda(parts);
        REQUIRE(is_core_by_hooks(lambda, gens));
        out.push_back(lambda);
        const int min_part = rows_bottom_up.empty() ? 1 : rows_bottom_up.back();
        for (int part = min_part; size + part <= max_size; ++part) {
            // Hooks in the new top row: arm + column height below + 1.
            bool ok = true;
            for (int j = 0; j < part && ok; ++j) {
                int below = 0;
                for (int row : rows_bottom_up)
                    if (row > j) ++below;
                if (gens.contains(part - j - 1 + below + 1)) ok = false;
            }
            if (!ok) continue;
            rows_bottom_up.push_back(part);
            grow(size + part);
            rows_bottom_up.pop_back();
        }
    };
    grow(0);
    std::sort(out.begin(), out.end(), core_order_less);
    return out;
}

std::vector<std::pair<int, int>> coprime_pairs(int max_sum) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; 2 * a + 1 <= max_sum; ++a)
        for (int b = a + 1; a + b <= max_sum; ++b)
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    return out;
}

}  // namespace

TEST_CASE("cores of (3,5)") {
    const auto e = enumerate_cores({3, 5});
    const std::vector<Partition> expected{{}, {1}, {2}, {1, 1}, {3, 1}, {2, 1, 1}, {4, 2, 1, 1}};
    CHECK(e.cores == expected);
    for (const auto& core : e.cores) CHECK(is_core_by_hooks(core, {3, 5}));
}

TEST_CASE("cores of trivial and antichain posets") {
    CHECK(enumerate_cores({1}).cores == std::vector<Partition>{Partition{}});
    const std::vector<Partition> expected{{}, {1}, {2}, {1, 1}};
    CHECK(enumerate_cores({3, 4, 5}).cores == expected);
    CHECK_THROWS_AS(enumerate_cores({4, 6}), InfiniteGapSet);
    CHECK_THROWS_AS(enumerate_cores({7, 9}, 100), LimitExceeded);
}

TEST_CASE("kappa_prime") {
    CHECK(kappa_prime({3, 7}) == Partition{6, 4, 2, 2, 1, 1});
    CHECK(kappa_prime({1}) == Partition{});

    const Partition k456 = kappa_prime({4, 5, 6});
    CHECK(k456 == Partition{4, 1, 1, 1});
    CHECK(is_core_by_hooks(k456, {4, 5, 6}));
    // The other candidate has a top-left hook of 6.
    CHECK_FALSE(is_core_by_hooks(Partition{3, 1, 1, 1}, {4, 5, 6}));
    CHECK(hook_lengths(Partition{3, 1, 1, 1})[0][0] == 6);
}

TEST_CASE("check_um examples") {
    const UMReport r35 = check_um({3, 5});
    CHECK(r35.is_um);
    CHECK(r35.kappa == Partition{4, 2, 1, 1});
    CHECK_FALSE(r35.witnesses);
    CHECK(r35.core_count == 7);

    const UMReport r345 = check_um({3, 4, 5});
    CHECK_FALSE(r345.is_um);
    REQUIRE(r345.witnesses);
    CHECK(r345.witnesses->first == Partition{2});
    CHECK(r345.witnesses->second == Partition{1, 1});
    CHECK_FALSE(r345.kappa);

    const UMReport r456 = check_um({4, 5, 6});
    CHECK_FALSE(r456.is_um);
    CHECK(r456.poset_um);
    REQUIRE(r456.witnesses);
    CHECK(r456.witnesses->first == Partition{2, 2});
    CHECK(r456.witnesses->second == Partition{4, 1, 1, 1});
    CHECK_FALSE(is_subpartition(r456.witnesses->first, r456.witnesses->second));
}

TEST_CASE("kappa_two_formula") {
    CHECK(kappa_two_formula(3, 7) == Partition{6, 4, 2, 2, 1, 1});
    CHECK(kappa_two_formula(1, 5) == Partition{});
    CHECK(kappa_two_formula(3, 5) == Partition{4, 2, 1, 1});
    CHECK_THROWS_AS(kappa_two_formula(4, 6), NotCoprime);
}

TEST_CASE("anderson_count") {
    CHECK(anderson_count(3, 5) == 7);
    CHECK(anderson_count(1, 2) == 1);
    const BigInt oracle = pascal_binomial(19, 9) / 19;
    CHECK(oracle == 4862);
    CHECK(anderson_count(9, 10) == oracle);
    CHECK(anderson_count(10, 9) == oracle);
    CHECK_THROWS_AS(anderson_count(6, 9), NotCoprime);
    for (const auto& [a, b] : coprime_pairs(40)) REQUIRE(anderson_count(a, b) == pascal_binomial(a + b, a) / (a + b));
    // Beyond 64 bits.
    CHECK(anderson_count(50, 51) == pascal_binomial(101, 50) / 101);
}

TEST_CASE("max_size_two") {
    CHECK(max_size_two(3, 7) == 16);
    CHECK(Partition({6, 4, 2, 2, 1, 1}).size() == 16);
    CHECK(max_size_two(1, 9) == 0);
    CHECK(max_size_two(3, 5) == 8);
    CHECK_THROWS_AS(max_size_two(2, 4), NotCoprime);
    for (const auto& [a, b] : coprime_pairs(60)) {
        const BigInt product = (BigInt(a) * a - 1) * (BigInt(b) * b - 1);
        REQUIRE(product % 24 == 0);
    }
}

TEST_CASE("bijection against an independent hook search") {
    for (const auto& [a, b] : coprime_pairs(14)) {
        const int bound = static_cast<int>(max_size_two(a, b));
        const auto expected = cores_by_hook_search({a, b}, bound);
        const auto enumerated = enumerate_cores({a, b}).cores;
        REQUIRE(enumerated == expected);
    }
    // Three generators, with a generous size bound.
    for (const auto& gens : {GeneratorSet{3, 7, 11}, GeneratorSet{4, 5, 6}, GeneratorSet{5, 7, 9}}) {
        const auto enumerated = enumerate_cores(gens).cores;
        const int largest = enumerated.back().size();
        REQUIRE(cores_by_hook_search(gens, largest + 10) == enumerated);
    }
}

TEST_CASE("two-generator counts, maximum and containment") {
    for (const auto& [a, b] : coprime_pairs(16)) {
        const auto cores = enumerate_cores({a, b}).cores;
        REQUIRE(BigInt(cores.size()) == anderson_count(a, b));

        const Partition kappa = kappa_two_formula(a, b);
        int best = -1;
        int at_best = 0;
        for (const auto& core : cores) {
            if (core.size() > best) {
                best = core.size();
                at_best = 0;
            }
            if (core.size() == best) ++at_best;
        }
        REQUIRE(BigInt(best) == max_size_two(a, b));
        REQUIRE(at_best == 1);
        REQUIRE(cores.back() == kappa);

        if (a + b <= 14)
            for (const auto& core : cores) REQUIRE(is_subpartition(core, kappa));
    }
}

TEST_CASE("UM sets have a poset-UM gap poset and kappa equal to kappa_prime") {
    for (int a = 1; a <= 9; ++a)
        for (int b = a + 1; b <= 10; ++b)
            for (int c = b + 1; c <= 11; ++c) {
                if (std::gcd(a, std::gcd(b, c)) != 1) continue;
                const UMReport r = check_um({a, b, c});
                if (r.is_um) {
                    REQUIRE(r.poset_um);
                    REQUIRE(r.kappa == r.kappa_prime);
                } else {
                    REQUIRE(r.witnesses);
                    REQUIRE_FALSE(is_subpartition(r.witnesses->first, r.witnesses->second));
                    REQUIRE_FALSE(is_subpartition(r.witnesses->second, r.witnesses->first));
                }
            }
}

TEST_CASE("check_um agrees with an all-pairs containment search") {
    for (const auto& gens : {GeneratorSet{3, 5}, GeneratorSet{3, 4, 5}, GeneratorSet{4, 5, 6}, GeneratorSet{3, 5, 8},
                             GeneratorSet{5, 6, 7}, GeneratorSet{4, 6, 9}, GeneratorSet{3, 7, 11}}) {
        const auto cores = enumerate_cores(gens).cores;
        bool some_contains_all = false;
        for (const auto& candidate : cores)
            if (std::all_of(cores.begin(), cores.end(), [&](const Partition& x) { return is_subpartition(x, candidate); }))
                some_contains_all = true;
        REQUIRE(check_um(gens).is_um == some_contains_all);
    }
}
