#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace simcore {

/// A weakly decreasing sequence of positive integers. The empty partition is valid.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidPartition unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;

    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// First-column hook lengths of a partition, stored strictly decreasing.
class BetaSet {
public:
    BetaSet() = default;
    /// Accepts values in any order; throws NotABetaSet on duplicates or non-positive values.
    explicit BetaSet(std::vector<int> values);
    BetaSet(std::initializer_list<int> values) : BetaSet(std::vector<int>(values)) {}

    const std::vector<int>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    bool contains(int x) const;
    /// Values in ascending order.
    std::vector<int> ascending() const;

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<int> values_;
};

/// Nonempty set of distinct positive generators, kept sorted ascending.
class GeneratorSet {
public:
    /// Sorts and deduplicates; throws InvalidGenerators if empty or a value is < 1.
    explicit GeneratorSet(std::vector<int> gens);
    GeneratorSet(std::initializer_list<int> gens) : GeneratorSet(std::vector<int>(gens)) {}

    const std::vector<int>& values() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    int min() const noexcept { return gens_.front(); }
    int max() const noexcept { return gens_.back(); }
    bool contains(int x) const;
    int gcd() const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<int> gens_;
};

using HookGrid = std::vector<std::vector<int>>;

/// Hook length of every cell; row i has lambda_i entries.
HookGrid hook_lengths(const Partition& lambda);

BetaSet beta_of(const Partition& lambda);
Partition partition_of_beta(const BetaSet& beta);

bool is_subpartition(const Partition& mu, const Partition& lambda);

/// Beta-set test: every x in beta(lambda) with x >= a has x - a in beta(lambda).
bool is_core(const Partition& lambda, const GeneratorSet& gens);
/// Scans the full hook grid. Slower; kept as an independent check of is_core.
bool is_core_by_hooks(const Partition& lambda, const GeneratorSet& gens);

/// "6,4,2,2,1,1"; the empty partition prints as "-".
std::string to_string(const Partition& lambda);
/// "(6,4,2,2,1,1)"; the empty partition prints as "()".
std::string to_paren_string(const Partition& lambda);
/// Inverse of to_string. Accepts "-" or "" for the empty partition.
Partition parse_partition(std::string_view text);
/// Parses a comma-separated list of positive integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace simcore
