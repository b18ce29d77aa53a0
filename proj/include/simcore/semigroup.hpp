#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "simcore/partition.hpp"

namespace simcore {

/// Default cap on the number of order ideals (equivalently, cores) produced by an enumeration.
inline constexpr std::size_t kDefaultLimit = 1'000'000;

/// The numerical semigroup S(A) of nonnegative integer combinations of the generators.
///
/// Membership is decided by a sieve over the generators divided by their gcd. The sieve grows
/// until min(A)/gcd consecutive members appear, after which every larger value is a member,
/// so membership is answerable for any n without growing the table after construction.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(GeneratorSet gens);

    const GeneratorSet& generators() const noexcept { return gens_; }
    int gcd() const noexcept { return gcd_; }
    bool has_finite_gaps() const noexcept { return gcd_ == 1; }

    /// Negative n is never a member.
    bool contains(long long n) const;

    /// Sorted ascending. Throws InfiniteGapSet when gcd > 1.
    const std::vector<int>& gaps() const;
    /// Largest gap, or -1 when there are none. Throws InfiniteGapSet when gcd > 1.
    int frobenius() const;

    /// Generators that are not sums of other generators.
    std::vector<int> minimal_generators() const;

    /// Membership table over [0, sieve_bound()) for the gcd-reduced generators.
    const std::vector<char>& reduced_sieve() const noexcept { return sieve_; }

private:
    GeneratorSet gens_;
    int gcd_;
    std::vector<char> sieve_;
    std::vector<int> gaps_;
};

/// A downward-closed subset of a gap poset; members sorted ascending.
struct OrderIdeal {
    std::vector<int> members;

    friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

/// The gaps of S(A), ordered by x <= y iff y - x lies in S(A).
class GapPoset {
public:
    /// Throws InfiniteGapSet when the generators are not coprime.
    explicit GapPoset(NumericalSemigroup semigroup);

    const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
    const std::vector<int>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    std::optional<std::size_t> index_of(int value) const;
    /// Order on element indices.
    bool leq_index(std::size_t i, std::size_t j) const { return leq_[i * elements_.size() + j] != 0; }
    /// Order on values; both must be elements.
    bool leq(int x, int y) const;

    /// Cover pairs (upper, lower) sorted by (upper, lower).
    const std::vector<std::pair<int, int>>& hasse_edges() const noexcept { return hasse_edges_; }
    /// Indices of the elements covered by element i.
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_covers_[i]; }
    /// Sorted ascending.
    const std::vector<int>& maximal() const noexcept { return maximal_; }

private:
    NumericalSemigroup semigroup_;
    std::vector<int> elements_;
    std::vector<char> leq_;
    std::vector<std::pair<int, int>> hasse_edges_;
    std::vector<std::vector<std::size_t>> lower_covers_;
    std::vector<int> maximal_;
};

NumericalSemigroup build_semigroup(const GeneratorSet& gens);
/// Throws InfiniteGapSet when gcd > 1.
GapPoset build_poset(const NumericalSemigroup& semigroup);

/// At most one maximal element; the empty poset counts.
bool is_poset_um(const GapPoset& poset);

/// Throws NotInPoset if a member is not a gap.
bool is_order_ideal(const GapPoset& poset, std::span<const int> members);

/// Receives the members of each ideal, ascending.
using IdealVisitor = std::function<void(std::span<const int>)>;

/// Visits every order ideal exactly once in depth-first order (no ordering guarantee beyond
/// determinism). Throws LimitExceeded when the count passes `limit`.
void for_each_order_ideal(const GapPoset& poset, std::size_t limit, const IdealVisitor& visit);

/// Counts order ideals; throws LimitExceeded when the count passes `limit`.
std::size_t count_order_ideals(const GapPoset& poset, std::size_t limit = kDefaultLimit);

/// Streams every order ideal ordered by cardinality, then lexicographically on the ascending
/// members. The count is checked against `limit` before the first ideal is emitted.
void enumerate_order_ideals(const GapPoset& poset, std::size_t limit,
                            const std::function<void(const OrderIdeal&)>& visit);
std::vector<OrderIdeal> enumerate_order_ideals(const GapPoset& poset,
                                               std::size_t limit = kDefaultLimit);

}  // namespace simcore
