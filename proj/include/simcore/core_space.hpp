#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simcore/partition.hpp"
#include "simcore/semigroup.hpp"

namespace simcore {

using BigInt = boost::multiprecision::cpp_int;

/// All A-cores, obtained from the order ideals of P(A).
struct CoreEnumeration {
    GeneratorSet gens;
    GapPoset poset;
    /// Sorted by size, then lexicographically descending. Includes the empty partition.
    std::vector<Partition> cores;
};

struct UMReport {
    bool is_um = false;
    /// The unique maximal core, present iff is_um.
    std::optional<Partition> kappa;
    /// (first core not contained in kappa_prime, kappa_prime), present iff !is_um.
    std::optional<std::pair<Partition, Partition>> witnesses;
    /// The core whose beta set is all of P(A).
    Partition kappa_prime;
    bool poset_um = false;
    std::size_t core_count = 0;
};

/// Core order: smaller size first, then lexicographically larger parts first.
bool core_order_less(const Partition& lhs, const Partition& rhs);

/// Throws InfiniteGapSet or LimitExceeded.
CoreEnumeration enumerate_cores(const GeneratorSet& gens, std::size_t limit = kDefaultLimit);

Partition kappa_prime(const GeneratorSet& gens);

/// Exact UM verdict. Only containment in kappa_prime is tested: the longest core is unique,
/// so it is the only possible maximum.
UMReport check_um(const GeneratorSet& gens, std::size_t limit = kDefaultLimit);

/// The (a, b)-core with beta set {ab - ia - jb > 0 : i, j >= 1}. Throws NotCoprime.
Partition kappa_two_formula(int a, int b);

/// binom(a + b, a) / (a + b). Throws NotCoprime.
BigInt anderson_count(int a, int b);

/// (a^2 - 1)(b^2 - 1) / 24. Throws NotCoprime.
BigInt max_size_two(int a, int b);

}  // namespace simcore
