#include "simcore/core_space.hpp"

#include <algorithm>
#include <numeric>

#include "simcore/errors.hpp"

namespace simcore {

namespace {

void require_coprime(int a, int b) {
    if (a < 1 || b < 1) throw InvalidGenerators("generators must be positive");
    if (std::gcd(a, b) != 1) throw NotCoprime(a, b);
}

Partition partition_from_ascending(std::span<const int> members) {
    const int r = static_cast<int>(members.size());
    std::vector<int> parts;
    parts.reserve(members.size());
    for (int i = 0; i < r; ++i) parts.push_back(members[static_cast<std::size_t>(r - 1 - i)] - (r - 1 - i));
    return Partition(std::move(parts));
}

}  // namespace

bool core_order_less(const Partition& lhs, const Partition& rhs) {
    const int ls = lhs.size();
    const int rs = rhs.size();
    if (ls != rs) return ls < rs;
    return rhs.parts() < lhs.parts();
}

CoreEnumeration enumerate_cores(const GeneratorSet& gens, std::size_t limit) {
    CoreEnumeration out{gens, build_poset(build_semigroup(gens)), {}};
    for_each_order_ideal(out.poset, limit,
                         [&](std::span<const int> members) { out.cores.push_back(partition_from_ascending(members)); });
    std::sort(out.cores.begin(), out.cores.end(), core_order_less);
    return out;
}

Partition kappa_prime(const GeneratorSet& gens) {
    const NumericalSemigroup semigroup = build_semigroup(gens);
    return partition_from_ascending(semigroup.gaps());
}

UMReport check_um(const GeneratorSet& gens, std::size_t limit) {
    const GapPoset poset = build_poset(build_semigroup(gens));
    const auto& gaps = poset.elements();
    const std::size_t s = gaps.size();

    UMReport report;
    report.kappa_prime = partition_from_ascending(gaps);
    report.poset_um = is_poset_um(poset);

    std::optional<Partition> first_outside;
    for_each_order_ideal(poset, limit, [&](std::span<const int> members) {
        ++report.core_count;
        // With both beta sets read descending, lambda_i <= kappa'_i iff beta_i + (s - r) <= gap_i.
        const std::size_t r = members.size();
        bool contained = true;
        for (std::size_t i = 0; i < r; ++i) {
            if (members[r - 1 - i] + static_cast<int>(s - r) > gaps[s - 1 - i]) {
                contained = false;
                break;
            }
        }
        if (contained) return;
        Partition lambda = partition_from_ascending(members);
        if (!first_outside || core_order_less(lambda, *first_outside)) first_outside = std::move(lambda);
    });

    report.is_um = !first_outside;
    if (report.is_um)
        report.kappa = report.kappa_prime;
    else
        report.witnesses.emplace(std::move(*first_outside), report.kappa_prime);
    return report;
}

Partition kappa_two_formula(int a, int b) {
    require_coprime(a, b);
    const long long top = static_cast<long long>(a) * b;
    std::vector<int> values;
    for (long long i = 1; top - i * a - b > 0; ++i)
        for (long long j = 1; top - i * a - j * b > 0; ++j)
            values.push_back(static_cast<int>(top - i * a - j * b));
    return partition_of_beta(BetaSet(std::move(values)));
}

BigInt anderson_count(int a, int b) {
    require_coprime(a, b);
    const int n = a + b;
    const int k = std::min(a, b);
    BigInt binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
    return binom / n;
}

BigInt max_size_two(int a, int b) {
    require_coprime(a, b);
    const BigInt ab = (BigInt(a) * a - 1) * (BigInt(b) * b - 1);
    return ab / 24;
}

}  // namespace simcore
