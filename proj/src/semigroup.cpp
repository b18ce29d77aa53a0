#include "simcore/semigroup.hpp"

#include <algorithm>

#include "simcore/errors.hpp"

namespace simcore {

NumericalSemigroup::NumericalSemigroup(GeneratorSet gens) : gens_(std::move(gens)), gcd_(gens_.gcd()) {
    std::vector<int> reduced;
    reduced.reserve(gens_.size());
    for (int a : gens_.values()) reduced.push_back(a / gcd_);

    // Once min(reduced) consecutive members are seen, every larger integer is a member.
    const int run_needed = reduced.front();
    sieve_.push_back(1);
    int run = 1;
    for (int n = 1; run < run_needed; ++n) {
        bool member = false;
        for (int a : reduced) {
            if (a > n) break;
            if (sieve_[static_cast<std::size_t>(n - a)]) {
                member = true;
                break;
            }
        }
        sieve_.push_back(member ? 1 : 0);
        run = member ? run + 1 : 0;
    }

    if (gcd_ == 1) {
        for (std::size_t n = 0; n < sieve_.size(); ++n)
            if (!sieve_[n]) gaps_.push_back(static_cast<int>(n));
    }
}

bool NumericalSemigroup::contains(long long n) const {
    if (n < 0) return false;
    if (n % gcd_ != 0) return false;
    const auto m = static_cast<unsigned long long>(n / gcd_);
    return m >= sieve_.size() || sieve_[m] != 0;
}

const std::vector<int>& NumericalSemigroup::gaps() const {
    if (gcd_ != 1) throw InfiniteGapSet(gcd_);
    return gaps_;
}

int NumericalSemigroup::frobenius() const {
    const auto& g = gaps();
    return g.empty() ? -1 : g.back();
}

std::vector<int> NumericalSemigroup::minimal_generators() const {
    std::vector<int> out;
    const auto& gens = gens_.values();
    for (int a : gens) {
        bool decomposable = false;
        for (int b : gens) {
            if (b >= a) break;
            if (contains(a - b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(a);
    }
    return out;
}

GapPoset::GapPoset(NumericalSemigroup semigroup)
    : semigroup_(std::move(semigroup)), elements_(semigroup_.gaps()) {
    const std::size_t n = elements_.size();
    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        leq_[i * n + i] = 1;
        for (std::size_t j = i + 1; j < n; ++j)
            if (semigroup_.contains(elements_[j] - elements_[i])) leq_[i * n + j] = 1;
    }

    // y covers x exactly when y - x is a minimal generator: any other difference in S splits
    // as t + u with x + t forced to be a gap strictly between x and y.
    const std::vector<int> atoms = semigroup_.minimal_generators();
    lower_covers_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (int atom : atoms) {
            const int lower = elements_[j] - atom;
            if (lower < 1) break;
            if (auto i = index_of(lower)) {
                lower_covers_[j].push_back(*i);
                hasse_edges_.emplace_back(elements_[j], lower);
            }
        }
        std::sort(lower_covers_[j].begin(), lower_covers_[j].end());
    }
    std::sort(hasse_edges_.begin(), hasse_edges_.end());

    for (int x : elements_) {
        const auto& gens = semigroup_.generators().values();
        if (std::all_of(gens.begin(), gens.end(), [&](int a) { return semigroup_.contains(x + a); }))
            maximal_.push_back(x);
    }
}

std::optional<std::size_t> GapPoset::index_of(int value) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
    if (it == elements_.end() || *it != value) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

bool GapPoset::leq(int x, int y) const {
    const auto i = index_of(x);
    if (!i) throw NotInPoset(x);
    const auto j = index_of(y);
    if (!j) throw NotInPoset(y);
    return leq_index(*i, *j);
}

NumericalSemigroup build_semigroup(const GeneratorSet& gens) {
    return NumericalSemigroup(gens);
}

GapPoset build_poset(const NumericalSemigroup& semigroup) {
    return GapPoset(semigroup);
}

bool is_poset_um(const GapPoset& poset) {
    return poset.maximal().size() <= 1;
}

bool is_order_ideal(const GapPoset& poset, std::span<const int> members) {
    std::vector<char> in(poset.size(), 0);
    for (int x : members) {
        const auto i = poset.index_of(x);
        if (!i) throw NotInPoset(x);
        in[*i] = 1;
    }
    for (std::size_t j = 0; j < poset.size(); ++j) {
        if (!in[j]) continue;
        for (std::size_t i : poset.lower_covers(j))
            if (!in[i]) return false;
    }
    return true;
}

namespace {

// Elements are processed in ascending order. Everything below an element in the poset is
// numerically smaller, so its lower covers are already decided when it is reached.
class IdealWalker {
public:
    IdealWalker(const GapPoset& poset, std::size_t limit) : poset_(poset), limit_(limit), in_(poset.size(), 0) {
        members_.reserve(poset.size());
    }

    void walk_all(const IdealVisitor& visit) { walk(0, visit, nullptr); }

    // Only ideals with exactly `target` members, in lexicographic order.
    void walk_sized(std::size_t target, const IdealVisitor& visit) { walk(0, visit, &target); }

    std::size_t count() const noexcept { return count_; }

private:
    bool can_include(std::size_t i) const {
        for (std::size_t lower : poset_.lower_covers(i))
            if (!in_[lower]) return false;
        return true;
    }

    void walk(std::size_t i, const IdealVisitor& visit, const std::size_t* target) {
        const std::size_t n = poset_.size();
        if (target) {
            if (members_.size() == *target) {
                emit(visit);
                return;
            }
            if (members_.size() + (n - i) < *target) return;
        } else if (i == n) {
            emit(visit);
            return;
        }
        if (can_include(i)) {
            in_[i] = 1;
            members_.push_back(poset_.elements()[i]);
            walk(i + 1, visit, target);
            members_.pop_back();
            in_[i] = 0;
        }
        walk(i + 1, visit, target);
    }

    void emit(const IdealVisitor& visit) {
        if (++count_ > limit_) throw LimitExceeded(limit_);
        if (visit) visit(members_);
    }

    const GapPoset& poset_;
    std::size_t limit_;
    std::size_t count_ = 0;
    std::vector<char> in_;
    std::vector<int> members_;
};

}  // namespace

void for_each_order_ideal(const GapPoset& poset, std::size_t limit, const IdealVisitor& visit) {
    IdealWalker walker(poset, limit);
    walker.walk_all(visit);
}

std::size_t count_order_ideals(const GapPoset& poset, std::size_t limit) {
    IdealWalker walker(poset, limit);
    walker.walk_all(nullptr);
    return walker.count();
}

void enumerate_order_ideals(const GapPoset& poset, std::size_t limit,
                            const std::function<void(const OrderIdeal&)>& visit) {
    count_order_ideals(poset, limit);
    IdealWalker walker(poset, limit);
    for (std::size_t k = 0; k <= poset.size(); ++k) {
        walker.walk_sized(k, [&](std::span<const int> members) {
            visit(OrderIdeal{{members.begin(), members.end()}});
        });
    }
}

std::vector<OrderIdeal> enumerate_order_ideals(const GapPoset& poset, std::size_t limit) {
    std::vector<OrderIdeal> out;
    enumerate_order_ideals(poset, limit, [&](const OrderIdeal& ideal) { out.push_back(ideal); });
    return out;
}

}  // namespace simcore
