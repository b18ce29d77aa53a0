#include "simcore/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "simcore/errors.hpp"

namespace simcore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InvalidPartition("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidPartition("partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

BetaSet::BetaSet(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1)
            throw NotABetaSet("beta set values must be positive");
        if (i > 0 && values_[i] == values_[i - 1])
            throw NotABetaSet("beta set values must be distinct");
    }
}

bool BetaSet::contains(int x) const {
    return std::binary_search(values_.begin(), values_.end(), x, std::greater<>());
}

std::vector<int> BetaSet::ascending() const {
    return {values_.rbegin(), values_.rend()};
}

GeneratorSet::GeneratorSet(std::vector<int> gens) : gens_(std::move(gens)) {
    if (gens_.empty())
        throw InvalidGenerators("generator set must be nonempty");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.front() < 1)
        throw InvalidGenerators("generators must be positive");
}

bool GeneratorSet::contains(int x) const {
    return std::binary_search(gens_.begin(), gens_.end(), x);
}

int GeneratorSet::gcd() const {
    int g = 0;
    for (int a : gens_) g = std::gcd(g, a);
    return g;
}

HookGrid hook_lengths(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    HookGrid grid(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        const int row = lambda[i];
        grid[i].reserve(static_cast<std::size_t>(row));
        for (int j = 0; j < row; ++j) {
            const int arm = row - j - 1;
            const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            grid[i].push_back(arm + leg + 1);
        }
    }
    return grid;
}

BetaSet beta_of(const Partition& lambda) {
    const int r = static_cast<int>(lambda.length());
    std::vector<int> values;
    values.reserve(lambda.length());
    for (int i = 0; i < r; ++i) values.push_back(lambda[static_cast<std::size_t>(i)] + r - 1 - i);
    return BetaSet(std::move(values));
}

Partition partition_of_beta(const BetaSet& beta) {
    const auto& values = beta.values();
    const int r = static_cast<int>(values.size());
    std::vector<int> parts;
    parts.reserve(values.size());
    for (int i = 0; i < r; ++i) parts.push_back(values[static_cast<std::size_t>(i)] - (r - 1 - i));
    return Partition(std::move(parts));
}

bool is_subpartition(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

bool is_core(const Partition& lambda, const GeneratorSet& gens) {
    const BetaSet beta = beta_of(lambda);
    for (int x : beta.values()) {
        for (int a : gens.values()) {
            if (a > x) break;
            if (!beta.contains(x - a)) return false;
        }
    }
    return true;
}

bool is_core_by_hooks(const Partition& lambda, const GeneratorSet& gens) {
    for (const auto& row : hook_lengths(lambda))
        for (int h : row)
            if (gens.contains(h)) return false;
    return true;
}

std::string to_string(const Partition& lambda) {
    if (lambda.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda[i]);
    }
    return out;
}

std::string to_paren_string(const Partition& lambda) {
    return lambda.empty() ? "()" : "(" + to_string(lambda) + ")";
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size())
            throw Error("invalid integer list: '" + std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    if (text.empty() || text == "-") return {};
    return Partition(parse_int_list(text));
}

}  // namespace simcore
