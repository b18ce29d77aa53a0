#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "simcore/core_space.hpp"
#include "simcore/partition.hpp"

namespace simcore {

/// (a, b, c) = (d*p*q, e*p*r, f*q*r) with p = gcd(a, b), q = gcd(a, c), r = gcd(b, c).
struct TripleDecomposition {
    int a = 0, b = 0, c = 0;
    int p = 0, q = 0, r = 0;
    int d = 0, e = 0, f = 0;

    friend bool operator==(const TripleDecomposition&, const TripleDecomposition&) = default;
};

/// Throws GcdNotOne when gcd(a, b, c) > 1, InvalidGenerators on non-positive input.
TripleDecomposition decompose(int a, int b, int c);

/// One coordinate lies in the numerical semigroup generated by the other two.
bool is_aprimitive(int d, int e, int f);

struct MaximalElementPair {
    long long s = 0;  // (m - 1)d + (n - 1)e - f, a candidate in P(d, e, f)
    long long t = 0;  // (mr - 1)dpq + (nq - 1)epr - fqr, a candidate in P(a, b, c)
};

/// Raw values only. Neither side is checked for membership or maximality.
MaximalElementPair map_maximal_element(const TripleDecomposition& dec, long long m, long long n);

/// Reorders the triple so that f lies in S(d, e), preferring the largest such coordinate.
/// Returns nullopt when (d, e, f) is not aprimitive.
std::optional<TripleDecomposition> aprimitive_relabeling(const TripleDecomposition& dec);

/// (de + f)pqr - a - b - c for a decomposition with f in S(d, e).
long long kappa_formula_top(const TripleDecomposition& relabeled);

/// {(de + f)pqr - ia - jb - kc > 0 : i, j, k >= 1} after relabeling. Throws NotAprimitive.
BetaSet kappa_um_beta(const TripleDecomposition& dec);

struct TripleReport {
    TripleDecomposition decomposition;
    std::array<int, 3> sorted{};
    bool aprimitive = false;
    bool poset_um = false;
    std::size_t maximal_count = 0;
    UMReport um_report;
    bool um = false;
    /// Present whenever a relabeling with f in S(d, e) exists.
    std::optional<BetaSet> kappa_beta;
    /// Present when um and kappa_beta are both available.
    std::optional<bool> kappa_matches;

    bool poset_um_matches_aprimitive() const noexcept { return poset_um == aprimitive; }
    bool um_implies_aprimitive() const noexcept { return !um || aprimitive; }
    bool um_implies_poset_um() const noexcept { return !um || poset_um; }
};

/// Throws GcdNotOne, DegenerateTriple (repeated coordinate) or LimitExceeded.
TripleReport classify_triple(int a, int b, int c, std::size_t limit = kDefaultLimit);

}  // namespace simcore
