#include "simcore/triples.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "simcore/errors.hpp"
#include "simcore/semigroup.hpp"

namespace simcore {

namespace {

bool in_semigroup_of(int x, int g1, int g2) {
    return NumericalSemigroup(GeneratorSet{g1, g2}).contains(x);
}

}  // namespace

TripleDecomposition decompose(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw InvalidGenerators("triple entries must be positive");
    if (std::gcd(a, std::gcd(b, c)) != 1) throw GcdNotOne(a, b, c);
    TripleDecomposition dec;
    dec.a = a;
    dec.b = b;
    dec.c = c;
    dec.p = std::gcd(a, b);
    dec.q = std::gcd(a, c);
    dec.r = std::gcd(b, c);
    dec.d = a / (dec.p * dec.q);
    dec.e = b / (dec.p * dec.r);
    dec.f = c / (dec.q * dec.r);
    return dec;
}

bool is_aprimitive(int d, int e, int f) {
    return in_semigroup_of(d, e, f) || in_semigroup_of(e, d, f) || in_semigroup_of(f, d, e);
}

MaximalElementPair map_maximal_element(const TripleDecomposition& dec, long long m, long long n) {
    MaximalElementPair out;
    out.s = (m - 1) * dec.d + (n - 1) * dec.e - dec.f;
    out.t = (m * dec.r - 1) * dec.d * dec.p * dec.q + (n * dec.q - 1) * dec.e * dec.p * dec.r -
            static_cast<long long>(dec.f) * dec.q * dec.r;
    return out;
}

std::optional<TripleDecomposition> aprimitive_relabeling(const TripleDecomposition& dec) {
    // Candidate orders with each coordinate moved to the last slot; the others keep their order.
    const std::array<std::array<int, 3>, 3> orders{{
        {dec.a, dec.b, dec.c},
        {dec.a, dec.c, dec.b},
        {dec.b, dec.c, dec.a},
    }};
    std::optional<TripleDecomposition> best;
    for (const auto& order : orders) {
        const TripleDecomposition candidate = decompose(order[0], order[1], order[2]);
        if (!in_semigroup_of(candidate.f, candidate.d, candidate.e)) continue;
        if (!best || candidate.f > best->f) best = candidate;
    }
    return best;
}

long long kappa_formula_top(const TripleDecomposition& relabeled) {
    const auto& x = relabeled;
    return (static_cast<long long>(x.d) * x.e + x.f) * x.p * x.q * x.r - x.a - x.b - x.c;
}

BetaSet kappa_um_beta(const TripleDecomposition& dec) {
    const auto relabeled = aprimitive_relabeling(dec);
    if (!relabeled)
        throw NotAprimitive("(" + std::to_string(dec.d) + "," + std::to_string(dec.e) + "," +
                            std::to_string(dec.f) + ") is not aprimitive");
    const auto& x = *relabeled;
    // Start from the largest value, (de + f)pqr - a - b - c, and subtract further generators.
    const long long top = kappa_formula_top(x);
    std::set<int> values;
    for (long long i = 0; top - i * x.a > 0; ++i)
        for (long long j = 0; top - i * x.a - j * x.b > 0; ++j)
            for (long long k = 0; top - i * x.a - j * x.b - k * x.c > 0; ++k)
                values.insert(static_cast<int>(top - i * x.a - j * x.b - k * x.c));
    return BetaSet(std::vector<int>(values.begin(), values.end()));
}

TripleReport classify_triple(int a, int b, int c, std::size_t limit) {
    if (a == b || a == c || b == c)
        throw DegenerateTriple("triple has a repeated coordinate");
    TripleReport report;
    report.decomposition = decompose(a, b, c);
    report.sorted = {a, b, c};
    std::sort(report.sorted.begin(), report.sorted.end());
    const auto& dec = report.decomposition;
    report.aprimitive = is_aprimitive(dec.d, dec.e, dec.f);

    const GeneratorSet gens{a, b, c};
    const GapPoset poset = build_poset(build_semigroup(gens));
    report.poset_um = is_poset_um(poset);
    report.maximal_count = poset.maximal().size();

    report.um_report = check_um(gens, limit);
    report.um = report.um_report.is_um;

    if (report.aprimitive) {
        report.kappa_beta = kappa_um_beta(dec);
        if (report.um) report.kappa_matches = (*report.kappa_beta == beta_of(*report.um_report.kappa));
    }
    return report;
}

}  // namespace simcore
