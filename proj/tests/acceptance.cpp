// Acceptance gate: one line per criterion, exit code 0 only if all pass.
#include <cstdio>
#include <string>
#include <vector>

#include "simcore/verify.hpp"

using namespace simcore;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::string suite;
    double max_seconds;
};

bool has_note(const VerifyReport& report, const std::string& needle) {
    for (const auto& note : report.notes)
        if (note.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "figure reproduction (hook grids, Hasse edges)", "figures", 1},
        {2, "enumerated |C(a,b)| equals binom(a+b,a)/(a+b), a+b <= 16", "anderson", 30},
        {3, "max core size (a^2-1)(b^2-1)/24, unique, formula beta set", "maxsize", 30},
        {4, "every (a,b)-core lies in kappa_{a,b}, a+b <= 14", "vandehey", 20},
        {5, "pairwise coprime a<b<c<=13: UM iff c in S(a,b)", "cor14", 60},
        {6, "coordinates <= 20, <= 10^6 ideals: UM implies (d,e,f) aprimitive", "thm13", 120},
        {7, "UM implies poset-UM; (4,5,6) poset-UM but not UM; kappa' note", "prop24", 5},
        {8, "coordinates <= 30: poset-UM iff (d,e,f) aprimitive", "cor28", 30},
        {9, "UM triples: formula beta set = gaps = beta of maximum core", "thm15", 30},
        {10, "maximal-element correspondence (f not in S(d,e)); (4,6,9) degenerate", "prop25", 30},
        {11, "(2k+1,2k+2,2k+3) not UM for k in [1,4]", "yzz", 10},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        clear_sweep_cache();
        const VerifyReport report = run_suite(c.suite);
        bool ok = report.passed() && report.elapsed_seconds < c.max_seconds;
        std::string detail;
        if (c.id == 7 && !has_note(report, "kappa-prime-4-5-6")) {
            ok = false;
            detail = " missing kappa' note;";
        }
        if (c.id == 10 && !has_note(report, "(4,6,9) m=")) {
            ok = false;
            detail = " no (4,6,9) degenerate instance;";
        }
        std::printf("[%s] criterion %2d: %s (suite %s: %zu cases, %zu failures, %zu skipped, %.2f s < %.0f s)%s\n",
                    ok ? "PASS" : "FAIL", c.id, c.title.c_str(), c.suite.c_str(), report.cases,
                    report.failures.size(), report.skipped, report.elapsed_seconds, c.max_seconds, detail.c_str());
        for (const auto& f : report.failures)
            std::printf("    failure %s: expected %s, actual %s\n", f.input.c_str(), f.expected.c_str(),
                        f.actual.c_str());
        if (!ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
