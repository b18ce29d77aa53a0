#include "simcore/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

#include "simcore/core_space.hpp"
#include "simcore/errors.hpp"
#include "simcore/format.hpp"
#include "simcore/semigroup.hpp"
#include "simcore/triples.hpp"
#include "simcore/verify.hpp"

namespace simcore::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GeneratorSet parse_gens(const std::string& text) {
    std::vector<int> values;
    try {
        values = parse_int_list(text);
    } catch (const Error& e) {
        throw UsageError(std::string("--gens: ") + e.what());
    }
    try {
        return GeneratorSet(std::move(values));
    } catch (const Error& e) {
        throw UsageError(std::string("--gens: ") + e.what());
    }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (format == f) return;
    throw UsageError("unsupported --format '" + format + "' for this command");
}

void print_json(std::ostream& out, const Json& json) {
    out << json.dump() << "\n";
}

std::string join_spaces(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

struct Options {
    std::string format = "text";
    std::size_t limit = kDefaultLimit;
    std::string partition;
    std::string gens;
    std::string triple;
    std::optional<long long> contains;
    std::string suite;
    VerifyOptions verify;
};

int cmd_core_check(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "text"});
    Partition lambda;
    try {
        lambda = parse_partition(o.partition);
    } catch (const Error& e) {
        throw UsageError(std::string("--partition: ") + e.what());
    }
    const GeneratorSet gens = parse_gens(o.gens);
    const bool core = is_core(lambda, gens);
    const BetaSet beta = beta_of(lambda);
    if (o.format == "json") {
        Json json;
        json["is_core"] = core;
        json["beta"] = to_json(beta);
        print_json(out, json);
    } else {
        out << "is_core: " << (core ? "true" : "false") << "\n";
        out << "beta: " << to_brace_string(beta) << "\n";
    }
    return kExitOk;
}

int cmd_cores(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "text"});
    const CoreEnumeration cores = enumerate_cores(parse_gens(o.gens), o.limit);
    if (o.format == "json") {
        Json json;
        json["gens"] = cores.gens.values();
        json["count"] = cores.cores.size();
        Json list = Json::array();
        for (const auto& core : cores.cores) list.push_back(to_json(core));
        json["cores"] = std::move(list);
        print_json(out, json);
    } else {
        out << "count: " << cores.cores.size() << "\n";
        for (const auto& core : cores.cores) out << to_paren_string(core) << "\n";
    }
    return kExitOk;
}

int cmd_semigroup(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "text"});
    const NumericalSemigroup semigroup = build_semigroup(parse_gens(o.gens));
    if (o.contains && *o.contains < 0) throw UsageError("--contains must be nonnegative");
    if (o.format == "json") {
        Json json = to_json(semigroup);
        if (o.contains) json["contains"] = semigroup.contains(*o.contains);
        print_json(out, json);
    } else {
        out << "gens: " << to_brace_string(semigroup.generators().values()) << "\n";
        if (semigroup.has_finite_gaps()) {
            out << "frobenius: " << semigroup.frobenius() << "\n";
            out << "gaps: " << to_brace_string(semigroup.gaps()) << "\n";
        } else {
            out << "gcd: " << semigroup.gcd() << " (infinitely many gaps)\n";
        }
        if (o.contains) out << "contains " << *o.contains << ": " << (semigroup.contains(*o.contains) ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_poset(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "text", "dot"});
    const GapPoset poset = build_poset(build_semigroup(parse_gens(o.gens)));
    if (o.format == "json") {
        print_json(out, to_json(poset));
    } else if (o.format == "dot") {
        out << emit_dot(poset);
    } else {
        out << "gaps: " << join_spaces(poset.elements()) << "\n";
        out << "maximal: " << join_spaces(poset.maximal()) << "\n";
        out << "poset-um: " << (is_poset_um(poset) ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "text"});
    std::vector<int> t;
    try {
        t = parse_int_list(o.triple);
    } catch (const Error& e) {
        throw UsageError(std::string("--triple: ") + e.what());
    }
    if (t.size() != 3) throw UsageError("--triple needs exactly three values");
    const TripleReport report = classify_triple(t[0], t[1], t[2], o.limit);
    if (o.format == "json") {
        print_json(out, to_json(report));
        return kExitOk;
    }
    const auto& dec = report.decomposition;
    const auto& um = report.um_report;
    out << "um: " << (report.um ? "true" : "false") << ", aprimitive: " << (report.aprimitive ? "true" : "false");
    if (report.um)
        out << ", kappa: " << to_paren_string(*um.kappa) << "\n";
    else
        out << ", witnesses: " << to_paren_string(um.witnesses->first) << " vs "
            << to_paren_string(um.witnesses->second) << "\n";
    out << "decomposition: p=" << dec.p << ", q=" << dec.q << ", r=" << dec.r << ", d=" << dec.d << ", e=" << dec.e
        << ", f=" << dec.f << "\n";
    out << "poset-um: " << (report.poset_um ? "true" : "false") << ", maximal elements: " << report.maximal_count
        << "\n";
    out << "cores: " << um.core_count << "\n";
    out << "kappa-prime: " << to_paren_string(um.kappa_prime) << "\n";
    if (report.kappa_beta) out << "formula beta: " << to_brace_string(*report.kappa_beta) << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    require_format(o.format, {"json", "text"});
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else if (is_suite_name(o.suite))
        names = {o.suite};
    else
        throw UsageError("unknown verify suite '" + o.suite + "'");

    bool all_passed = true;
    Json reports = Json::array();
    for (const auto& name : names) {
        const VerifyReport report = run_suite(name, o.verify);
        all_passed = all_passed && report.passed();
        err << "suite " << name << ": " << std::fixed << std::setprecision(2) << report.elapsed_seconds
            << " s (budget " << std::setprecision(0) << report.budget_seconds << " s)\n";
        if (o.format == "json")
            reports.push_back(report_json(report));
        else
            out << report_text(report) << std::flush;
    }
    if (o.format == "json") print_json(out, names.size() == 1 ? reports.front() : reports);
    return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simultaneous core partitions, numerical semigroups and gap posets", "simcore"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&](CLI::App* sub, const std::string& choices) {
        sub->add_option("--format", o.format, "Output format (" + choices + ")");
    };
    const auto add_limit = [&](CLI::App* sub) {
        sub->add_option("--limit", o.limit, "Maximum number of order ideals to enumerate")
            ->check(CLI::PositiveNumber);
    };

    auto* core_check = app.add_subcommand("core-check", "Test whether a partition is an A-core");
    core_check->add_option("--partition", o.partition, "Parts, comma separated ('-' for empty)")->required();
    core_check->add_option("--gens", o.gens, "Generators, comma separated")->required();
    add_format(core_check, "json|text");

    auto* cores = app.add_subcommand("cores", "List every A-core");
    cores->add_option("--gens", o.gens, "Generators, comma separated")->required();
    add_format(cores, "json|text");
    add_limit(cores);

    auto* semigroup = app.add_subcommand("semigroup", "Numerical semigroup gaps and Frobenius number");
    semigroup->add_option("--gens", o.gens, "Generators, comma separated")->required();
    semigroup->add_option("--contains", o.contains, "Membership query");
    add_format(semigroup, "json|text");

    auto* poset = app.add_subcommand("poset", "Gap poset: maximal elements and Hasse diagram");
    poset->add_option("--gens", o.gens, "Generators, comma separated")->required();
    add_format(poset, "json|text|dot");

    auto* classify = app.add_subcommand("classify", "Classify a triple (a,b,c)");
    classify->add_option("--triple", o.triple, "a,b,c")->required();
    add_format(classify, "json|text");
    add_limit(classify);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "Suite name or 'all'")->required();
    verify->add_option("--max-sum", o.verify.max_sum, "Bound on a + b for pair suites")->check(CLI::PositiveNumber);
    verify->add_option("--max-c", o.verify.max_c, "Largest coordinate for cor14")->check(CLI::PositiveNumber);
    verify->add_option("--max-coord", o.verify.max_coord, "Largest coordinate for triple suites")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-k", o.verify.max_k, "Largest k for yzz")->check(CLI::PositiveNumber);
    verify->add_option("--limit", o.verify.limit, "Maximum number of order ideals per set")
        ->check(CLI::PositiveNumber);
    add_format(verify, "json|text");

    std::vector<const char*> argv{"simcore"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*core_check) return cmd_core_check(o, out);
        if (*cores) return cmd_cores(o, out);
        if (*semigroup) return cmd_semigroup(o, out);
        if (*poset) return cmd_poset(o, out);
        if (*classify) return cmd_classify(o, out);
        return cmd_verify(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace simcore::cli
