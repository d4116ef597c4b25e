/*
 * corelab: cores, quotients and exhaustive verification sweeps from the
 * command line.
 *
 *   core / quotient        ell-core, ell-quotient and weight of a partition
 *   barcore / barquotient  the same for a bar-partition at an odd level
 *   reconstruct            rebuild a (bar-)partition from core and quotient
 *   verify                 theorem1 | theorem2 | corollary1 | corollary2
 *   enumerate              partitions | barpartitions | cores | barcores
 *
 * Exit codes: 0 success or verified, 1 counterexample or failed self-check,
 * 2 usage error.
 */

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corelab/bar_partition.hpp"
#include "corelab/blocks.hpp"
#include "corelab/enumeration.hpp"
#include "corelab/partition.hpp"

namespace {

using corelab::BarPartition;
using corelab::Partition;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

// A problem with the command line or its arguments.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure (exit 1).
struct SelfCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_components(const std::vector<std::string>& literals)
{
    std::string out;
    for (std::size_t i = 0; i < literals.size(); ++i) {
        if (i)
            out += " | ";
        out += literals[i];
    }
    return out;
}

template <typename Seq>
std::vector<std::string> literals_of(const Seq& items)
{
    std::vector<std::string> out;
    for (const auto& item : items)
        out.push_back(corelab::to_literal(item));
    return out;
}

struct ComputeArgs {
    std::string literal;
    int ell = 0;
    std::string format = "plain";
};

int run_core(const ComputeArgs& args)
{
    const Partition lambda = corelab::parse_partition(args.literal);
    const auto q = corelab::quotient_decomposition(lambda, args.ell);
    if (args.format == "json") {
        ordered_json doc;
        doc["input"] = corelab::to_literal(lambda);
        doc["ell"] = args.ell;
        doc["core"] = corelab::to_literal(q.core);
        doc["weight"] = q.weight;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << corelab::to_literal(q.core) << '\n' << "weight " << q.weight << '\n';
    }
    return kExitOk;
}

int run_quotient(const ComputeArgs& args)
{
    const Partition lambda = corelab::parse_partition(args.literal);
    const auto q = corelab::quotient_decomposition(lambda, args.ell);
    const auto components = literals_of(q.components);
    if (args.format == "json") {
        ordered_json doc;
        doc["input"] = corelab::to_literal(lambda);
        doc["ell"] = args.ell;
        doc["core"] = corelab::to_literal(q.core);
        doc["components"] = components;
        doc["weight"] = q.weight;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << join_components(components) << '\n'
                  << "core " << corelab::to_literal(q.core) << '\n'
                  << "weight " << q.weight << '\n';
    }
    return kExitOk;
}

int run_barcore(const ComputeArgs& args)
{
    const BarPartition lambda = corelab::parse_bar_partition(args.literal);
    const BarPartition core = corelab::bar_core(lambda, args.ell);
    const int weight = (lambda.size() - core.size()) / args.ell;
    if (args.format == "json") {
        ordered_json doc;
        doc["input"] = corelab::to_literal(lambda);
        doc["ell"] = args.ell;
        doc["core"] = corelab::to_literal(core);
        doc["weight"] = weight;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << corelab::to_literal(core) << '\n' << "weight " << weight << '\n';
    }
    return kExitOk;
}

int run_barquotient(const ComputeArgs& args)
{
    const BarPartition lambda = corelab::parse_bar_partition(args.literal);
    const auto q = corelab::bar_quotient(lambda, args.ell);
    const auto components = literals_of(q.components);
    if (args.format == "json") {
        ordered_json doc;
        doc["input"] = corelab::to_literal(lambda);
        doc["ell"] = args.ell;
        doc["core"] = corelab::to_literal(q.core);
        doc["component0"] = corelab::to_literal(q.component0);
        doc["components"] = components;
        doc["weight"] = q.weight;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::vector<std::string> all{corelab::to_literal(q.component0)};
        all.insert(all.end(), components.begin(), components.end());
        std::cout << join_components(all) << '\n'
                  << "core " << corelab::to_literal(q.core) << '\n'
                  << "weight " << q.weight << '\n';
    }
    return kExitOk;
}

struct ReconstructArgs {
    int ell = 0;
    bool bar = false;
    std::string core;
    std::optional<std::string> component0;
    std::vector<std::string> components;
    std::string format = "plain";
};

int run_reconstruct(const ReconstructArgs& args)
{
    std::vector<Partition> components;
    for (const auto& c : args.components)
        components.push_back(corelab::parse_partition(c));

    std::string result;
    ordered_json doc;
    doc["ell"] = args.ell;
    doc["core"] = args.core;
    if (args.bar) {
        const BarPartition core = corelab::parse_bar_partition(args.core);
        const BarPartition zero = corelab::parse_bar_partition(args.component0.value_or("-"));
        const BarPartition lambda = corelab::from_bar_core_and_quotient(core, zero, components, args.ell);
        const auto back = corelab::bar_quotient(lambda, args.ell);
        if (back.core != core || back.component0 != zero || back.components != components)
            throw SelfCheckError("bar reconstruction of " + corelab::to_literal(lambda) + " does not round-trip");
        result = corelab::to_literal(lambda);
        doc["component0"] = corelab::to_literal(zero);
    } else {
        if (args.component0)
            throw UsageError("--component0 only applies with --bar");
        const Partition core = corelab::parse_partition(args.core);
        const Partition lambda = corelab::from_core_and_quotient(core, components, args.ell);
        const auto back = corelab::quotient_decomposition(lambda, args.ell);
        if (back.core != core || back.components != components)
            throw SelfCheckError("reconstruction of " + corelab::to_literal(lambda) + " does not round-trip");
        result = corelab::to_literal(lambda);
    }
    if (args.format == "json") {
        doc["components"] = literals_of(components);
        doc["result"] = result;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << result << '\n';
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string statement;
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::optional<int> s_min;
    std::optional<int> s_max;
    std::optional<int> t_min;
    std::optional<int> t_max;
    std::vector<int> levels;
    std::vector<int> s_levels;
    std::vector<int> t_levels;
    std::optional<int> s;
    std::optional<int> t;
    int a_max = 2;
    int jobs = 1;
    bool fail_fast = false;
    std::string format = "json";
};

std::vector<int> range(int lo, int hi)
{
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

std::vector<int> pick_levels(const std::vector<int>& specific, const std::vector<int>& shared,
                             std::optional<int> lo, std::optional<int> hi, std::vector<int> fallback)
{
    if (!specific.empty())
        return specific;
    if (!shared.empty())
        return shared;
    if (lo || hi) {
        const int first = lo.value_or(fallback.front());
        const int last = hi.value_or(fallback.back());
        if (first > last)
            throw UsageError("empty level range " + std::to_string(first) + ".." + std::to_string(last));
        return range(first, last);
    }
    return fallback;
}

corelab::VerificationReport run_theorem(const VerifyArgs& args, const corelab::VerifyOptions& options)
{
    if (args.s || args.t)
        throw UsageError("--s/--t apply to the corollaries; use --s-levels/--t-levels for theorems");
    const bool bar = args.statement == "theorem2";
    corelab::TheoremSweep sweep;
    sweep.n_min = args.n_min.value_or(0);
    sweep.n_max = args.n_max.value_or(bar ? 28 : 24);
    if (sweep.n_min < 0 || sweep.n_max < sweep.n_min)
        throw UsageError("invalid size range");
    const std::vector<int> fallback = bar ? std::vector<int>{3, 5, 7, 9} : range(2, 10);
    if (bar && (args.s_min || args.s_max || args.t_min || args.t_max))
        throw UsageError("theorem2 takes explicit odd levels (--levels, --s-levels, --t-levels)");
    sweep.s_levels = pick_levels(args.s_levels, args.levels, args.s_min, args.s_max, fallback);
    sweep.t_levels = pick_levels(args.t_levels, args.levels, args.t_min, args.t_max, fallback);
    for (int l : sweep.s_levels)
        if (l < 1 || (bar && l % 2 == 0))
            throw UsageError("invalid level " + std::to_string(l) + (bar ? " (theorem2 needs odd levels)" : ""));
    for (int l : sweep.t_levels)
        if (l < 1 || (bar && l % 2 == 0))
            throw UsageError("invalid level " + std::to_string(l) + (bar ? " (theorem2 needs odd levels)" : ""));
    return bar ? corelab::verify_bar_theorem(sweep, options) : corelab::verify_core_theorem(sweep, options);
}

corelab::VerificationReport run_corollary(const VerifyArgs& args, const corelab::VerifyOptions& options)
{
    const bool bar = args.statement == "corollary2";
    if (args.n_min || args.n_max || !args.levels.empty() || !args.s_levels.empty() || !args.t_levels.empty() ||
        args.s_min || args.t_min || args.t_max)
        throw UsageError("corollaries take --s, --t, --smax and --amax");
    if (args.a_max < 0)
        throw UsageError("--amax must be nonnegative");
    if (args.s.has_value() != args.t.has_value())
        throw UsageError("give both --s and --t, or neither for a sweep up to --smax");
    if (args.s) {
        if (args.s_max)
            throw UsageError("--smax is for sweeps; drop it when --s is given");
        const int s = *args.s;
        const int t = *args.t;
        if (t < 1 || s <= t)
            throw UsageError("corollary needs s > t >= 1");
        if (bar && (s % 2 == 0 || t % 2 == 0))
            throw UsageError("corollary2 needs odd s and t");
        return bar ? corelab::verify_bar_corollary(s, t, args.a_max, options)
                   : corelab::verify_corollary(s, t, args.a_max, options);
    }
    const int s_max = args.s_max.value_or(9);
    if (s_max < (bar ? 3 : 2))
        throw UsageError("--smax too small for a sweep");
    return bar ? corelab::verify_bar_corollary_sweep(s_max, args.a_max, options)
               : corelab::verify_corollary_sweep(s_max, args.a_max, options);
}

int run_verify(const VerifyArgs& args)
{
    if (args.jobs < 1)
        throw UsageError("--jobs must be at least 1");
    const corelab::VerifyOptions options{args.jobs, args.fail_fast};
    const bool theorem = args.statement == "theorem1" || args.statement == "theorem2";
    const auto report = theorem ? run_theorem(args, options) : run_corollary(args, options);
    if (args.format == "json") {
        std::cout << corelab::to_json(report) << '\n';
    } else {
        std::cout << report.verdict() << '\n'
                  << "checked " << report.checked << '\n'
                  << "counterexamples " << report.counterexamples.size() << '\n';
        for (const auto& w : report.counterexamples)
            std::cout << "  n=" << w.n << " partition=" << corelab::to_literal(w.partition) << " s=" << w.s
                      << " t=" << w.t << '\n';
    }
    return report.verified() ? kExitOk : kExitRefuted;
}

struct EnumerateArgs {
    std::string what;
    int n = 0;
    std::optional<int> t;
    bool count = false;
    std::string format = "plain";
};

int run_enumerate(const EnumerateArgs& args)
{
    if (args.n < 0)
        throw UsageError("--n must be nonnegative");
    const bool needs_t = args.what == "cores" || args.what == "barcores";
    if (needs_t && !args.t)
        throw UsageError(args.what + " needs --t");
    if (!needs_t && args.t)
        throw UsageError("--t only applies to cores and barcores");
    if (args.what == "barcores" && (*args.t < 1 || *args.t % 2 == 0))
        throw UsageError("barcores needs an odd --t");
    if (args.what == "cores" && *args.t < 1)
        throw UsageError("--t must be at least 1");

    std::vector<std::string> lines;
    if (args.what == "partitions")
        lines = literals_of(corelab::partitions_of(args.n));
    else if (args.what == "barpartitions")
        lines = literals_of(corelab::bar_partitions_of(args.n));
    else if (args.what == "cores")
        lines = literals_of(corelab::cores_of(args.n, *args.t));
    else
        lines = literals_of(corelab::bar_cores_of(args.n, *args.t));

    if (args.count) {
        std::cout << lines.size() << '\n';
    } else if (args.format == "json") {
        std::cout << ordered_json(lines).dump() << '\n';
    } else {
        for (const auto& line : lines)
            std::cout << line << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"corelab: partition cores, quotients, and block verification sweeps"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    const std::vector<std::string> compute_formats{"plain", "json"};

    ComputeArgs compute;
    auto add_compute = [&](const std::string& name, const std::string& description, bool odd) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("partition", compute.literal, odd ? "bar-partition literal, e.g. 5,3,2 or -"
                                                            : "partition literal, e.g. 4,2,1 or -")
            ->required();
        sub->add_option("--ell", compute.ell, odd ? "odd level" : "level >= 1")->required();
        sub->add_option("--format", compute.format, "plain or json")
            ->check(CLI::IsMember(compute_formats));
        return sub;
    };
    auto* core_cmd = add_compute("core", "ell-core and ell-weight of a partition", false);
    auto* quotient_cmd = add_compute("quotient", "ell-quotient of a partition", false);
    auto* barcore_cmd = add_compute("barcore", "bar-core of a bar-partition", true);
    auto* barquotient_cmd = add_compute("barquotient", "bar-quotient of a bar-partition", true);

    ReconstructArgs reconstruct;
    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild a partition from its core and quotient");
    reconstruct_cmd->add_option("--ell", reconstruct.ell, "level")->required();
    reconstruct_cmd->add_option("--core", reconstruct.core, "core literal")->required();
    reconstruct_cmd->add_option("--component", reconstruct.components,
                                "quotient component literal, repeated in order");
    reconstruct_cmd->add_option("--component0", reconstruct.component0, "bar-partition component (with --bar)");
    reconstruct_cmd->add_flag("--bar", reconstruct.bar, "reconstruct a bar-partition");
    reconstruct_cmd->add_option("--format", reconstruct.format, "plain or json")
        ->check(CLI::IsMember(compute_formats));

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustively verify a theorem or corollary");
    verify_cmd->add_option("statement", verify.statement, "theorem1, theorem2, corollary1 or corollary2")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "corollary1", "corollary2"}));
    verify_cmd->add_option("--nmin", verify.n_min, "smallest size (theorems, default 0)");
    verify_cmd->add_option("--nmax", verify.n_max, "largest size (theorems, default 24 / 28)");
    verify_cmd->add_option("--smin", verify.s_min, "smallest s (theorem1, default 2)");
    verify_cmd->add_option("--smax", verify.s_max, "largest s (theorem1 default 10; corollary sweeps default 9)");
    verify_cmd->add_option("--tmin", verify.t_min, "smallest t (theorem1, default 2)");
    verify_cmd->add_option("--tmax", verify.t_max, "largest t (theorem1, default 10)");
    verify_cmd->add_option("--levels", verify.levels, "levels used for both s and t")->delimiter(',');
    verify_cmd->add_option("--s-levels", verify.s_levels, "levels for s")->delimiter(',');
    verify_cmd->add_option("--t-levels", verify.t_levels, "levels for t")->delimiter(',');
    verify_cmd->add_option("--s", verify.s, "corollary: s");
    verify_cmd->add_option("--t", verify.t, "corollary: t");
    verify_cmd->add_option("--amax", verify.a_max, "corollary: largest a in n = a*s + r (default 2)");
    verify_cmd->add_option("--jobs,-j", verify.jobs, "worker threads (default 1)");
    verify_cmd->add_flag("--fail-fast", verify.fail_fast, "stop at the first counterexample");
    verify_cmd->add_option("--format", verify.format, "json or plain")->check(CLI::IsMember(compute_formats));

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list partitions, bar-partitions or cores of n");
    enumerate_cmd->add_option("kind", enumerate.what, "partitions, barpartitions, cores or barcores")
        ->required()
        ->check(CLI::IsMember({"partitions", "barpartitions", "cores", "barcores"}));
    enumerate_cmd->add_option("--n", enumerate.n, "size")->required();
    enumerate_cmd->add_option("--t", enumerate.t, "core level (cores, barcores)");
    enumerate_cmd->add_flag("--count", enumerate.count, "print only the count");
    enumerate_cmd->add_option("--format", enumerate.format, "plain or json")->check(CLI::IsMember(compute_formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*core_cmd)
            return run_core(compute);
        if (*quotient_cmd)
            return run_quotient(compute);
        if (*barcore_cmd)
            return run_barcore(compute);
        if (*barquotient_cmd)
            return run_barquotient(compute);
        if (*reconstruct_cmd)
            return run_reconstruct(reconstruct);
        if (*verify_cmd)
            return run_verify(verify);
        if (*enumerate_cmd)
            return run_enumerate(enumerate);
    } catch (const SelfCheckError& e) {
        std::cerr << "corelab: self-check failed: " << e.what() << '\n';
        return kExitRefuted;
    } catch (const UsageError& e) {
        std::cerr << "corelab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "corelab: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
