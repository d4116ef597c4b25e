#include "corelab/blocks.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace corelab {

BlockId block_id(const Partition& lambda, int ell)
{
    return BlockId{ell, ell_core(lambda, ell), lambda.size()};
}

BarBlockId bar_block_id(const BarPartition& lambda, int ell)
{
    return BarBlockId{ell, bar_core(lambda, ell), lambda.size()};
}

Partition principal_core(int n, int s)
{
    require_level(s);
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    return Partition({n % s});
}

BarPartition principal_bar_core(int n, int s)
{
    require_odd_level(s);
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    if (n % s == 0)
        return BarPartition();
    return BarPartition({n % s});
}

bool in_principal_block(const Partition& lambda, int s)
{
    return ell_core(lambda, s) == principal_core(lambda.size(), s);
}

bool in_principal_bar_block(const BarPartition& lambda, int s)
{
    return bar_core(lambda, s) == principal_bar_core(lambda.size(), s);
}

std::map<BlockId, std::vector<Partition>> classify_blocks(int n, int ell)
{
    std::map<BlockId, std::vector<Partition>> blocks;
    PartitionGenerator gen(n);
    while (auto p = gen.next())
        blocks[block_id(*p, ell)].push_back(*p);
    return blocks;
}

std::map<BarBlockId, std::vector<BarPartition>> classify_bar_blocks(int n, int ell)
{
    std::map<BarBlockId, std::vector<BarPartition>> blocks;
    BarPartitionGenerator gen(n);
    while (auto p = gen.next())
        blocks[bar_block_id(*p, ell)].push_back(*p);
    return blocks;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int effective_jobs(const VerifyOptions& options)
{
    if (options.jobs < 1)
        throw std::invalid_argument("jobs must be at least 1");
    return options.fail_fast ? 1 : options.jobs;
}

// Runs work(shard_index, shard_count) on `jobs` threads and returns the
// results in shard order.
template <typename Result, typename Work>
std::vector<Result> run_shards(int jobs, Work work)
{
    std::vector<Result> results(jobs);
    if (jobs == 1) {
        results[0] = work(0, 1);
        return results;
    }
    std::vector<std::exception_ptr> errors(jobs);
    {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (int i = 0; i < jobs; ++i) {
            workers.emplace_back([&, i] {
                try {
                    results[i] = work(i, jobs);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

void require_levels(const std::vector<int>& levels, bool odd)
{
    if (levels.empty())
        throw std::invalid_argument("level set must be nonempty");
    for (int l : levels) {
        if (odd)
            require_odd_level(l);
        else
            require_level(l);
    }
}

}  // namespace

VerificationReport verify_sweep_shard(const std::string& statement, const TheoremSweep& sweep,
                                      const SweepPlan& plan, const ScopeFilter& in_scope,
                                      const InstanceCheck& holds, bool fail_fast)
{
    VerificationReport report;
    report.scope = {statement, sweep.n_min, sweep.n_max, sweep.s_levels, sweep.t_levels, std::nullopt, {}};
    for_each_in_shard(plan, [&](const WorkItem& item) {
        for (int t : sweep.t_levels) {
            if (!in_scope(item.parts, t))
                continue;
            for (int s : sweep.s_levels) {
                ++report.checked;
                if (!holds(item.parts, s, t)) {
                    report.counterexamples.push_back({item.n, item.parts, s, t});
                    if (fail_fast)
                        return false;
                }
            }
        }
        return true;
    });
    std::sort(report.counterexamples.begin(), report.counterexamples.end(), report_order);
    return report;
}

VerificationReport verify_sweep(const std::string& statement, const TheoremSweep& sweep,
                                Universe universe, const ScopeFilter& in_scope,
                                const InstanceCheck& holds, const VerifyOptions& options)
{
    const auto start = Clock::now();
    const int jobs = effective_jobs(options);
    const auto parts = run_shards<VerificationReport>(jobs, [&](int index, int count) {
        SweepPlan plan{sweep.n_min, sweep.n_max, count, index, universe};
        return verify_sweep_shard(statement, sweep, plan, in_scope, holds, options.fail_fast);
    });

    VerificationReport total;
    total.scope = parts.front().scope;
    for (const auto& part : parts)
        merge_into(total, part);
    total.elapsed_seconds = seconds_since(start);
    return total;
}

VerificationReport verify_core_theorem(const TheoremSweep& sweep, const VerifyOptions& options)
{
    require_levels(sweep.s_levels, false);
    require_levels(sweep.t_levels, false);
    return verify_sweep(
        "theorem1", sweep, Universe::partitions,
        [](std::span<const int> parts, int t) {
            return is_ell_core(Partition({parts.begin(), parts.end()}), t);
        },
        [](std::span<const int> parts, int s, int t) {
            return is_ell_core(ell_core(Partition({parts.begin(), parts.end()}), s), t);
        },
        options);
}

VerificationReport verify_core_theorem(int n_max, std::vector<int> s_levels, std::vector<int> t_levels,
                                       const VerifyOptions& options)
{
    return verify_core_theorem(TheoremSweep{0, n_max, std::move(s_levels), std::move(t_levels)}, options);
}

VerificationReport verify_bar_theorem(const TheoremSweep& sweep, const VerifyOptions& options)
{
    require_levels(sweep.s_levels, true);
    require_levels(sweep.t_levels, true);
    return verify_sweep(
        "theorem2", sweep, Universe::bar_partitions,
        [](std::span<const int> parts, int t) {
            return is_bar_core(BarPartition({parts.begin(), parts.end()}), t);
        },
        [](std::span<const int> parts, int s, int t) {
            return is_bar_core(bar_core(BarPartition({parts.begin(), parts.end()}), s), t);
        },
        options);
}

VerificationReport verify_bar_theorem(int n_max, std::vector<int> s_levels, std::vector<int> t_levels,
                                      const VerifyOptions& options)
{
    return verify_bar_theorem(TheoremSweep{0, n_max, std::move(s_levels), std::move(t_levels)}, options);
}

namespace {

struct CaseOutcome {
    std::uint64_t checked = 0;
    std::uint64_t t_cores = 0;
    std::set<int> s_core_sizes;
    std::vector<Counterexample> counterexamples;
};

// One corollary case over a shard of the partitions of n.
template <bool Bar>
CaseOutcome corollary_case_shard(int n, int s, int t, const SweepPlan& plan, bool fail_fast)
{
    CaseOutcome out;
    for_each_in_shard(plan, [&](const WorkItem& item) {
        ++out.checked;
        bool t_core = false;
        bool principal = false;
        int core_size = 0;
        if constexpr (Bar) {
            const BarPartition lambda(item.parts);
            t_core = is_bar_core(lambda, t);
            if (t_core) {
                const BarPartition gamma = bar_core(lambda, s);
                core_size = gamma.size();
                principal = gamma == principal_bar_core(n, s);
            }
        } else {
            const Partition lambda(item.parts);
            t_core = is_ell_core(lambda, t);
            if (t_core) {
                const Partition gamma = ell_core(lambda, s);
                core_size = gamma.size();
                principal = gamma == principal_core(n, s);
            }
        }
        if (!t_core)
            return true;
        ++out.t_cores;
        out.s_core_sizes.insert(core_size);
        if (principal) {
            out.counterexamples.push_back({n, item.parts, s, t});
            if (fail_fast)
                return false;
        }
        return true;
    });
    return out;
}

template <bool Bar>
VerificationReport corollary_cases(const std::string& statement, const std::vector<std::pair<int, int>>& levels,
                                   int a_max, const VerifyOptions& options)
{
    const auto start = Clock::now();
    const int jobs = effective_jobs(options);
    if (a_max < 0)
        throw std::invalid_argument("a_max must be nonnegative");

    VerificationReport total;
    total.scope.statement = statement;
    total.scope.a_max = a_max;
    std::set<int> s_seen;
    std::set<int> t_seen;
    for (auto [s, t] : levels) {
        s_seen.insert(s);
        t_seen.insert(t);
    }
    total.scope.s_levels.assign(s_seen.begin(), s_seen.end());
    total.scope.t_levels.assign(t_seen.begin(), t_seen.end());

    const auto stop = [&] { return options.fail_fast && !total.counterexamples.empty(); };
    for (auto [s, t] : levels) {
        for (int r = t; r < s && !stop(); ++r) {
            for (int a = 0; a <= a_max && !stop(); ++a) {
                const int n = a * s + r;
                const auto shards = run_shards<CaseOutcome>(jobs, [&](int index, int count) {
                    const SweepPlan plan{n, n, count, index,
                                         Bar ? Universe::bar_partitions : Universe::partitions};
                    return corollary_case_shard<Bar>(n, s, t, plan, options.fail_fast);
                });
                CorollaryCase record{s, t, r, a, n, 0, {}};
                std::set<int> sizes;
                for (const auto& part : shards) {
                    total.checked += part.checked;
                    record.t_cores += part.t_cores;
                    sizes.insert(part.s_core_sizes.begin(), part.s_core_sizes.end());
                    total.counterexamples.insert(total.counterexamples.end(), part.counterexamples.begin(),
                                                 part.counterexamples.end());
                }
                record.s_core_sizes.assign(sizes.begin(), sizes.end());
                total.scope.cases.push_back(std::move(record));
            }
        }
    }
    std::sort(total.counterexamples.begin(), total.counterexamples.end(), report_order);
    total.elapsed_seconds = seconds_since(start);
    return total;
}

void require_corollary_levels(int s, int t, bool odd)
{
    if (odd) {
        require_odd_level(s);
        require_odd_level(t);
    } else {
        require_level(s);
        require_level(t);
    }
    if (s <= t)
        throw std::invalid_argument("corollary needs s > t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
}

}  // namespace

VerificationReport verify_corollary(int s, int t, int a_max, const VerifyOptions& options)
{
    require_corollary_levels(s, t, false);
    return corollary_cases<false>("corollary1", {{s, t}}, a_max, options);
}

VerificationReport verify_bar_corollary(int s, int t, int a_max, const VerifyOptions& options)
{
    require_corollary_levels(s, t, true);
    return corollary_cases<true>("corollary2", {{s, t}}, a_max, options);
}

VerificationReport verify_corollary_sweep(int s_max, int a_max, const VerifyOptions& options)
{
    std::vector<std::pair<int, int>> levels;
    for (int s = 2; s <= s_max; ++s)
        for (int t = 1; t < s; ++t)
            levels.emplace_back(s, t);
    if (levels.empty())
        throw std::invalid_argument("corollary sweep needs s_max >= 2");
    return corollary_cases<false>("corollary1", levels, a_max, options);
}

VerificationReport verify_bar_corollary_sweep(int s_max, int a_max, const VerifyOptions& options)
{
    std::vector<std::pair<int, int>> levels;
    for (int s = 3; s <= s_max; s += 2)
        for (int t = 1; t < s; t += 2)
            levels.emplace_back(s, t);
    if (levels.empty())
        throw std::invalid_argument("bar corollary sweep needs s_max >= 3");
    return corollary_cases<true>("corollary2", levels, a_max, options);
}

namespace {

std::vector<int> hook_lengths(const Partition& lambda)
{
    std::vector<int> out;
    for (const Hook& h : hooks(lambda))
        out.push_back(h.length);
    return out;
}

std::vector<int> bar_lengths(const BarPartition& lambda)
{
    std::vector<int> out;
    for (const Bar& b : bars(lambda))
        out.push_back(b.length);
    return out;
}

// Index of the single component that differs, or -1.
template <typename Seq>
int single_difference(const Seq& before, const Seq& after)
{
    int index = -1;
    for (std::size_t i = 0; i < before.size(); ++i) {
        if (before[i] == after[i])
            continue;
        if (index != -1)
            return -1;
        index = static_cast<int>(i);
    }
    return index;
}

bool hook_removal_reaches(const Partition& from, int length, const Partition& target)
{
    for (const Hook& h : hooks(from))
        if (h.length == length && remove_hook(from, h) == target)
            return true;
    return false;
}

bool bar_removal_reaches(const BarPartition& from, int length, const BarPartition& target)
{
    for (const Bar& b : bars(from))
        if (b.length == length && remove_bar(from, b) == target)
            return true;
    return false;
}

}  // namespace

bool verify_quotient_bijection(const Partition& lambda, int g)
{
    require_level(g);
    const QuotientDecomposition q = quotient_decomposition(lambda, g);

    std::vector<int> scaled;
    const auto removals = divisible_hooks(lambda, g);
    for (const auto& r : removals)
        scaled.push_back(r.hook.length / g);
    std::vector<int> quotient_lengths;
    for (const auto& c : q.components) {
        const auto lengths = hook_lengths(c);
        quotient_lengths.insert(quotient_lengths.end(), lengths.begin(), lengths.end());
    }
    std::sort(scaled.begin(), scaled.end());
    std::sort(quotient_lengths.begin(), quotient_lengths.end());
    if (scaled != quotient_lengths)
        return false;

    std::set<std::pair<int, Partition>> images;
    for (const auto& r : removals) {
        const QuotientDecomposition after = quotient_decomposition(r.result, g);
        if (after.core != q.core)
            return false;
        const int c = single_difference(q.components, after.components);
        if (c < 0)
            return false;
        if (!hook_removal_reaches(q.components[c], r.hook.length / g, after.components[c]))
            return false;
        if (!images.emplace(c, after.components[c]).second)
            return false;
    }
    return true;
}

bool verify_bar_quotient_bijection(const BarPartition& lambda, int g)
{
    require_odd_level(g);
    const BarQuotientDecomposition q = bar_quotient(lambda, g);

    std::vector<int> scaled;
    std::vector<Bar> divisible;
    for (const Bar& b : bars(lambda)) {
        if (b.length % g == 0) {
            divisible.push_back(b);
            scaled.push_back(b.length / g);
        }
    }
    std::vector<int> quotient_lengths = bar_lengths(q.component0);
    for (const auto& c : q.components) {
        const auto lengths = hook_lengths(c);
        quotient_lengths.insert(quotient_lengths.end(), lengths.begin(), lengths.end());
    }
    std::sort(scaled.begin(), scaled.end());
    std::sort(quotient_lengths.begin(), quotient_lengths.end());
    if (scaled != quotient_lengths)
        return false;

    // Image of a removal: (component index, new component), with index 0
    // for component0 and i for components[i - 1].
    std::set<std::pair<int, std::vector<int>>> images;
    for (const Bar& b : divisible) {
        const BarQuotientDecomposition after = bar_quotient(remove_bar(lambda, b), g);
        if (after.core != q.core)
            return false;
        const int k = b.length / g;
        const bool zero_changed = after.component0 != q.component0;
        const int c = single_difference(q.components, after.components);
        const bool others_same = after.components == q.components;
        if (zero_changed) {
            if (!others_same || !bar_removal_reaches(q.component0, k, after.component0))
                return false;
            if (!images.emplace(0, after.component0.vec()).second)
                return false;
        } else {
            if (c < 0 || !hook_removal_reaches(q.components[c], k, after.components[c]))
                return false;
            if (!images.emplace(c + 1, after.components[c].vec()).second)
                return false;
        }
    }
    return true;
}

}  // namespace corelab
