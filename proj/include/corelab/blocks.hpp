#pragma once

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "corelab/bar_partition.hpp"
#include "corelab/enumeration.hpp"
#include "corelab/partition.hpp"
#include "corelab/report.hpp"

namespace corelab {

/* The ell-block of partitions of n with a given ell-core. */
struct BlockId {
    int level = 1;
    Partition core;
    int n = 0;

    friend bool operator==(const BlockId&, const BlockId&) = default;
    friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

struct BarBlockId {
    int level = 1;
    BarPartition core;
    int n = 0;

    friend bool operator==(const BarBlockId&, const BarBlockId&) = default;
    friend auto operator<=>(const BarBlockId&, const BarBlockId&) = default;
};

BlockId block_id(const Partition& lambda, int ell);
BarBlockId bar_block_id(const BarPartition& lambda, int ell);

/* s-core of the one-row partition (n): the row (n mod s), empty when s | n. */
Partition principal_core(int n, int s);
/* Bar analogue, s odd. */
BarPartition principal_bar_core(int n, int s);

bool in_principal_block(const Partition& lambda, int s);
bool in_principal_bar_block(const BarPartition& lambda, int s);

/* Every partition of n grouped by block, members in generator order. */
std::map<BlockId, std::vector<Partition>> classify_blocks(int n, int ell);
std::map<BarBlockId, std::vector<BarPartition>> classify_bar_blocks(int n, int ell);

struct VerifyOptions {
    int jobs = 1;
    /*
     * Stop at the first counterexample.  The walk then runs on a single
     * shard so the witness reported does not depend on jobs.
     */
    bool fail_fast = false;
};

struct TheoremSweep {
    int n_min = 0;
    int n_max = 0;
    std::vector<int> s_levels;
    std::vector<int> t_levels;
};

/* Whether a (bar-)partition is in scope for level t, e.g. "is a t-core". */
using ScopeFilter = std::function<bool(std::span<const int> parts, int t)>;
/* The statement being verified for one in-scope instance. */
using InstanceCheck = std::function<bool(std::span<const int> parts, int s, int t)>;

/*
 * Exhaustive sweep: every (bar-)partition of n in the size range, every t
 * with in_scope, every s.  checked counts (lambda, s, t) instances.
 */
VerificationReport verify_sweep_shard(const std::string& statement, const TheoremSweep& sweep,
                                      const SweepPlan& plan, const ScopeFilter& in_scope,
                                      const InstanceCheck& holds, bool fail_fast);

VerificationReport verify_sweep(const std::string& statement, const TheoremSweep& sweep,
                                Universe universe, const ScopeFilter& in_scope,
                                const InstanceCheck& holds, const VerifyOptions& options = {});

/* For every t-core lambda and every s: gamma_s(lambda) is a t-core. */
VerificationReport verify_core_theorem(const TheoremSweep& sweep, const VerifyOptions& options = {});
VerificationReport verify_core_theorem(int n_max, std::vector<int> s_levels, std::vector<int> t_levels,
                                       const VerifyOptions& options = {});

/* Bar analogue; throws std::invalid_argument for an even level. */
VerificationReport verify_bar_theorem(const TheoremSweep& sweep, const VerifyOptions& options = {});
VerificationReport verify_bar_theorem(int n_max, std::vector<int> s_levels, std::vector<int> t_levels,
                                      const VerifyOptions& options = {});

/*
 * For s > r >= t and a <= a_max, no t-core of n = a*s + r lies in the
 * principal s-block.  checked counts the partitions of n examined; the
 * scope records each (s, t, r, a, n) case.  Throws unless s > t >= 1.
 */
VerificationReport verify_corollary(int s, int t, int a_max, const VerifyOptions& options = {});
/* Odd s > t >= 1 only. */
VerificationReport verify_bar_corollary(int s, int t, int a_max, const VerifyOptions& options = {});

/* Every 2 <= s <= s_max and 1 <= t < s (bar: both odd), merged into one report. */
VerificationReport verify_corollary_sweep(int s_max, int a_max, const VerifyOptions& options = {});
VerificationReport verify_bar_corollary_sweep(int s_max, int a_max, const VerifyOptions& options = {});

/*
 * Checks the correspondence between (g)-hooks of lambda and hooks of its
 * g-quotient: lengths match up to the factor g as multisets, and removing
 * a (g)-hook of length k*g removes exactly one k-hook from exactly one
 * component, injectively, leaving the g-core unchanged.
 */
bool verify_quotient_bijection(const Partition& lambda, int g);

/*
 * Same for (g)-bars against bars of component0 and hooks of the other
 * components.  g odd.
 */
bool verify_bar_quotient_bijection(const BarPartition& lambda, int g);

}  // namespace corelab
