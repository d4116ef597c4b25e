#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace corelab {

struct Counterexample {
    int n = 0;
    std::vector<int> partition;
    int s = 0;
    int t = 0;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/* Order used for reports: n, then the partition in generator order, then s, t. */
bool report_order(const Counterexample& a, const Counterexample& b);

/* One (s, t, r, a) instance of a principal-block corollary, n = a*s + r. */
struct CorollaryCase {
    int s = 0;
    int t = 0;
    int r = 0;
    int a = 0;
    int n = 0;
    std::uint64_t t_cores = 0;
    /* Sizes m = b*s + r of the s-cores of those t-cores, ascending, distinct. */
    std::vector<int> s_core_sizes;

    friend bool operator==(const CorollaryCase&, const CorollaryCase&) = default;
};

struct VerificationScope {
    std::string statement;  // theorem1, theorem2, corollary1, corollary2, or a custom label
    int n_min = 0;
    int n_max = 0;
    std::vector<int> s_levels;
    std::vector<int> t_levels;
    std::optional<int> a_max;
    std::vector<CorollaryCase> cases;

    friend bool operator==(const VerificationScope&, const VerificationScope&) = default;
};

struct VerificationReport {
    VerificationScope scope;
    std::uint64_t checked = 0;
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds = 0.0;

    bool verified() const { return counterexamples.empty(); }
    std::string verdict() const { return verified() ? "verified" : "refuted"; }
};

/*
 * Adds the counts and counterexamples of `part` into `total` and restores
 * report order.  Scope and elapsed time are left to the caller.
 */
void merge_into(VerificationReport& total, const VerificationReport& part);

/*
 * {"scope":{...},"checked":N,"counterexamples":[{"n":..,"partition":"a,b",
 * "s":..,"t":..}],"elapsed_seconds":x,"verdict":"verified"|"refuted"}
 */
std::string to_json(const VerificationReport& report, int indent = 2);

}  // namespace corelab
