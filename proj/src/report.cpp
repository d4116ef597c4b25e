#include "corelab/report.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "corelab/partition.hpp"

namespace corelab {

bool report_order(const Counterexample& a, const Counterexample& b)
{
    if (a.n != b.n)
        return a.n < b.n;
    // generator order is descending lexicographic
    if (a.partition != b.partition)
        return a.partition > b.partition;
    return std::tie(a.s, a.t) < std::tie(b.s, b.t);
}

void merge_into(VerificationReport& total, const VerificationReport& part)
{
    total.checked += part.checked;
    total.counterexamples.insert(total.counterexamples.end(), part.counterexamples.begin(),
                                 part.counterexamples.end());
    std::sort(total.counterexamples.begin(), total.counterexamples.end(), report_order);
}

std::string to_json(const VerificationReport& report, int indent)
{
    using nlohmann::ordered_json;

    ordered_json scope;
    scope["statement"] = report.scope.statement;
    if (report.scope.cases.empty()) {
        scope["n_min"] = report.scope.n_min;
        scope["n_max"] = report.scope.n_max;
    }
    scope["s_levels"] = report.scope.s_levels;
    scope["t_levels"] = report.scope.t_levels;
    if (report.scope.a_max)
        scope["a_max"] = *report.scope.a_max;
    if (!report.scope.cases.empty()) {
        ordered_json cases = ordered_json::array();
        for (const auto& c : report.scope.cases) {
            ordered_json entry;
            entry["s"] = c.s;
            entry["t"] = c.t;
            entry["r"] = c.r;
            entry["a"] = c.a;
            entry["n"] = c.n;
            entry["t_cores"] = c.t_cores;
            entry["s_core_sizes"] = c.s_core_sizes;
            cases.push_back(std::move(entry));
        }
        scope["cases"] = std::move(cases);
    }

    ordered_json doc;
    doc["scope"] = std::move(scope);
    doc["checked"] = report.checked;
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : report.counterexamples) {
        ordered_json entry;
        entry["n"] = w.n;
        entry["partition"] = to_literal(w.partition);
        entry["s"] = w.s;
        entry["t"] = w.t;
        witnesses.push_back(std::move(entry));
    }
    doc["counterexamples"] = std::move(witnesses);
    doc["elapsed_seconds"] = report.elapsed_seconds;
    doc["verdict"] = report.verdict();
    return doc.dump(indent);
}

}  // namespace corelab
