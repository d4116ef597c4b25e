#include "corelab/bar_partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace corelab {

BarPartition::BarPartition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    if (!parts_.empty() && parts_.back() < 1)
        throw std::invalid_argument("bar-partition parts must be positive");
    if (std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end())
        throw std::invalid_argument("bar-partition has a repeated part");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool BarPartition::contains(int part) const
{
    return std::binary_search(parts_.begin(), parts_.end(), part, std::greater<>());
}

BarPartition make_bar_partition(std::vector<int> parts)
{
    return BarPartition(std::move(parts));
}

void require_odd_level(int ell)
{
    if (ell < 1 || ell % 2 == 0)
        throw std::invalid_argument("bar level must be odd and positive, got " + std::to_string(ell));
}

std::vector<Bar> bars(const BarPartition& lambda)
{
    const auto parts = lambda.parts();
    std::vector<Bar> out;
    out.reserve(lambda.size());
    for (int i = 0; i < lambda.length(); ++i) {
        const int a = parts[i];
        for (int j = i + 1; j < lambda.length(); ++j)
            out.push_back({BarKind::two_row, i + 1, j + 1, a + parts[j]});
        for (int d = a; d >= 1; --d)
            if (!lambda.contains(a - d))
                out.push_back({BarKind::within_row, i + 1, 0, d});
    }
    return out;
}

BarPartition remove_bar(const BarPartition& lambda, const Bar& b)
{
    const auto all = bars(lambda);
    if (std::find(all.begin(), all.end(), b) == all.end())
        throw std::invalid_argument("bar does not belong to " + to_literal(lambda));
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    if (b.kind == BarKind::two_row) {
        parts.erase(parts.begin() + (b.second_row - 1));
        parts.erase(parts.begin() + (b.row - 1));
    } else {
        parts[b.row - 1] -= b.length;
        if (parts[b.row - 1] == 0)
            parts.erase(parts.begin() + (b.row - 1));
    }
    return BarPartition(std::move(parts));
}

namespace {

// Longest bar with ell | length, smallest row on ties.  Lengths are
// distinct within a row, so this picks a unique bar.
std::optional<Bar> canonical_bar(const BarPartition& lambda, int ell)
{
    std::optional<Bar> best;
    for (const Bar& b : bars(lambda)) {
        if (b.length % ell != 0)
            continue;
        if (!best || b.length > best->length || (b.length == best->length && b.row < best->row))
            best = b;
    }
    return best;
}

}  // namespace

std::vector<Bar> bar_core_trace(const BarPartition& lambda, int ell)
{
    require_odd_level(ell);
    std::vector<Bar> trace;
    BarPartition current = lambda;
    while (auto b = canonical_bar(current, ell)) {
        trace.push_back(*b);
        current = remove_bar(current, *b);
    }
    return trace;
}

BarPartition bar_core(const BarPartition& lambda, int ell)
{
    require_odd_level(ell);
    BarPartition current = lambda;
    while (auto b = canonical_bar(current, ell))
        current = remove_bar(current, *b);
    return current;
}

int bar_weight(const BarPartition& lambda, int ell)
{
    return (lambda.size() - bar_core(lambda, ell).size()) / ell;
}

bool is_bar_core(const BarPartition& lambda, int ell)
{
    require_odd_level(ell);
    return !canonical_bar(lambda, ell).has_value();
}

int bar_charge(const BarPartition& lambda, int ell, int residue)
{
    require_odd_level(ell);
    if (residue < 1 || 2 * residue >= ell)
        throw std::invalid_argument("residue must lie in 1..(ell-1)/2");
    int charge = 0;
    for (int a : lambda.parts()) {
        if (a % ell == residue)
            ++charge;
        else if (a % ell == ell - residue)
            --charge;
    }
    return charge;
}

namespace {

// Partition read off a two-sided bead sequence.  `upper` holds the filled
// positions k >= 0, `lower_gaps` the empty positions k < 0; everything
// below the lowest gap is filled.
Partition decode_two_sided(const std::vector<int>& upper, const std::vector<int>& lower_gaps)
{
    int bottom = 0;
    for (int g : lower_gaps)
        bottom = std::min(bottom, g);
    int top = -1;
    for (int u : upper)
        top = std::max(top, u);

    std::vector<bool> filled(top - bottom + 1, false);
    for (int k = bottom; k < 0; ++k)
        filled[k - bottom] = true;
    for (int g : lower_gaps)
        filled[g - bottom] = false;
    for (int u : upper)
        filled[u - bottom] = true;

    int gaps_below = 0;
    std::vector<int> ascending;
    for (std::size_t idx = 0; idx < filled.size(); ++idx) {
        if (!filled[idx])
            ++gaps_below;
        else if (gaps_below > 0)
            ascending.push_back(gaps_below);
    }
    return Partition(std::vector<int>(ascending.rbegin(), ascending.rend()));
}

void require_residue_count(std::span<const Partition> components, int ell)
{
    if (static_cast<int>(components.size()) != (ell - 1) / 2)
        throw std::invalid_argument("expected " + std::to_string((ell - 1) / 2) +
                                    " partition components, got " + std::to_string(components.size()));
}

}  // namespace

BarQuotientDecomposition bar_quotient(const BarPartition& lambda, int ell)
{
    require_odd_level(ell);
    BarQuotientDecomposition q;
    q.ell = ell;
    q.core = bar_core(lambda, ell);

    std::vector<int> zero_class;
    for (int a : lambda.parts())
        if (a % ell == 0)
            zero_class.push_back(a / ell);
    q.component0 = BarPartition(std::move(zero_class));
    q.weight = q.component0.size();

    for (int i = 1; 2 * i < ell; ++i) {
        std::vector<int> upper;
        std::vector<int> lower_gaps;
        for (int a : lambda.parts()) {
            if (a % ell == i)
                upper.push_back(a / ell);
            else if (a % ell == ell - i)
                lower_gaps.push_back(-(a / ell) - 1);
        }
        q.components.push_back(decode_two_sided(upper, lower_gaps));
        q.weight += q.components.back().size();
    }
    return q;
}

BarPartition from_bar_core_and_quotient(const BarPartition& core,
                                        const BarPartition& component0,
                                        std::span<const Partition> components,
                                        int ell)
{
    require_odd_level(ell);
    require_residue_count(components, ell);
    if (!is_bar_core(core, ell))
        throw std::invalid_argument(to_literal(core) + " is not a " + std::to_string(ell) + "-bar-core");

    std::vector<int> parts;
    for (int p : component0.parts())
        parts.push_back(p * ell);

    for (int i = 1; 2 * i < ell; ++i) {
        const Partition& mu = components[i - 1];
        const int charge = bar_charge(core, ell, i);
        // Filled positions are mu_j - j + charge for j >= 1 (0-based: mu_j - j - 1 + charge).
        // Below charge - length(mu) every position is filled.
        const int floor_pos = charge - mu.length();
        std::vector<int> filled;
        for (int j = 0; j < mu.length(); ++j)
            filled.push_back(mu.part(j) - j - 1 + charge);
        const auto is_filled = [&](int pos) {
            return pos < floor_pos || std::find(filled.begin(), filled.end(), pos) != filled.end();
        };
        for (int pos = 0; pos < floor_pos; ++pos)
            parts.push_back(ell * pos + i);
        for (int pos : filled)
            if (pos >= 0)
                parts.push_back(ell * pos + i);
        for (int pos = std::min(floor_pos, 0); pos < 0; ++pos)
            if (!is_filled(pos))
                parts.push_back(ell * (-pos - 1) + (ell - i));
    }
    return BarPartition(std::move(parts));
}

BarPartition parse_bar_partition(std::string_view literal)
{
    auto parts = parse_parts(literal);
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] >= parts[i - 1])
            throw std::invalid_argument("bar-partition literal must be strictly decreasing: '" +
                                        std::string(literal) + "'");
    return BarPartition(std::move(parts));
}

}  // namespace corelab
