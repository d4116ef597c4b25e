#include "corelab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace corelab {

void require_level(int ell)
{
    if (ell < 1)
        throw std::invalid_argument("level must be at least 1, got " + std::to_string(ell));
}

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts are not non-increasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition make_partition(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const
{
    std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++conj[j];
    return Partition(std::move(conj));
}

std::vector<Hook> hooks(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    std::vector<Hook> out;
    out.reserve(lambda.size());
    for (int i = 1; i <= lambda.length(); ++i) {
        const int row_len = lambda.part(i - 1);
        for (int j = 1; j <= row_len; ++j) {
            Hook h;
            h.row = i;
            h.col = j;
            h.arm = row_len - j;
            h.leg = conj.part(j - 1) - i;
            h.length = h.arm + h.leg + 1;
            out.push_back(h);
        }
    }
    return out;
}

Hook hook_at(const Partition& lambda, int row, int col)
{
    if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row - 1))
        throw std::invalid_argument("node (" + std::to_string(row) + "," + std::to_string(col) +
                                    ") is not in the diagram of " + to_literal(lambda));
    int leg = 0;
    while (lambda.part(row + leg) >= col)
        ++leg;
    const int arm = lambda.part(row - 1) - col;
    return Hook{row, col, arm, leg, arm + leg + 1};
}

BetaSet::BetaSet(std::vector<int> beads)
    : beads_(std::move(beads))
{
    std::sort(beads_.begin(), beads_.end(), std::greater<>());
    if (!beads_.empty() && beads_.back() < 0)
        throw std::invalid_argument("bead positions must be nonnegative");
    if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end())
        throw std::invalid_argument("bead positions must be distinct");
}

bool BetaSet::contains(int position) const
{
    return std::binary_search(beads_.begin(), beads_.end(), position, std::greater<>());
}

BetaSet BetaSet::shifted() const
{
    std::vector<int> next(beads_);
    for (int& b : next)
        ++b;
    next.push_back(0);
    return BetaSet(std::move(next));
}

BetaSet beta_set(const Partition& lambda, int m)
{
    if (m < lambda.length())
        throw std::invalid_argument("bead count " + std::to_string(m) + " is less than the " +
                                    std::to_string(lambda.length()) + " parts");
    std::vector<int> beads(m);
    for (int i = 0; i < m; ++i)
        beads[i] = lambda.part(i) + (m - 1 - i);
    return BetaSet(std::move(beads));
}

Partition partition_of_beta(const BetaSet& beta)
{
    const auto beads = beta.beads();
    const int m = beta.bead_count();
    std::vector<int> parts(m);
    for (int k = 0; k < m; ++k)
        parts[k] = beads[k] - (m - 1 - k);
    return Partition(std::move(parts));
}

Partition remove_hook(const Partition& lambda, const Hook& h)
{
    // hook_at throws for nodes outside the diagram
    if (hook_at(lambda, h.row, h.col) != h)
        throw std::invalid_argument("hook does not belong to " + to_literal(lambda));
    const int m = lambda.length();
    const BetaSet beta = beta_set(lambda, m);
    std::vector<int> beads(beta.beads().begin(), beta.beads().end());
    // the bead of row i slides onto the empty position of column j's foot
    beads[h.row - 1] -= h.length;
    return partition_of_beta(BetaSet(std::move(beads)));
}

int normalized_bead_count(const Partition& lambda, int ell)
{
    require_level(ell);
    return (lambda.length() + ell - 1) / ell * ell;
}

namespace {

// Beads sorted onto runners: runners[r] lists positions floor(b / ell) of
// the beads congruent to r, in decreasing order.
std::vector<std::vector<int>> runners_of(const Partition& lambda, int ell)
{
    const BetaSet beta = beta_set(lambda, normalized_bead_count(lambda, ell));
    std::vector<std::vector<int>> runners(ell);
    for (int b : beta.beads())
        runners[b % ell].push_back(b / ell);
    return runners;
}

Partition core_from_runner_counts(const std::vector<std::vector<int>>& runners, int ell)
{
    std::vector<int> beads;
    for (int r = 0; r < ell; ++r)
        for (int k = 0; k < static_cast<int>(runners[r].size()); ++k)
            beads.push_back(r + k * ell);
    return partition_of_beta(BetaSet(std::move(beads)));
}

}  // namespace

QuotientDecomposition quotient_decomposition(const Partition& lambda, int ell)
{
    const auto runners = runners_of(lambda, ell);
    QuotientDecomposition q;
    q.ell = ell;
    q.core = core_from_runner_counts(runners, ell);
    q.components.reserve(ell);
    for (const auto& runner : runners) {
        q.components.push_back(partition_of_beta(BetaSet(runner)));
        q.weight += q.components.back().size();
    }
    return q;
}

Partition ell_core(const Partition& lambda, int ell)
{
    return core_from_runner_counts(runners_of(lambda, ell), ell);
}

std::vector<Partition> ell_quotient(const Partition& lambda, int ell)
{
    return quotient_decomposition(lambda, ell).components;
}

int ell_weight(const Partition& lambda, int ell)
{
    return (lambda.size() - ell_core(lambda, ell).size()) / ell;
}

bool is_ell_core(const Partition& lambda, int ell)
{
    require_level(ell);
    // some bead has an empty slot ell places below it iff lambda has an (ell)-hook
    const BetaSet beta = beta_set(lambda, lambda.length());
    for (int b : beta.beads())
        if (b >= ell && !beta.contains(b - ell))
            return false;
    return true;
}

Partition from_core_and_quotient(const Partition& core,
                                 std::span<const Partition> components,
                                 int ell)
{
    require_level(ell);
    if (static_cast<int>(components.size()) != ell)
        throw std::invalid_argument("expected " + std::to_string(ell) + " quotient components, got " +
                                    std::to_string(components.size()));
    if (!is_ell_core(core, ell))
        throw std::invalid_argument(to_literal(core) + " is not a " + std::to_string(ell) + "-core");

    // Grow the core's abacus one bead per runner until every runner can hold
    // its component.
    auto runners = runners_of(core, ell);
    std::size_t shortfall = 0;
    for (int r = 0; r < ell; ++r) {
        const auto have = runners[r].size();
        const auto need = static_cast<std::size_t>(components[r].length());
        if (need > have)
            shortfall = std::max(shortfall, need - have);
    }

    std::vector<int> beads;
    for (int r = 0; r < ell; ++r) {
        const int count = static_cast<int>(runners[r].size() + shortfall);
        const BetaSet on_runner = beta_set(components[r], count);
        for (int p : on_runner.beads())
            beads.push_back(p * ell + r);
    }
    return partition_of_beta(BetaSet(std::move(beads)));
}

std::vector<HookRemoval> divisible_hooks(const Partition& lambda, int ell)
{
    require_level(ell);
    std::vector<HookRemoval> out;
    for (const Hook& h : hooks(lambda))
        if (h.length % ell == 0)
            out.push_back({h, remove_hook(lambda, h)});
    return out;
}

std::vector<int> parse_parts(std::string_view literal)
{
    if (literal == "-")
        return {};
    if (literal.empty())
        throw std::invalid_argument("empty literal; use '-' for the empty partition");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const auto comma = literal.find(',', pos);
        const auto token = literal.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last)
            throw std::invalid_argument("malformed part '" + std::string(token) + "' in literal '" +
                                        std::string(literal) + "'");
        if (value < 1)
            throw std::invalid_argument("parts must be positive in literal '" + std::string(literal) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return parts;
}

Partition parse_partition(std::string_view literal)
{
    return Partition(parse_parts(literal));
}

std::string to_literal(std::span<const int> parts)
{
    if (parts.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace corelab
