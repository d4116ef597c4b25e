#include "corelab/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace corelab {

PartitionGenerator::PartitionGenerator(int n)
{
    if (n < 0)
        throw std::invalid_argument("cannot enumerate partitions of a negative number");
    if (n > 0)
        current_.push_back(n);
}

std::optional<Partition> PartitionGenerator::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        return Partition(current_);
    }
    // rightmost part above 1
    int k = static_cast<int>(current_.size()) - 1;
    while (k >= 0 && current_[k] == 1)
        --k;
    if (k < 0) {
        done_ = true;
        return std::nullopt;
    }
    int rest = static_cast<int>(current_.size()) - k;  // the trailing ones plus the unit taken from part k
    const int cap = --current_[k];
    current_.resize(k + 1);
    while (rest > 0) {
        const int x = std::min(cap, rest);
        current_.push_back(x);
        rest -= x;
    }
    return Partition(current_);
}

BarPartitionGenerator::BarPartitionGenerator(int n)
{
    if (n < 0)
        throw std::invalid_argument("cannot enumerate bar-partitions of a negative number");
    if (n > 0)
        current_.push_back(n);
}

std::optional<BarPartition> BarPartitionGenerator::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        return BarPartition(current_);
    }
    // Find the rightmost part that can drop by one while the remainder still
    // fits as distinct parts below it, then refill greedily.
    int tail = 0;
    for (int k = static_cast<int>(current_.size()) - 1; k >= 0; --k) {
        const int lowered = current_[k] - 1;
        const int rest = tail + 1;
        const int cap = lowered - 1;
        if (lowered >= 1 && rest <= cap * (cap + 1) / 2) {
            current_.resize(k + 1);
            current_[k] = lowered;
            int remaining = rest;
            int limit = cap;
            while (remaining > 0) {
                const int x = std::min(limit, remaining);
                current_.push_back(x);
                remaining -= x;
                limit = x - 1;
            }
            return BarPartition(current_);
        }
        tail += current_[k];
    }
    done_ = true;
    return std::nullopt;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    PartitionGenerator gen(n);
    while (auto p = gen.next())
        out.push_back(std::move(*p));
    return out;
}

std::vector<BarPartition> bar_partitions_of(int n)
{
    std::vector<BarPartition> out;
    BarPartitionGenerator gen(n);
    while (auto p = gen.next())
        out.push_back(std::move(*p));
    return out;
}

std::vector<Partition> cores_of(int n, int t)
{
    require_level(t);
    std::vector<Partition> out;
    PartitionGenerator gen(n);
    while (auto p = gen.next())
        if (is_ell_core(*p, t))
            out.push_back(std::move(*p));
    return out;
}

std::vector<BarPartition> bar_cores_of(int n, int t)
{
    require_odd_level(t);
    std::vector<BarPartition> out;
    BarPartitionGenerator gen(n);
    while (auto p = gen.next())
        if (is_bar_core(*p, t))
            out.push_back(std::move(*p));
    return out;
}

void validate(const SweepPlan& plan)
{
    if (plan.shard_count < 1)
        throw std::invalid_argument("shard count must be at least 1");
    if (plan.shard_index < 0 || plan.shard_index >= plan.shard_count)
        throw std::invalid_argument("shard index " + std::to_string(plan.shard_index) + " outside 0.." +
                                    std::to_string(plan.shard_count - 1));
    if (plan.n_min < 0 || plan.n_max < plan.n_min)
        throw std::invalid_argument("invalid size range " + std::to_string(plan.n_min) + ".." +
                                    std::to_string(plan.n_max));
}

namespace {

template <typename Generator>
bool walk_size(int n, const SweepPlan& plan, std::uint64_t& global,
               const std::function<bool(const WorkItem&)>& visit)
{
    Generator gen(n);
    while (auto p = gen.next()) {
        const std::uint64_t index = global++;
        if (index % static_cast<std::uint64_t>(plan.shard_count) != static_cast<std::uint64_t>(plan.shard_index))
            continue;
        if (!visit(WorkItem{n, index, p->vec()}))
            return false;
    }
    return true;
}

}  // namespace

void for_each_in_shard(const SweepPlan& plan, const std::function<bool(const WorkItem&)>& visit)
{
    validate(plan);
    std::uint64_t global = 0;
    for (int n = plan.n_min; n <= plan.n_max; ++n) {
        const bool more = plan.universe == Universe::partitions
                              ? walk_size<PartitionGenerator>(n, plan, global, visit)
                              : walk_size<BarPartitionGenerator>(n, plan, global, visit);
        if (!more)
            return;
    }
}

std::vector<WorkItem> shard(const SweepPlan& plan)
{
    std::vector<WorkItem> out;
    for_each_in_shard(plan, [&](const WorkItem& item) {
        out.push_back(item);
        return true;
    });
    return out;
}

}  // namespace corelab
