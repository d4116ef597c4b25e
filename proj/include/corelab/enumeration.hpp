#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "corelab/bar_partition.hpp"
#include "corelab/partition.hpp"

namespace corelab {

/*
 * Partitions of n in descending lexicographic order, one at a time:
 * (n), (n-1,1), ..., (1,...,1).  n = 0 yields the empty partition once.
 */
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n);
    std::optional<Partition> next();

private:
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

/* Distinct-part partitions of n, descending lexicographic. */
class BarPartitionGenerator {
public:
    explicit BarPartitionGenerator(int n);
    std::optional<BarPartition> next();

private:
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> partitions_of(int n);
std::vector<BarPartition> bar_partitions_of(int n);

/* The t-cores of n, filtered from partitions_of(n). */
std::vector<Partition> cores_of(int n, int t);
/* The t-bar-cores of n (t odd), filtered from bar_partitions_of(n). */
std::vector<BarPartition> bar_cores_of(int n, int t);

enum class Universe { partitions, bar_partitions };

/*
 * One shard of a sweep over every (bar-)partition of n_min..n_max.  Items
 * are numbered in stream order (n ascending, then generator order) and
 * item g belongs to shard g % shard_count.
 */
struct SweepPlan {
    int n_min = 0;
    int n_max = 0;
    int shard_count = 1;
    int shard_index = 0;
    Universe universe = Universe::partitions;
};

struct WorkItem {
    int n = 0;
    std::uint64_t global_index = 0;
    std::vector<int> parts;

    friend bool operator==(const WorkItem&, const WorkItem&) = default;
};

/* Throws std::invalid_argument for a bad shard index or range. */
void validate(const SweepPlan& plan);

/*
 * Calls visit for each item of the shard in stream order.  Returning false
 * from visit stops the walk.
 */
void for_each_in_shard(const SweepPlan& plan, const std::function<bool(const WorkItem&)>& visit);

std::vector<WorkItem> shard(const SweepPlan& plan);

}  // namespace corelab
