#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corelab {

/*
 * An integer partition: a non-increasing sequence of positive parts.
 * Trailing zeros are stripped on construction, so the empty sequence is
 * the unique partition of 0.  Values are immutable once built.
 */
class Partition {
public:
    Partition() = default;

    /* Throws std::invalid_argument on a negative or increasing entry. */
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    /* n, the number of nodes. */
    int size() const { return size_; }
    /* number of nonzero rows */
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /* Part in (0-based) row i, or 0 past the last row. */
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition make_partition(std::vector<int> parts);

/* A hook h_ij, rows and columns counted from 1. */
struct Hook {
    int row = 0;
    int col = 0;
    int arm = 0;
    int leg = 0;
    int length = 0;

    friend bool operator==(const Hook&, const Hook&) = default;
};

/* All hooks of lambda, one per node, row-major. */
std::vector<Hook> hooks(const Partition& lambda);

/* The hook at node (row, col); throws if the node is not in the diagram. */
Hook hook_at(const Partition& lambda, int row, int col);

/*
 * lambda \ h.  Implemented on the beta-set: the bead of row h.row slides
 * down by h.length.  Throws if h is not a hook of lambda.
 */
Partition remove_hook(const Partition& lambda, const Hook& h);

/*
 * Bead positions of a partition on an abacus.  Beads are kept strictly
 * decreasing; decoding b_1 > ... > b_m gives parts b_k - (m - k).
 */
class BetaSet {
public:
    BetaSet() = default;
    /* Throws on negative or repeated positions. */
    explicit BetaSet(std::vector<int> beads);

    std::span<const int> beads() const { return beads_; }
    int bead_count() const { return static_cast<int>(beads_.size()); }
    bool contains(int position) const;

    /* Every bead moved up one place, plus a new bead at 0. */
    BetaSet shifted() const;

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<int> beads_;
};

/* Throws if m is smaller than the number of parts. */
BetaSet beta_set(const Partition& lambda, int m);
Partition partition_of_beta(const BetaSet& beta);

/*
 * Runner decomposition of lambda at level ell.  components[i] comes from
 * the beads congruent to i mod ell on a beta-set whose bead count is the
 * least multiple of ell covering all rows.
 */
struct QuotientDecomposition {
    int ell = 1;
    Partition core;
    std::vector<Partition> components;
    int weight = 0;
};

/* Bead count used for every runner computation at level ell. */
int normalized_bead_count(const Partition& lambda, int ell);

QuotientDecomposition quotient_decomposition(const Partition& lambda, int ell);

Partition ell_core(const Partition& lambda, int ell);
std::vector<Partition> ell_quotient(const Partition& lambda, int ell);
int ell_weight(const Partition& lambda, int ell);
bool is_ell_core(const Partition& lambda, int ell);

/*
 * Inverse of (ell_core, ell_quotient).  Throws if core is not an ell-core
 * or the number of components is not ell.
 */
Partition from_core_and_quotient(const Partition& core,
                                 std::span<const Partition> components,
                                 int ell);

struct HookRemoval {
    Hook hook;
    Partition result;
};

/* Hooks with ell | length, row-major, each paired with lambda \ hook. */
std::vector<HookRemoval> divisible_hooks(const Partition& lambda, int ell);

/*
 * Literal format shared with the command line: "4,2,1", with "-" for the
 * empty partition.
 */
std::vector<int> parse_parts(std::string_view literal);
Partition parse_partition(std::string_view literal);
std::string to_literal(std::span<const int> parts);
inline std::string to_literal(const Partition& lambda) { return to_literal(lambda.parts()); }

/* Used by every level-taking operation; throws for ell < 1. */
void require_level(int ell);

}  // namespace corelab
