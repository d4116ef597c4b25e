#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corelab/partition.hpp"

namespace corelab {

/* A partition into distinct parts, stored in decreasing order. */
class BarPartition {
public:
    BarPartition() = default;

    /* Sorts the parts; throws on a repeated or nonpositive part. */
    explicit BarPartition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool contains(int part) const;

    friend bool operator==(const BarPartition&, const BarPartition&) = default;
    friend auto operator<=>(const BarPartition&, const BarPartition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

BarPartition make_bar_partition(std::vector<int> parts);

enum class BarKind { within_row, two_row };

/*
 * A bar, rows counted from 1.  A within-row bar of length d shortens the
 * part in `row` by d; a two-row bar deletes the parts in `row` and
 * `second_row` and has length equal to their sum.  second_row is 0 for
 * within-row bars.
 */
struct Bar {
    BarKind kind = BarKind::within_row;
    int row = 0;
    int second_row = 0;
    int length = 0;

    friend bool operator==(const Bar&, const Bar&) = default;
};

/*
 * Every bar of lambda.  Row i contributes the within-row lengths d in
 * 1..a_i with a_i - d not a part, and a_i + a_j for each later row j;
 * that is a_i bars per row, so |lambda| bars in all.  Bars are listed row
 * by row, longest first.
 */
std::vector<Bar> bars(const BarPartition& lambda);

/* Throws if b is not one of bars(lambda). */
BarPartition remove_bar(const BarPartition& lambda, const Bar& b);

/* Throws std::invalid_argument unless ell is odd and positive. */
void require_odd_level(int ell);

/*
 * Bars removed by bar_core, in order: at each step the longest bar whose
 * length is divisible by ell, ties going to the smaller row.
 */
std::vector<Bar> bar_core_trace(const BarPartition& lambda, int ell);

BarPartition bar_core(const BarPartition& lambda, int ell);
int bar_weight(const BarPartition& lambda, int ell);
bool is_bar_core(const BarPartition& lambda, int ell);

struct BarQuotientDecomposition {
    int ell = 1;
    BarPartition core;
    BarPartition component0;
    std::vector<Partition> components;  // (ell - 1) / 2 entries
    int weight = 0;
};

/*
 * component0 collects a / ell over the parts divisible by ell.  Component
 * i pairs residues i and ell - i on a two-sided bead sequence: position
 * k >= 0 is filled when ell*k + i is a part, position -k-1 is filled
 * unless ell*k + (ell - i) is a part.  Each filled position contributes a
 * part equal to the number of gaps below it.
 */
BarQuotientDecomposition bar_quotient(const BarPartition& lambda, int ell);

/*
 * Signed bead surplus of residue pair (i, ell - i): the number of parts
 * congruent to i minus those congruent to ell - i.  Unchanged by bar
 * removal, so it is read off the core.
 */
int bar_charge(const BarPartition& lambda, int ell, int residue);

/*
 * Inverse of (bar_core, bar_quotient).  Throws if core is not an
 * ell-bar-core or the component count is wrong.
 */
BarPartition from_bar_core_and_quotient(const BarPartition& core,
                                        const BarPartition& component0,
                                        std::span<const Partition> components,
                                        int ell);

/* Strictly decreasing literal, "-" for empty. */
BarPartition parse_bar_partition(std::string_view literal);
inline std::string to_literal(const BarPartition& lambda) { return to_literal(lambda.parts()); }

}  // namespace corelab
