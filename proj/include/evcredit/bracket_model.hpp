#pragma once

#include <array>
#include <set>
#include <vector>

#include "evcredit/bracket_table.hpp"
#include "evcredit/units.hpp"

namespace evcredit {

// How a purchase credit re-prices credit-eligible purchases.
struct ShiftSpec {
    Money amount{4000};
    std::set<Pathway> eligible_pathways{Pathway::UsedDealer};
    // When set, each bracket endpoint moves by min(amount, percentage_cap * endpoint)
    // instead of the flat amount.
    bool respect_percentage_cap{false};
    Rate percentage_cap{0.30};
};

// Shift a partition's bounds per the spec. The lowest shifted bracket is
// extended down to $0, so the re-priced brackets again cover [0, inf).
Partition shift_partition(const Partition& partition, const ShiftSpec& spec);

// Re-price the table: the partition is shifted and every pathway's count
// vector is carried over bracket-by-bracket. Only the rows of eligible
// pathways are meaningful downstream; rebin() reads non-eligible pathways
// from the unshifted table. With a zero shift this is the identity.
BracketTable shift_brackets(const BracketTable& table, const ShiftSpec& spec);

// Sorted intersection of the two partitions' boundary sets. Returns the
// finite cuts (always including 0); the unbounded tail is implied. Throws
// when fewer than min_finite_cuts interior cuts survive, which signals
// partitions too dissimilar to compare.
std::vector<Money> common_boundaries(const Partition& p1, const Partition& p2,
                                     std::size_t min_finite_cuts = 0);

// Union of both partitions' boundary sets (the refinement). Fallback for
// shifts whose boundary intersection has no interior cuts.
std::vector<Money> union_boundaries(const Partition& p1, const Partition& p2);

// Before/after tables over one merged partition.
struct RebinResult {
    Partition merged;
    BracketTable before;
    BracketTable after;

    bool operator==(const RebinResult&) const = default;
};

// Sum the original counts and the shifted eligible-pathway counts into the
// merged partition defined by the common boundaries of the original and
// shifted partitions. Grand and per-pathway totals are preserved.
RebinResult rebin(const BracketTable& before_table, const ShiftSpec& spec);

// As rebin(), but summing into an explicitly provided merged partition
// (used for the union-refinement fallback).
RebinResult rebin_into(const BracketTable& before_table, const ShiftSpec& spec,
                       const Partition& merged);

// Within-bracket composition: share = count / bracket total. Empty brackets
// carry zero shares and are flagged rather than reported as NaN.
struct BracketShares {
    std::vector<std::array<double, kPathwayCount>> share;
    std::vector<bool> empty;

    bool operator==(const BracketShares&) const = default;
};
BracketShares bracket_shares(const BracketTable& table);

// Whole-sample ("real") shares: count / grand total. Throws on an empty table.
std::vector<std::array<double, kPathwayCount>> real_shares(const BracketTable& table);

struct PathwayAggregates {
    double preowned_share;            // (used_private + used_dealer) / total
    double dealer_share_of_preowned;  // used_dealer / preowned
    double private_share_of_preowned; // used_private / preowned

    bool operator==(const PathwayAggregates&) const = default;
};
// Throws when the table is empty or, for the conditional shares, when no
// preowned purchases exist.
PathwayAggregates pathway_aggregates(const BracketTable& table);

// Real-share differences between adjacent merged brackets, before and after.
struct AdjacentDeltas {
    std::vector<double> before;
    std::vector<double> after;

    bool operator==(const AdjacentDeltas&) const = default;
};
AdjacentDeltas adjacent_deltas(const RebinResult& result, Pathway pathway);

} // namespace evcredit
