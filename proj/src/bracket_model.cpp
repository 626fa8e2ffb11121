#include "evcredit/bracket_model.hpp"

#include <algorithm>

#include "evcredit/errors.hpp"

namespace evcredit {

namespace {

void validate_spec(const ShiftSpec& spec) {
    if (spec.amount < Money(0)) {
        throw ValidationError("shift: amount must be >= 0");
    }
    if (spec.eligible_pathways.empty()) {
        throw ValidationError("shift: eligible_pathways must be non-empty");
    }
}

Money shift_endpoint(Money bound, const ShiftSpec& spec) {
    if (!spec.respect_percentage_cap) {
        return bound + spec.amount;
    }
    const Money capped = bound.scaled(spec.percentage_cap.value());
    return bound + std::min(spec.amount, capped);
}

} // namespace

Partition shift_partition(const Partition& partition, const ShiftSpec& spec) {
    validate_spec(spec);
    std::vector<Money> cuts;
    cuts.reserve(partition.cuts().size());
    for (Money cut : partition.cuts()) {
        cuts.push_back(shift_endpoint(cut, spec));
    }
    // The lowest shifted bracket covers everything below it, so the shifted
    // partition again starts at $0.
    cuts.front() = Money(0);
    return Partition::from_cuts(std::move(cuts));
}

BracketTable shift_brackets(const BracketTable& table, const ShiftSpec& spec) {
    return BracketTable(shift_partition(table.partition(), spec), table.rows());
}

std::vector<Money> common_boundaries(const Partition& p1, const Partition& p2,
                                     std::size_t min_finite_cuts) {
    std::vector<Money> cuts;
    std::set_intersection(p1.cuts().begin(), p1.cuts().end(),
                          p2.cuts().begin(), p2.cuts().end(),
                          std::back_inserter(cuts));
    // Both partitions start at 0, so the intersection is never empty.
    if (cuts.size() < 1 + min_finite_cuts) {
        throw ValidationError(
            "common_boundaries: partitions share only " + std::to_string(cuts.size() - 1) +
            " interior cut(s), " + std::to_string(min_finite_cuts) +
            " required; partitions are incompatible");
    }
    return cuts;
}

std::vector<Money> union_boundaries(const Partition& p1, const Partition& p2) {
    std::vector<Money> cuts;
    std::set_union(p1.cuts().begin(), p1.cuts().end(),
                   p2.cuts().begin(), p2.cuts().end(),
                   std::back_inserter(cuts));
    return cuts;
}

namespace {

// Sum source counts into the merged partition for one pathway. Every source
// bracket must nest inside exactly one merged bracket.
void accumulate_pathway(const BracketTable& source, Pathway p, const Partition& merged,
                        std::vector<BracketTable::Row>& dest) {
    for (std::size_t i = 0; i < source.bracket_count(); ++i) {
        const PriceBracket src = source.partition().bracket(i);
        const std::size_t j = merged.locate(src.lo);
        const PriceBracket tgt = merged.bracket(j);
        const bool fits = !tgt.hi || (src.hi && *src.hi <= *tgt.hi);
        if (!fits) {
            throw ValidationError("rebin: source bracket " + bracket_label(src) +
                                  " straddles a merged boundary at " +
                                  bracket_label(tgt));
        }
        dest[j][pathway_index(p)] += source.count(i, p);
    }
}

} // namespace

RebinResult rebin_into(const BracketTable& before_table, const ShiftSpec& spec,
                       const Partition& merged) {
    const BracketTable shifted = shift_brackets(before_table, spec);

    std::vector<BracketTable::Row> before_rows(merged.size(), BracketTable::Row{0, 0, 0});
    std::vector<BracketTable::Row> after_rows(merged.size(), BracketTable::Row{0, 0, 0});

    for (Pathway p : kAllPathways) {
        accumulate_pathway(before_table, p, merged, before_rows);
        if (spec.eligible_pathways.count(p) > 0) {
            accumulate_pathway(shifted, p, merged, after_rows);
        } else {
            accumulate_pathway(before_table, p, merged, after_rows);
        }
    }

    RebinResult result{merged, BracketTable(merged, std::move(before_rows)),
                       BracketTable(merged, std::move(after_rows))};
    for (Pathway p : kAllPathways) {
        if (result.before.pathway_total(p) != before_table.pathway_total(p) ||
            result.after.pathway_total(p) != before_table.pathway_total(p)) {
            throw ValidationError("rebin: pathway total not conserved");
        }
    }
    return result;
}

RebinResult rebin(const BracketTable& before_table, const ShiftSpec& spec) {
    const Partition shifted = shift_partition(before_table.partition(), spec);
    const Partition merged =
        Partition::from_cuts(common_boundaries(before_table.partition(), shifted));
    return rebin_into(before_table, spec, merged);
}

BracketShares bracket_shares(const BracketTable& table) {
    BracketShares out;
    out.share.resize(table.bracket_count(), {0.0, 0.0, 0.0});
    out.empty.resize(table.bracket_count(), false);
    for (std::size_t i = 0; i < table.bracket_count(); ++i) {
        const std::int64_t total = table.bracket_total(i);
        if (total == 0) {
            out.empty[i] = true;
            continue;
        }
        for (Pathway p : kAllPathways) {
            out.share[i][pathway_index(p)] =
                static_cast<double>(table.count(i, p)) / static_cast<double>(total);
        }
    }
    return out;
}

std::vector<std::array<double, kPathwayCount>> real_shares(const BracketTable& table) {
    const std::int64_t total = table.grand_total();
    if (total == 0) {
        throw ValidationError("real_shares: table has no respondents");
    }
    std::vector<std::array<double, kPathwayCount>> out(table.bracket_count(), {0.0, 0.0, 0.0});
    for (std::size_t i = 0; i < table.bracket_count(); ++i) {
        for (Pathway p : kAllPathways) {
            out[i][pathway_index(p)] =
                static_cast<double>(table.count(i, p)) / static_cast<double>(total);
        }
    }
    return out;
}

PathwayAggregates pathway_aggregates(const BracketTable& table) {
    const std::int64_t total = table.grand_total();
    if (total == 0) {
        throw ValidationError("pathway_aggregates: table has no respondents");
    }
    const std::int64_t priv = table.pathway_total(Pathway::UsedPrivate);
    const std::int64_t dealer = table.pathway_total(Pathway::UsedDealer);
    const std::int64_t preowned = priv + dealer;
    if (preowned == 0) {
        throw ValidationError("pathway_aggregates: no preowned purchases; "
                              "conditional shares undefined");
    }
    return PathwayAggregates{
        static_cast<double>(preowned) / static_cast<double>(total),
        static_cast<double>(dealer) / static_cast<double>(preowned),
        static_cast<double>(priv) / static_cast<double>(preowned),
    };
}

AdjacentDeltas adjacent_deltas(const RebinResult& result, Pathway pathway) {
    const auto before = real_shares(result.before);
    const auto after = real_shares(result.after);
    AdjacentDeltas out;
    const std::size_t idx = pathway_index(pathway);
    for (std::size_t i = 0; i + 1 < result.merged.size(); ++i) {
        out.before.push_back(before[i + 1][idx] - before[i][idx]);
        out.after.push_back(after[i + 1][idx] - after[i][idx]);
    }
    return out;
}

} // namespace evcredit
