#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evcredit/units.hpp"

namespace evcredit {

// Procurement pathway: where the vehicle was bought and whether it was new.
enum class Pathway { NewDealer = 0, UsedPrivate = 1, UsedDealer = 2 };

inline constexpr std::size_t kPathwayCount = 3;
inline constexpr std::array<Pathway, kPathwayCount> kAllPathways = {
    Pathway::NewDealer, Pathway::UsedPrivate, Pathway::UsedDealer};

constexpr std::size_t pathway_index(Pathway p) { return static_cast<std::size_t>(p); }

// Machine token used in CSV/config files: new_dealer, used_private, used_dealer.
std::string_view pathway_token(Pathway p);
std::optional<Pathway> pathway_from_token(std::string_view token);

// Human-readable label for rendered tables.
std::string_view pathway_label(Pathway p);

// Half-open price interval [lo, hi) in whole dollars; hi absent = unbounded.
struct PriceBracket {
    Money lo;
    std::optional<Money> hi;

    bool contains(Money price) const {
        return price >= lo && (!hi || price < *hi);
    }
    bool operator==(const PriceBracket&) const = default;
};

// Ordered list of disjoint brackets covering [0, inf). Stored as the finite
// lower bounds: cuts[0] == 0, strictly increasing; bracket i spans
// [cuts[i], cuts[i+1]) and the last bracket is unbounded.
class Partition {
public:
    static Partition from_cuts(std::vector<Money> finite_cuts);

    std::size_t size() const { return cuts_.size(); }
    PriceBracket bracket(std::size_t i) const;
    const std::vector<Money>& cuts() const { return cuts_; }

    // Index of the bracket containing the given price.
    std::size_t locate(Money price) const;

    bool operator==(const Partition&) const = default;

private:
    explicit Partition(std::vector<Money> cuts) : cuts_(std::move(cuts)) {}
    std::vector<Money> cuts_;
};

// Respondent counts per (bracket, pathway) over one partition. Counts are
// exact integers end to end; percentages are derived at presentation time.
class BracketTable {
public:
    using Row = std::array<std::int64_t, kPathwayCount>;

    BracketTable(Partition partition, std::vector<Row> counts);

    const Partition& partition() const { return partition_; }
    std::size_t bracket_count() const { return partition_.size(); }

    std::int64_t count(std::size_t bracket, Pathway p) const {
        return counts_[bracket][pathway_index(p)];
    }
    std::int64_t bracket_total(std::size_t bracket) const;
    std::int64_t pathway_total(Pathway p) const;
    std::int64_t grand_total() const;

    const std::vector<Row>& rows() const { return counts_; }

    bool operator==(const BracketTable&) const = default;

private:
    Partition partition_;
    std::vector<Row> counts_;
};

// Label like "Less than $6,000", "$6,000 to $7,999", "$10,000 or more".
std::string bracket_label(const PriceBracket& b);

// Integer with thousands separators: 7951744 -> "7,951,744".
std::string format_money(Money m);
std::string format_grouped(std::int64_t v);

} // namespace evcredit
