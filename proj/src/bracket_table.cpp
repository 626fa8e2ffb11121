#include "evcredit/bracket_table.hpp"

#include <algorithm>

#include "evcredit/errors.hpp"

namespace evcredit {

std::string_view pathway_token(Pathway p) {
    switch (p) {
    case Pathway::NewDealer: return "new_dealer";
    case Pathway::UsedPrivate: return "used_private";
    case Pathway::UsedDealer: return "used_dealer";
    }
    return "unknown";
}

std::optional<Pathway> pathway_from_token(std::string_view token) {
    for (Pathway p : kAllPathways) {
        if (pathway_token(p) == token) {
            return p;
        }
    }
    return std::nullopt;
}

std::string_view pathway_label(Pathway p) {
    switch (p) {
    case Pathway::NewDealer: return "New (dealer)";
    case Pathway::UsedPrivate: return "Preowned (private seller)";
    case Pathway::UsedDealer: return "Preowned (dealer)";
    }
    return "unknown";
}

Partition Partition::from_cuts(std::vector<Money> finite_cuts) {
    if (finite_cuts.empty()) {
        throw ValidationError("partition: at least one cut required");
    }
    if (finite_cuts.front() != Money(0)) {
        throw ValidationError("partition: first cut must be $0, got $" +
                              std::to_string(finite_cuts.front().dollars()));
    }
    for (std::size_t i = 1; i < finite_cuts.size(); ++i) {
        if (!(finite_cuts[i - 1] < finite_cuts[i])) {
            throw ValidationError("partition: cuts must be strictly increasing near $" +
                                  std::to_string(finite_cuts[i].dollars()));
        }
    }
    return Partition(std::move(finite_cuts));
}

PriceBracket Partition::bracket(std::size_t i) const {
    if (i + 1 < cuts_.size()) {
        return PriceBracket{cuts_[i], cuts_[i + 1]};
    }
    return PriceBracket{cuts_[i], std::nullopt};
}

std::size_t Partition::locate(Money price) const {
    if (price < Money(0)) {
        throw ValidationError("locate: negative price");
    }
    auto it = std::upper_bound(cuts_.begin(), cuts_.end(), price);
    return static_cast<std::size_t>(it - cuts_.begin()) - 1;
}

BracketTable::BracketTable(Partition partition, std::vector<Row> counts)
    : partition_(std::move(partition)), counts_(std::move(counts)) {
    if (counts_.size() != partition_.size()) {
        throw ValidationError("bracket table: row count does not match partition size");
    }
    for (const Row& row : counts_) {
        for (std::int64_t c : row) {
            if (c < 0) {
                throw ValidationError("bracket table: negative count");
            }
        }
    }
}

std::int64_t BracketTable::bracket_total(std::size_t bracket) const {
    std::int64_t total = 0;
    for (std::int64_t c : counts_[bracket]) {
        total += c;
    }
    return total;
}

std::int64_t BracketTable::pathway_total(Pathway p) const {
    std::int64_t total = 0;
    for (const Row& row : counts_) {
        total += row[pathway_index(p)];
    }
    return total;
}

std::int64_t BracketTable::grand_total() const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        total += bracket_total(i);
    }
    return total;
}

std::string format_grouped(std::int64_t v) {
    const bool neg = v < 0;
    std::string digits = std::to_string(neg ? -v : v);
    std::string out;
    out.reserve(digits.size() + digits.size() / 3 + 1);
    std::size_t lead = digits.size() % 3;
    if (lead == 0) {
        lead = 3;
    }
    out.append(digits, 0, lead);
    for (std::size_t i = lead; i < digits.size(); i += 3) {
        out += ',';
        out.append(digits, i, 3);
    }
    return neg ? "-" + out : out;
}

std::string format_money(Money m) {
    return "$" + format_grouped(m.dollars());
}

std::string bracket_label(const PriceBracket& b) {
    if (!b.hi) {
        return format_money(b.lo) + " or more";
    }
    if (b.lo == Money(0)) {
        return "Less than " + format_money(*b.hi);
    }
    return format_money(b.lo) + " to " + format_money(*b.hi - Money(1));
}

} // namespace evcredit
