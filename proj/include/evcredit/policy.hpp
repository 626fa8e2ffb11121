#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "evcredit/bracket_table.hpp"
#include "evcredit/rounding.hpp"
#include "evcredit/units.hpp"

namespace evcredit {

// Qualification rules for the used clean-vehicle purchase credit.
struct CreditPolicy {
    Money max_credit{4000};
    Rate percentage_cap{0.30};
    Money price_cap{25000};
    int min_vehicle_age_years{2};
    Money income_limit_joint{150000};
    Money income_limit_single{75000};
    bool dealer_required{true};

    bool operator==(const CreditPolicy&) const = default;
};

enum class Filing { Joint, Single };

struct PurchaseProfile {
    Money price;
    Pathway pathway;
    int vehicle_age_years;
    Money buyer_income;
    Filing filing;
};

enum class IneligibilityReason {
    PriceCap,          // price at or above the price cap
    NotDealerPurchase, // preowned bought from a private seller
    NewVehicle,        // new purchases never qualify
    VehicleTooNew,     // below the minimum vehicle age
    IncomeLimit,       // income at or above the applicable limit
};
std::string_view describe(IneligibilityReason r);

struct CreditDecision {
    Money amount{0};
    std::vector<IneligibilityReason> reasons;

    bool eligible() const { return reasons.empty(); }
};

// Evaluate every rule; an ineligible purchase yields amount 0 plus the full
// reason list. An eligible one yields min(max_credit, percentage_cap * price)
// truncated to whole dollars.
CreditDecision credit_amount(const CreditPolicy& policy, const PurchaseProfile& purchase);

// National scaling inputs. Default shares are the published 4-decimal values
// so PaperCompat reproduces the household table digit for digit.
struct PopulationParams {
    std::int64_t total_households{125'736'353};
    Rate low_income_share{0.267};
    Rate ownership_share_lo{0.8092};
    Rate ownership_share_hi{0.8575};
    Rate preowned_share{0.7791};
    Rate private_seller_share{0.3757};

    bool operator==(const PopulationParams&) const = default;
};

struct HouseholdEstimate {
    std::int64_t low_income_households;
    std::int64_t owners_lo;
    std::int64_t owners_hi;
    std::int64_t ineligible_lo;
    std::int64_t ineligible_hi;

    bool operator==(const HouseholdEstimate&) const = default;
};

// Chained products total -> low-income -> owners -> preowned -> private-seller.
// PaperCompat rounds half-up to an integer after every multiplication;
// FullPrecision rounds each reported value once from the exact chain.
HouseholdEstimate scale_households(const PopulationParams& params, RoundingPolicy rounding);

} // namespace evcredit
