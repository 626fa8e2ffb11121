#include "evcredit/policy.hpp"

#include <algorithm>

#include "evcredit/errors.hpp"

namespace evcredit {

std::string_view describe(IneligibilityReason r) {
    switch (r) {
    case IneligibilityReason::PriceCap: return "price cap";
    case IneligibilityReason::NotDealerPurchase: return "not a dealer purchase";
    case IneligibilityReason::NewVehicle: return "new vehicle purchase";
    case IneligibilityReason::VehicleTooNew: return "vehicle younger than minimum age";
    case IneligibilityReason::IncomeLimit: return "income at or above limit";
    }
    return "unknown";
}

CreditDecision credit_amount(const CreditPolicy& policy, const PurchaseProfile& purchase) {
    if (purchase.price < Money(0)) {
        throw ValidationError("credit_amount: negative price");
    }
    if (purchase.vehicle_age_years < 0) {
        throw ValidationError("credit_amount: negative vehicle age");
    }

    CreditDecision decision;
    if (purchase.price >= policy.price_cap) {
        decision.reasons.push_back(IneligibilityReason::PriceCap);
    }
    if (purchase.pathway == Pathway::NewDealer) {
        decision.reasons.push_back(IneligibilityReason::NewVehicle);
    } else if (policy.dealer_required && purchase.pathway != Pathway::UsedDealer) {
        decision.reasons.push_back(IneligibilityReason::NotDealerPurchase);
    }
    if (purchase.vehicle_age_years < policy.min_vehicle_age_years) {
        decision.reasons.push_back(IneligibilityReason::VehicleTooNew);
    }
    const Money limit = purchase.filing == Filing::Joint ? policy.income_limit_joint
                                                         : policy.income_limit_single;
    if (purchase.buyer_income >= limit) {
        decision.reasons.push_back(IneligibilityReason::IncomeLimit);
    }

    if (decision.reasons.empty()) {
        decision.amount =
            std::min(policy.max_credit, purchase.price.scaled(policy.percentage_cap.value()));
    }
    return decision;
}

namespace {

std::int64_t chain(std::int64_t start, std::initializer_list<double> factors,
                   RoundingPolicy rounding) {
    if (rounding == RoundingPolicy::PaperCompat) {
        std::int64_t value = start;
        for (double f : factors) {
            value = round_half_up_to_int(static_cast<double>(value) * f);
        }
        return value;
    }
    double value = static_cast<double>(start);
    for (double f : factors) {
        value *= f;
    }
    return round_half_up_to_int(value);
}

} // namespace

HouseholdEstimate scale_households(const PopulationParams& params, RoundingPolicy rounding) {
    if (params.total_households < 0) {
        throw ValidationError("scale_households: negative household total");
    }
    if (params.ownership_share_lo > params.ownership_share_hi) {
        throw ValidationError("scale_households: ownership_share_lo exceeds ownership_share_hi");
    }

    const double lis = params.low_income_share.value();
    const double own_lo = params.ownership_share_lo.value();
    const double own_hi = params.ownership_share_hi.value();
    const double pre = params.preowned_share.value();
    const double priv = params.private_seller_share.value();
    const std::int64_t total = params.total_households;

    HouseholdEstimate est{};
    est.low_income_households = chain(total, {lis}, rounding);
    if (rounding == RoundingPolicy::PaperCompat) {
        est.owners_lo = chain(est.low_income_households, {own_lo}, rounding);
        est.owners_hi = chain(est.low_income_households, {own_hi}, rounding);
        est.ineligible_lo = chain(est.owners_lo, {pre, priv}, rounding);
        est.ineligible_hi = chain(est.owners_hi, {pre, priv}, rounding);
    } else {
        est.owners_lo = chain(total, {lis, own_lo}, rounding);
        est.owners_hi = chain(total, {lis, own_hi}, rounding);
        est.ineligible_lo = chain(total, {lis, own_lo, pre, priv}, rounding);
        est.ineligible_hi = chain(total, {lis, own_hi, pre, priv}, rounding);
    }
    return est;
}

} // namespace evcredit
