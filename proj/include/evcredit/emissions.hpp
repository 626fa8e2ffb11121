#pragma once

#include <string>

#include "evcredit/policy.hpp"
#include "evcredit/rounding.hpp"
#include "evcredit/units.hpp"

namespace evcredit {

// Lifecycle emission parameters for one drivetrain. Grid carbon intensity for
// EVs is carried entirely in fuel_production; fuel_usage stays 0 for EVs.
struct VehicleEmissionParams {
    MassCO2e manufacturing;             // e_vm, tons CO2e
    FuelCycleIntensity fuel_production; // e_fp, gCO2e/MJ
    FuelCycleIntensity fuel_usage;      // e_fu, gCO2e/MJ
    FuelEconomy fuel_economy;           // miles per gallon-equivalent
    EnergyDensity fuel_energy_density{121.33};

    bool operator==(const VehicleEmissionParams&) const = default;
};

// Mileage assumptions: a 15-year, 179,200-mile life split at the 10-year
// ownership point into 129,000 + 50,200 miles.
struct UtilizationProfile {
    Miles lifetime_miles{179'200};
    int lifetime_years{15};
    int owned_years{10};
    Miles miles_first_segment{129'000};
    Miles miles_remaining{50'200};

    bool operator==(const UtilizationProfile&) const = default;
};
void validate(const UtilizationProfile& util);

// One grid-carbon-intensity assumption, expressed as EV fuel-production
// emissions in gCO2e/MJ.
struct GridScenario {
    std::string label;
    FuelCycleIntensity ev_fuel_production;

    bool operator==(const GridScenario&) const = default;
};

// The "bound" axis is the household count, not the grid scenario.
struct BenefitEstimate {
    MassCO2e per_vehicle;          // tons CO2e per vehicle
    double cumulative_lo_mtons;    // million tons, lower household bound
    double cumulative_hi_mtons;    // million tons, upper household bound

    bool operator==(const BenefitEstimate&) const = default;
};

// E_PM = (e_vm * 1e6) / au + (fuel_energy_density / FE) * (e_fp + e_fu),
// in gCO2e per mile. Throws when au or FE is zero.
PerMileIntensity per_mile_emissions(const VehicleEmissionParams& params,
                                    const UtilizationProfile& util);

// Emissions over one mileage segment, in metric tons: miles / 1e6 * E_PM.
MassCO2e segment_emissions(PerMileIntensity per_mile, Miles miles);

// ICE remaining-segment emissions minus EV remaining-segment emissions.
// PaperCompat differences the 2-decimal-rounded segment values.
MassCO2e per_vehicle_benefit(const VehicleEmissionParams& ice, const VehicleEmissionParams& ev,
                             const UtilizationProfile& util, RoundingPolicy rounding);

// Per-vehicle benefit scaled by both household bounds, in million tons.
BenefitEstimate cumulative_lost_benefit(MassCO2e per_vehicle_benefit,
                                        const HouseholdEstimate& households);

} // namespace evcredit
