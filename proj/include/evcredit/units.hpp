#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "evcredit/errors.hpp"

namespace evcredit {

// Whole US dollars. All monetary quantities in the model are integral;
// fractional results of scaling are truncated toward zero.
class Money {
public:
    constexpr Money() = default;
    constexpr explicit Money(std::int64_t dollars) : dollars_(dollars) {}

    constexpr std::int64_t dollars() const { return dollars_; }

    constexpr Money operator+(Money other) const { return Money(dollars_ + other.dollars_); }
    constexpr Money operator-(Money other) const { return Money(dollars_ - other.dollars_); }
    constexpr auto operator<=>(const Money&) const = default;

    // Scale by a non-negative factor, truncating to whole dollars.
    Money scaled(double factor) const {
        return Money(static_cast<std::int64_t>(std::floor(static_cast<double>(dollars_) * factor)));
    }

private:
    std::int64_t dollars_ = 0;
};

// Dimensionless fraction; construction enforces [0, 1].
class Rate {
public:
    constexpr Rate() = default;
    explicit Rate(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ValidationError("rate out of [0, 1]: " + std::to_string(value));
        }
    }

    constexpr double value() const { return value_; }
    constexpr auto operator<=>(const Rate&) const = default;

private:
    double value_ = 0.0;
};

// Tagged scalar quantity. Addition and subtraction are only defined within
// one unit tag, so mixing e.g. gCO2e/MJ with gCO2e/mi fails to compile.
template <class Tag>
class Qty {
public:
    constexpr Qty() = default;
    constexpr explicit Qty(double value) : value_(value) {}

    constexpr double value() const { return value_; }

    constexpr Qty operator+(Qty other) const { return Qty(value_ + other.value_); }
    constexpr Qty operator-(Qty other) const { return Qty(value_ - other.value_); }
    constexpr Qty operator*(double s) const { return Qty(value_ * s); }
    constexpr Qty operator/(double s) const { return Qty(value_ / s); }
    constexpr auto operator<=>(const Qty&) const = default;

private:
    double value_ = 0.0;
};

struct TonsCo2eTag {};
struct GramsPerMegajouleTag {};
struct GramsPerMileTag {};
struct MilesTag {};
struct MilesPerGallonTag {};
struct MegajoulesPerGallonTag {};

using MassCO2e = Qty<TonsCo2eTag>;                    // metric tons CO2e
using FuelCycleIntensity = Qty<GramsPerMegajouleTag>; // gCO2e/MJ
using PerMileIntensity = Qty<GramsPerMileTag>;        // gCO2e/mi
using Miles = Qty<MilesTag>;
using FuelEconomy = Qty<MilesPerGallonTag>;           // miles per gallon-equivalent
using EnergyDensity = Qty<MegajoulesPerGallonTag>;    // MJ per gallon-equivalent

} // namespace evcredit
