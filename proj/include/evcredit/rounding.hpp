#pragma once

#include <cstdint>

namespace evcredit {

// FullPrecision carries intermediates at double precision and rounds only
// final values. PaperCompat rounds intermediates the way the published
// tables were produced: displayed percentages half-up to 2 decimals,
// chained population products half-up to integers at each stage, and
// emission segment values half-up to 2 decimals before differencing.
enum class RoundingPolicy {
    FullPrecision,
    PaperCompat,
};

// Round half away from zero at the given decimal place. places must be >= 0.
double round_half_up(double x, int places);

// round_half_up(x, 0) as an integer.
std::int64_t round_half_up_to_int(double x);

} // namespace evcredit
