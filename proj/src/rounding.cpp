#include "evcredit/rounding.hpp"

#include <cmath>

#include "evcredit/errors.hpp"

namespace evcredit {

double round_half_up(double x, int places) {
    if (places < 0) {
        throw ValidationError("round_half_up: places must be >= 0");
    }
    if (!std::isfinite(x)) {
        return x;
    }
    const double scale = std::pow(10.0, places);
    const double rounded = std::floor(std::fabs(x) * scale + 0.5) / scale;
    return std::copysign(rounded, x);
}

std::int64_t round_half_up_to_int(double x) {
    return static_cast<std::int64_t>(round_half_up(x, 0));
}

} // namespace evcredit
