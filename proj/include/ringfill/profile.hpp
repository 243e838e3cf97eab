#pragma once

#include <cmath>

namespace ringfill::profile {

/// Square-root cycle-length profile q(t) = sqrt(1 - 4t), t in [0, 1/4].
inline double q(double t) { return std::sqrt(1.0 - 4.0 * t); }

/// I(t) = int_0^t du / q(u) = (1 - q(t)) / 2.
inline double I(double t) { return (1.0 - q(t)) / 2.0; }

/// Stopping time with q(t_eta) = eta.
inline double t_eta(double eta) { return (1.0 - eta * eta) / 4.0; }

}  // namespace ringfill::profile
