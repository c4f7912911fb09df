#pragma once

#include "qcs/errors.hpp"

#include <cmath>

namespace qcs {

/// Thermal Lindblad channel: damping at rate gamma, thermal pumping at rate
/// delta, free rotation omega.  Stored as (t_rel, nbar_inf, omega) with
/// t_rel = (gamma - delta)^{-1} and nbar_inf = delta * t_rel.
struct ChannelParams {
    double t_rel = 1.0;
    double nbar_inf = 0.0;
    double omega = 0.0;

    double gamma() const { return (1.0 + nbar_inf) / t_rel; }
    double delta() const { return nbar_inf / t_rel; }

    void validate() const {
        if (!(std::isfinite(t_rel) && t_rel > 0.0)) {
            throw InvalidSpec("channel: t_rel must be positive");
        }
        if (!(std::isfinite(nbar_inf) && nbar_inf >= 0.0)) {
            throw InvalidSpec("channel: nbar_inf must be >= 0");
        }
        if (!std::isfinite(omega)) throw InvalidSpec("channel: omega must be finite");
    }
};

}  // namespace qcs
