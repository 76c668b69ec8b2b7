#pragma once

#include <cmath>

#include "urh/errors.hpp"

namespace urh {

// Ultrarelativistic fluid, p = cs2 * rho, with cs2 = const in (0, 1).
// kappa = cs2 / (1 + cs2) shows up in every jump condition, so it is
// precomputed once here rather than recomputed at use sites.
struct EosParams {
    double cs2;
    double cs;
    double kappa;

    static EosParams from_cs2(double cs2)
    {
        if (!(cs2 > 0.0) || !(cs2 < 1.0) || !std::isfinite(cs2))
            throw DomainError("cs2 must lie in (0, 1), got " + std::to_string(cs2));
        return EosParams{cs2, std::sqrt(cs2), cs2 / (1.0 + cs2)};
    }
};

inline double pressure(double rho, const EosParams& eos)
{
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("pressure: rho must be positive and finite");
    return eos.cs2 * rho;
}

// Entropy density s = rho^(1/(1+cs2)); the normalization constant is taken
// as 1 since only ratios of s ever matter.
inline double entropy_density(double rho, const EosParams& eos)
{
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("entropy_density: rho must be positive and finite");
    return std::pow(rho, 1.0 / (1.0 + eos.cs2));
}

}  // namespace urh
