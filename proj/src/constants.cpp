#include "relwave/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relwave {

PhysicalConstants PhysicalConstants::si() {
    PhysicalConstants k{};
    k.C = 299792458.0;
    k.e = 1.602176634e-19;
    k.mu0 = 4.0 * std::numbers::pi * 1e-7;
    k.eps0 = 1.0 / (k.mu0 * k.C * k.C);  // keeps C = 1/sqrt(eps0*mu0) exact
    k.hbar = 1.054571817e-34;
    return k;
}

PhysicalConstants PhysicalConstants::natural() {
    return {1.0, 1.0, 1.0, 1.0, 1.0};
}

void PhysicalConstants::validate() const {
    if (!(C > 0.0) || !(e > 0.0) || !(eps0 > 0.0) || !(mu0 > 0.0) || !(hbar > 0.0))
        throw std::domain_error("physical constants must all be strictly positive");
    const double c_derived = 1.0 / std::sqrt(eps0 * mu0);
    if (std::abs(c_derived - C) > 1e-12 * C)
        throw std::domain_error("constants are inconsistent: C != 1/sqrt(eps0*mu0)");
}

}  // namespace relwave
