#pragma once

namespace relwave {

/// Physical constants shared by every module. All public interfaces work in
/// SI; natural() provides a C = 1 profile so algebraic identities can be
/// checked without unit noise.
struct PhysicalConstants {
    double C;     ///< speed of light, m/s
    double e;     ///< elementary charge, C
    double eps0;  ///< vacuum permittivity, F/m
    double mu0;   ///< vacuum permeability, H/m
    double hbar;  ///< reduced Planck constant, J s

    static PhysicalConstants si();
    static PhysicalConstants natural();

    /// Throws std::domain_error unless every field is strictly positive and
    /// C equals 1/sqrt(eps0*mu0) to 1e-12 relative.
    void validate() const;
};

}  // namespace relwave
