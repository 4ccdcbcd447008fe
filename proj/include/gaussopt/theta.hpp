#pragma once

/// @file theta.hpp
/// @brief Numerical Jacobi theta function theta(u, tau), the imaginary
///        transformation that exchanges tau with -1/tau, and the
///        regularized theta-form of the field on the observation screen.

#include <complex>

#include "gaussopt/optics.hpp"

namespace gaussopt {

/// theta(u, tau) = sum_{n in Z} exp(pi*i*(2*n*u + tau*n^2)), Im tau > 0.
///
/// The series is summed symmetrically over n = 0, +-1, +-2, ... and truncated
/// at the smallest N for which the magnitude of both frontier terms drops
/// below 1e-18 * (|partial sum| + 1). Absolute error is below 1e-14 for
/// Im tau >= 0.1 and |Im u| <= 2.
/// @throws std::domain_error unless Im tau > 0.
std::complex<double> theta(std::complex<double> u, std::complex<double> tau);

/// Residual |theta(u/tau, -1/tau) - sqrt(-i*tau) * exp(pi*i*u^2/tau) * theta(u, tau)|
/// of the imaginary transformation (principal square-root branch).
/// @throws std::domain_error unless Im tau > 0.
double jacobi_transform_residual(std::complex<double> u,
                                 std::complex<double> tau);

/// Which representation of the screen field to evaluate.
enum class ScreenForm {
    direct_lattice,      ///< series over the grating lattice (variant I)
    reciprocal_lattice,  ///< transformed series over the reciprocal lattice (variant II)
};

/// Regularized theta-form of the screen field at transverse position x2.
///
/// With sigma = A^/B^ + i*eps, variant I evaluates
///   sqrt(i/B^) * exp(i*pi*(D^/B^)*x2^2) * theta(-x2/B^, sigma),
/// and variant II evaluates the exact imaginary-transform partner of the same
/// expression through theta(. , -1/sigma), so the two variants agree to
/// machine precision for every eps > 0 while being computed through two
/// different series. The physical (distributional) field is the eps -> 0
/// limit; discrete amplitudes of that limit live in the pattern module.
/// @throws std::invalid_argument when A^ = 0 or B^ = 0, or eps <= 0.
std::complex<double> phi_theta(double x2, const HatSystem& gh, ScreenForm form,
                               double eps);

}  // namespace gaussopt
