#pragma once

/// @file talbot.hpp
/// @brief Fractional self-imaging of a delta-comb grating: spot positions and
///        complex spot amplitudes, via two direct finite exponential sums
///        (the particle-route and wave-route expansions, whose equality is a
///        reciprocity law) and via sign-resolved closed forms built from
///        Jacobi symbols and modular inverses.

#include <complex>
#include <vector>

#include "gaussopt/optics.hpp"

namespace gaussopt {

/// Which evaluation route produced an amplitude.
enum class AmplitudeVariant { direct_I, direct_II, closed_I, closed_II };

/// Spot amplitude via the p-term sum over the direct lattice
/// (with e = 1 when p*q is odd, else 0, and m = 2n + q*e):
///   A_I(n) = sqrt(i/p) * sum_{s=0}^{p-1}
///            exp(i*pi*[ ((m*s + q*s^2)/p) + kappa1_hat*m^2/(4*p*q) ]).
/// All exponents are reduced modulo 2 exactly before exponentiation.
/// @throws std::invalid_argument unless gcd(p,q) = 1 and p, q >= 1.
std::complex<double> amplitude_direct_I(const mpz_class& n,
                                        const FractionalParams& params);

/// Spot amplitude via the q-term sum over the reciprocal lattice, aligned to
/// the same prefactor convention as amplitude_direct_I:
///   A_II(n) = i * sqrt(1/q) * sum_{s=0}^{q-1}
///             exp(i*pi*[ ((m*s - p*s^2)/q) + kappa3_hat*m^2/(4*q^2) ]).
/// Equality with amplitude_direct_I is the reciprocity law connecting the
/// two expansions.
/// @throws std::invalid_argument unless gcd(p,q) = 1 and p, q >= 1.
std::complex<double> amplitude_direct_II(const mpz_class& n,
                                         const FractionalParams& params);

/// Sign-resolved closed form of amplitude_direct_I for the standard system
/// [[1, q/p],[0,1]] (kappa1_hat = 1, kappa3_hat = 0). Three parity branches
/// (p even / p odd, q even / both odd), each a Jacobi symbol times a pure
/// phase built from modular inverses taken modulo p.
/// @throws std::invalid_argument unless gcd(p,q) = 1 and p, q >= 1.
std::complex<double> amplitude_closed_I(const mpz_class& n, const mpz_class& p,
                                        const mpz_class& q);

/// Closed form of amplitude_direct_II for the standard system; same branch
/// structure with the modular inverses taken modulo q.
/// @throws std::invalid_argument unless gcd(p,q) = 1 and p, q >= 1.
std::complex<double> amplitude_closed_II(const mpz_class& n, const mpz_class& p,
                                         const mpz_class& q);

/// One spot of the self-image: exact rational position, complex amplitude,
/// intensity = |amplitude|^2.
struct TalbotSpot {
    mpz_class n;
    mpq_class position;
    std::complex<double> amplitude;
    double intensity;
};

/// The fractional self-image pattern over a range of spot indices.
struct TalbotPattern {
    FractionalParams params;
    std::vector<TalbotSpot> spots;
};

/// Builds the pattern for n in [n_min, n_max]: spot n sits at the exact
/// rational position (e/2 + n/q) / kappa2 and carries the amplitude of the
/// chosen evaluation route.
/// @throws std::invalid_argument if n_min > n_max or params are invalid.
TalbotPattern pattern(const FractionalParams& params, const mpz_class& n_min,
                      const mpz_class& n_max, AmplitudeVariant variant);

}  // namespace gaussopt
