#pragma once

/// @file gauss_sum.hpp
/// @brief Quadratic Gauss sums: direct evaluation, closed forms for prime
///        modulus, Legendre-symbol reduction, and the Hecke reciprocity
///        identity exchanging the roles of the two moduli.

#include <complex>
#include <gmpxx.h>

#include "gaussopt/exact.hpp"

namespace gaussopt {

/// Which exponential normalization a Gauss sum value was computed with.
enum class GaussVariant { full, half };

/// G(p,q,d) = sum_{c=0}^{q-1} exp(2*pi*i * p * (c+d)^2 / q).
///
/// Each term's exponent is reduced modulo 1 exactly (rational arithmetic)
/// before the complex exponential is evaluated.
/// @param d rational offset of the summation index.
/// @throws std::invalid_argument unless q >= 1 and gcd(p, q) = 1.
std::complex<double> gauss_sum_full(const mpz_class& p, const mpz_class& q,
                                    const mpq_class& d = 0);

/// G'(p,q,d) = sum_{c=0}^{q-1} exp(pi*i * p * (c+d)^2 / q)  (half exponent).
/// @throws std::invalid_argument unless q >= 1 and gcd(p, q) = 1.
std::complex<double> gauss_sum_half(const mpz_class& p, const mpz_class& q,
                                    const mpq_class& d = 0);

/// Sign-resolved closed form for prime modulus:
///   G(1,q) = sqrt(q)   if q == 1 (mod 4),
///   G(1,q) = i*sqrt(q) if q == 3 (mod 4).
/// @throws std::invalid_argument if q is not an odd prime.
std::complex<double> closed_form_G1(const mpz_class& q);

/// Legendre reduction G(p,q) = (p|q) * G(1,q) for odd prime q; must agree
/// with the direct summation within floating-point tolerance.
/// @throws std::invalid_argument unless q is an odd prime and gcd(p,q) = 1.
std::complex<double> legendre_reduction(const mpz_class& p, const mpz_class& q);

/// Both sides of the reciprocity identity together with their difference.
struct ReciprocityReport {
    std::complex<double> lhs;  ///< |q|^{-1/2} * sum_{c mod q} exp(i*pi*p(c+d)^2/q)
    std::complex<double> rhs;  ///< e^{i*pi*sgn(pq)/4} |p|^{-1/2} sum_{c mod p} exp(-i*pi*q c^2/p - 2*pi*i*d*c)
    double residual;           ///< |lhs - rhs|
    bool asserted;             ///< true iff p*q is even (the classical validity domain)
};

/// Evaluates both sides of the reciprocity identity
///   |q|^{-1/2} sum_{c mod q} e^{i pi p (c+d)^2 / q}
///     = e^{i pi sgn(pq)/4} |p|^{-1/2} sum_{c mod p} e^{-i pi q c^2/p - 2 pi i d c}
/// and reports |LHS - RHS|. The identity is asserted by the verification
/// sweeps only when p*q is even; odd-odd pairs are measured and flagged.
/// @throws std::invalid_argument unless p, q are nonzero and coprime.
ReciprocityReport reciprocity_residual(const mpz_class& p, const mpz_class& q,
                                       const mpz_class& d = 0);

}  // namespace gaussopt
