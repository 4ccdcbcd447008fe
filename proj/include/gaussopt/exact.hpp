#pragma once

/// @file exact.hpp
/// @brief Exact integer/rational arithmetic and elementary number theory:
///        extended gcd, modular inverses with canonical Bezout representatives,
///        Legendre/Jacobi symbols, and exact rational phase evaluation.
///
/// All integers are arbitrary precision (GMP); there is no silent overflow
/// anywhere in the library. Phase arguments of the form exp(i*pi*r) with
/// rational r are reduced modulo 2 exactly before any floating-point
/// transcendental is evaluated, which eliminates catastrophic cancellation
/// for large parameters.

#include <complex>
#include <gmpxx.h>

namespace gaussopt {

/// Result of the extended Euclidean algorithm: s*a + t*b = g = gcd(a,b) > 0.
struct ExtGcd {
    mpz_class g;  ///< gcd(a, b), always positive
    mpz_class s;  ///< cofactor of a
    mpz_class t;  ///< cofactor of b
};

/// Extended Euclidean algorithm with deterministic cofactors.
///
/// The cofactor of `a` is normalized to the least non-negative residue
/// modulo b/g (when b != 0), so results are stable across library versions.
/// @throws std::invalid_argument if both arguments are zero.
ExtGcd ext_gcd(const mpz_class& a, const mpz_class& b);

/// Least positive inverse: returns r in [1, q) with p*r == 1 (mod q).
///
/// The degenerate modulus q = 1 returns 1 by convention so that parameter
/// sweeps stay total (everything is congruent modulo 1).
/// @throws std::invalid_argument if q < 1 or gcd(p, q) != 1.
mpz_class mod_inverse(const mpz_class& p, const mpz_class& q);

/// Canonical Bezout data for a coprime pair p, q >= 1.
///
/// Two families of representatives of the inverse residues appear in the
/// lattice decomposition of the Talbot system:
///   - bracket values: the least positive representatives [1/p]_q in [1, q);
///   - brace values: shifted representatives chosen so the integer identity
///       p*{1/p}_q + q*{1/q}_p = 1
///     holds exactly (equivalently p*{1/p}_q - q*{-1/q}_p = 1 with
///     {-1/q}_p = -{1/q}_p), making the 2x2 matrix factorization
///     [[1,q/p],[0,1]] = [[1/p,0],[{1/q}_p,p]] * [[p,q],[{-1/q}_p,{1/p}_q]]
///     an exact identity with det = 1 on the integer factor.
struct InversePair {
    mpz_class p;                ///< first element of the coprime pair
    mpz_class q;                ///< second element of the coprime pair
    mpz_class inv_p_mod_q;      ///< [1/p]_q in [1, q); 1 when q == 1
    mpz_class inv_neg_q_mod_p;  ///< {-1/q}_p = -{1/q}_p
    mpz_class shift;            ///< n with {1/p}_q = [1/p]_q - n*q

    /// {1/p}_q, the shifted representative with p*{1/p}_q + q*{1/q}_p = 1.
    mpz_class brace_inv_p_mod_q() const { return inv_p_mod_q - shift * q; }
    /// {1/q}_p = -inv_neg_q_mod_p.
    mpz_class brace_inv_q_mod_p() const { return -inv_neg_q_mod_p; }
};

/// Computes the canonical Bezout representatives described above.
///
/// Convention: {1/q}_p is the least positive representative [1/q]_p (taken
/// as 0 in the degenerate case p = 1, so that (1,1) yields {1/1}_1 = 1,
/// {-1/1}_1 = 0), and {1/p}_q = (1 - q*{1/q}_p)/p.
/// @throws std::invalid_argument unless p, q >= 1 and gcd(p, q) = 1.
InversePair canonical_bezout(const mpz_class& p, const mpz_class& q);

/// Legendre symbol (p|s) for an odd prime s: +1 for a nonzero quadratic
/// residue, -1 for a non-residue, 0 when s divides p.
/// @throws std::invalid_argument if s is not an odd prime.
int legendre(const mpz_class& p, const mpz_class& s);

/// Jacobi symbol (p|q) for odd positive q; multiplicative extension of the
/// Legendre symbol, with (p|1) = +1 (empty product) and 0 on shared factors.
/// @throws std::invalid_argument if q is even or q <= 0.
int jacobi(const mpz_class& p, const mpz_class& q);

/// Parity indicator e_{qp}: 1 if q*p is odd, 0 if q*p is even. The odd case
/// shifts the self-image lattice of a periodic grating by half a period.
int parity_indicator(const mpz_class& q, const mpz_class& p);

/// Reduces r modulo 2 exactly into the interval (-1, 1].
mpq_class reduce_mod_2(const mpq_class& r);

/// exp(i*pi*r) for exact rational r, evaluated after exact reduction of r
/// modulo 2. |r_reduced| <= 1, so the double-precision trigonometric calls
/// never see large arguments.
std::complex<double> exp_i_pi(const mpq_class& r);

/// exp(2*pi*i*r) for exact rational r (reduces 2r modulo 2 exactly).
std::complex<double> exp_2pi_i(const mpq_class& r);

/// Least non-negative residue of a modulo m > 0.
mpz_class mod_norm(const mpz_class& a, const mpz_class& m);

}  // namespace gaussopt
