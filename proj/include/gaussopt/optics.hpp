#pragma once

/// @file optics.hpp
/// @brief Exact-rational paraxial (ABCD) optics: unit-determinant ray-transfer
///        matrices, the symplectic product on phase space, dimensionless
///        rescaling of a system, the translation action of a periodic grating,
///        and the lattice (SL(2,Z)-flavored) decomposition underlying the
///        fractional self-imaging effect.

#include <gmpxx.h>

#include "gaussopt/exact.hpp"

namespace gaussopt {

/// Ray-transfer matrix [[A,B],[C,D]] with exact rational entries, det = 1.
/// A ray (x, u) of position x and angle u maps to (Ax + Bu, Cx + Du).
struct Rational2x2 {
    mpq_class A, B, C, D;

    mpq_class det() const { return A * D - B * C; }
};

/// Phase-space point: transverse position x and angle variable u.
struct PhasePoint {
    mpq_class x, u;
};

/// Identity system.
Rational2x2 identity2x2();

/// Exact matrix product g2 * g1 (apply g1 first). Preserves det = 1 exactly.
/// @throws std::invalid_argument unless both factors have unit determinant.
Rational2x2 compose(const Rational2x2& g2, const Rational2x2& g1);

/// Free propagation over a distance dz: [[1, dz],[0, 1]].
Rational2x2 free_prop(const mpq_class& dz);

/// Thin lens of power P: [[1, 0],[P, 1]].
Rational2x2 thin_lens(const mpq_class& P);

/// Applies g to a phase-space point: (Ax + Bu, Cx + Du).
PhasePoint apply(const Rational2x2& g, const PhasePoint& w);

/// Symplectic product <w, w'> = x*u' - x'*u; invariant under any
/// unit-determinant map applied to both arguments.
mpq_class symplectic(const PhasePoint& w, const PhasePoint& wp);

/// Optical path length between planes z1 and z2 through the system g:
///   L = (1/2B) * (D*x2^2 - 2*x1*x2 + A*x1^2) + (z2 - z1).
/// @throws std::domain_error when B = 0 (imaging condition: the propagation
///         kernel degenerates to a point transformation).
double optical_length(double x1, double x2, const Rational2x2& g,
                      double z1, double z2);

/// System rescaled to dimensionless variables by the grating period a and
/// wavelength lambda: A^ = A, B^ = B*a^2/lambda, C^ = C*lambda/a^2, D^ = D.
/// Determinant 1 is preserved exactly.
struct HatSystem {
    mpq_class A, B, C, D;  ///< rescaled matrix entries
    mpq_class a;            ///< grating period used for the scaling
    mpq_class lambda;       ///< wavelength used for the scaling

    mpq_class det() const { return A * D - B * C; }
};

/// Builds the dimensionless system. a and lambda must be positive rationals
/// so that the self-imaging condition A^/B^ in Q stays decidable.
/// @throws std::invalid_argument on nonpositive a or lambda, or det != 1.
HatSystem scale_to_hat(const Rational2x2& g, const mpq_class& a,
                       const mpq_class& lambda);

/// Applies the rescaled system to a phase-space point.
PhasePoint apply(const HatSystem& gh, const PhasePoint& w);

/// Lattice translation action t^n: w |-> w + (n, -(A^/B^)*n).
/// The image x-coordinate under gh of t^n(w) is independent of n, which is
/// what makes a periodic input produce a sharp image lattice.
/// @throws std::domain_error when B^ = 0.
PhasePoint translation_action(const HatSystem& gh, const mpz_class& n,
                              const PhasePoint& w);

/// Reduced fraction p/q = A^/B^ (q > 0, sign carried by p) together with the
/// curvature/scale parameters of the self-image expansion:
///   kappa1 = D^/A^, kappa2 = 1/A^, kappa3 = C^,
///   kappa1_hat = kappa1/kappa2^2 = A^*D^, kappa3_hat = kappa3/kappa2^2 = A^2*C^.
struct FractionalParams {
    mpz_class p, q;
    mpq_class kappa1, kappa2, kappa3;
    mpq_class kappa1_hat, kappa3_hat;
};

/// Extracts the fractional parameters of a rescaled system.
/// @throws std::invalid_argument when A^ = 0 or B^ = 0.
FractionalParams fractional_params(const HatSystem& gh);

/// The reference system [[1, q/p],[0, 1]] (with a = lambda = 1) whose
/// fractional parameters are (p, q, kappa1_hat = 1, kappa3_hat = 0) --
/// the standard configuration of the fractional self-imaging effect.
/// @throws std::invalid_argument unless p, q >= 1 and gcd(p,q) = 1.
HatSystem standard_talbot_system(const mpz_class& p, const mpz_class& q);

/// Exact factorization of [[1, q/p],[0, 1]] into
///   M1 = [[1/p, 0],[{1/q}_p, p]]  and  M2 = [[p, q],[{-1/q}_p, {1/p}_q]],
/// with M1*M2 = [[1, q/p],[0,1]] exactly and M2 an integer matrix of
/// determinant 1 (the canonical Bezout representatives make this exact).
struct TalbotDecomposition {
    Rational2x2 M1;
    Rational2x2 M2;  ///< integer entries, det = 1 exactly
};

/// Computes the decomposition above for coprime positive p, q.
/// @throws std::invalid_argument unless p, q >= 1 and gcd(p, q) = 1.
TalbotDecomposition talbot_decomposition(const mpz_class& p, const mpz_class& q);

}  // namespace gaussopt
