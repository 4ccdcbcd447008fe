#pragma once

/// @file heisenberg.hpp
/// @brief Finite Heisenberg group over Z/bZ (b odd), its shift-and-modulation
///        unitary representation, the metaplectic kernel attached to an
///        SL(2, Z/bZ) element, and the bridge identifying that kernel's
///        quadratic sums with the fractional self-imaging amplitudes.

#include <complex>
#include <string>
#include <vector>

#include "gaussopt/exact.hpp"

namespace gaussopt {

/// Group element ((x, u), z) over Z/bZ with all components normalized to
/// [0, b). The modulus b must be odd so that 1/2 = (b+1)/2 exists.
struct HeisenbergElement {
    mpz_class x, u, z;
    mpz_class b;
};

/// Normalizing constructor.
/// @throws std::invalid_argument unless b is odd and >= 1.
HeisenbergElement h_make(const mpz_class& x, const mpz_class& u,
                         const mpz_class& z, const mpz_class& b);

/// Identity element over Z/bZ.
HeisenbergElement h_identity(const mpz_class& b);

bool h_equal(const HeisenbergElement& a, const HeisenbergElement& b);

/// Group law (w1,z1)*(w2,z2) = (w1+w2, z1+z2+(1/2)<w1,w2>) with the
/// symplectic pairing <w1,w2> = x1*u2 - x2*u1 and 1/2 = (b+1)/2 mod b.
/// @throws std::invalid_argument on modulus mismatch.
HeisenbergElement h_mul(const HeisenbergElement& h1, const HeisenbergElement& h2);

/// Inverse: ((x,u),z)^{-1} = ((-x,-u),-z) (the pairing of w with -w vanishes).
HeisenbergElement h_inverse(const HeisenbergElement& h);

/// Dilation automorphism alpha_gamma(w, z) = (gamma*w, gamma^2*z) for a unit
/// gamma of Z/bZ.
/// @throws std::invalid_argument unless gcd(gamma, b) = 1.
HeisenbergElement dilation(const mpz_class& gamma, const HeisenbergElement& h);

/// Central character data: chi(k) = exp(2*pi*i*p*k/q) with q = b (odd) and
/// gcd(p, q) = 1. The coprime pair realizes a rational frequency without any
/// real division inside the finite ring.
struct CharacterParam {
    mpz_class p, q;
};

/// Dense complex matrix representing a group element or an SL(2) kernel.
struct RepMatrix {
    std::size_t b = 0;                   ///< dimension
    std::vector<std::complex<double>> m; ///< row-major b*b entries
    std::string label;                   ///< what this matrix represents

    std::complex<double>& at(std::size_t r, std::size_t c) { return m[r * b + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const {
        return m[r * b + c];
    }
};

/// max |(M^dagger M - I)_{jk}| — zero for a unitary matrix.
double unitarity_residual(const RepMatrix& M);

/// Exact form of a shift-and-modulation matrix: row t has its only nonzero
/// entry in column (t + offset) mod b, with value chi(exps[t]). Products and
/// equality checks on this form are pure integer arithmetic mod b, so
/// root-of-unity identities can be asserted exactly.
struct ExactRepMatrix {
    mpz_class b;
    mpz_class offset;
    std::vector<mpz_class> exps;  ///< size b, values in [0, b)
};

/// Exact matrix product (left * right) of two shift-and-modulation matrices.
ExactRepMatrix exact_mul(const ExactRepMatrix& left, const ExactRepMatrix& right);

/// Multiplies by the scalar chi(k): adds k to every phase exponent.
ExactRepMatrix exact_scale(const ExactRepMatrix& M, const mpz_class& k);

bool exact_equal(const ExactRepMatrix& a, const ExactRepMatrix& b);

/// Exact shift-and-modulation form of the representation of h:
///   (S(h) f)(t) = chi(z + u*t + (1/2)*x*u) * f(t + x),
/// a genuine homomorphism: S(h1)S(h2) = S(h1*h2) exactly, and the finite
/// Weyl commutation law S(x)S(u) = chi(x*u) S(u)S(x) holds exactly.
/// @throws std::invalid_argument if chi.q != b, gcd(chi.p, b) != 1, or b even.
ExactRepMatrix schrodinger_exact(const HeisenbergElement& h,
                                 const CharacterParam& chi);

/// Dense complex form of schrodinger_exact (unitary).
RepMatrix schrodinger(const HeisenbergElement& h, const CharacterParam& chi);

/// Element of SL(2, Z/bZ): entries normalized mod b, det == 1 (mod b).
struct SL2Mod {
    mpz_class A, B, C, D;
    mpz_class b;
};

/// Normalizing constructor.
/// @throws std::invalid_argument unless b odd >= 1 and det == 1 (mod b).
SL2Mod sl2_make(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                const mpz_class& D, const mpz_class& b);

/// Product of two SL(2, Z/bZ) elements (moduli must agree).
SL2Mod sl2_mul(const SL2Mod& g2, const SL2Mod& g1);

/// The action of g on a group element used by the intertwining law below:
///   g.((x,u),z) = ((A*x - B*u, -C*x + D*u), z).
/// The matrix [[A,-B],[-C,D]] also has determinant 1, so the action preserves
/// the symplectic pairing and is an automorphism fixing the center.
HeisenbergElement sl2_act(const SL2Mod& g, const HeisenbergElement& h);

/// Single kernel entry for invertible B:
///   G(x2; x1) = (1/sqrt(b)) * chi( (2B)^{-1} (D*x2^2 - 2*x1*x2 + A*x1^2) ).
/// @throws std::invalid_argument unless gcd(B, b) = 1.
std::complex<double> weil_kernel(const SL2Mod& g, const mpz_class& x2,
                                 const mpz_class& x1, const CharacterParam& chi);

/// Full kernel matrix of g. For invertible B this is the Gauss-exponential
/// kernel above (already exactly unitary with the 1/sqrt(b) scaling; its
/// (0,0) entry is the positive real 1/sqrt(b), so the fixed-phase convention
/// discards a global factor of 1). For B == 0 the map degenerates to the
/// point transformation (W f)(t) = chi((1/2)*C*A*t^2) * f(A*t), a permutation
/// matrix with phases. Non-invertible nonzero B (possible only for composite
/// b) is rejected.
/// @throws std::invalid_argument as described above.
RepMatrix weil_matrix(const SL2Mod& g, const CharacterParam& chi);

/// Metaplectic phase s(g) = sgn(B)*i, with B lifted to (-b/2, b/2).
/// @throws std::invalid_argument when B == 0 (mod b).
std::complex<double> metaplectic_phase(const SL2Mod& g);

/// min over unimodular scalars c of max|S(g.h) - c * W S(h) W^{-1}|, the
/// projective form of the intertwining law S(g.h) = W(g) S(h) W(g)^{-1}
/// (c is computed from the first well-conditioned entry ratio).
double intertwine_residual(const SL2Mod& g, const HeisenbergElement& h,
                           const CharacterParam& chi);

/// Composition data for the kernel multiplication law
/// W(g2) W(g1) = c * W(g2*g1) with |c| = 1.
struct KernelComposition {
    std::complex<double> cocycle;  ///< the global factor c
    double residual;               ///< max|W(g2)W(g1) - c*W(g2*g1)|
};

/// Measures the composition law; the cocycle factor is reported, not asserted
/// to be 1 (the kernels form a projective representation).
KernelComposition kernel_compose(const SL2Mod& g2, const SL2Mod& g1,
                                 const CharacterParam& chi);

/// Bridge between the metaplectic kernel of [[1,1],[0,1]] over Z/qZ and the
/// fractional self-imaging amplitude: evaluates the p-term Fresnel sum
///   V(n) = sqrt(i/p) * sum_{j mod p} exp(i*pi*(q/p)*(y - j)^2),
///   y = (q*e + 2n) / (2q),
/// which equals amplitude_direct_I(n) of the standard system exactly.
struct WeilTalbotReport {
    std::complex<double> kernel_sum;  ///< V(n)
    std::complex<double> amplitude;   ///< amplitude_direct_I(n)
    std::complex<double> phase;       ///< alignment phase applied (always 1)
    double residual;                  ///< |V(n) - amplitude|
};

/// @throws std::invalid_argument unless gcd(p,q) = 1, p >= 1, and q odd >= 1.
WeilTalbotReport weil_vs_talbot(const mpz_class& n, const mpz_class& p,
                                const mpz_class& q);

}  // namespace gaussopt
