#include "gaussopt/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaussopt {

mpz_class mod_norm(const mpz_class& a, const mpz_class& m) {
    if (m <= 0) throw std::invalid_argument("mod_norm: modulus must be positive");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ExtGcd ext_gcd(const mpz_class& a, const mpz_class& b) {
    if (a == 0 && b == 0)
        throw std::invalid_argument("ext_gcd: gcd(0, 0) is undefined");
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    // Normalize: pick the least non-negative cofactor of `a` modulo b/g and
    // recompute the cofactor of `b` from the identity. Keeps results unique.
    if (b != 0) {
        mpz_class m = b / r.g;
        if (m < 0) m = -m;
        if (m != 0) {
            r.s = mod_norm(r.s, m);
            r.t = (r.g - r.s * a) / b;
        }
    }
    return r;
}

mpz_class mod_inverse(const mpz_class& p, const mpz_class& q) {
    if (q < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (q == 1) return 1;  // degenerate modulus convention
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return r;  // mpz_invert returns the least positive inverse, in [1, q)
}

InversePair canonical_bezout(const mpz_class& p, const mpz_class& q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("canonical_bezout: requires p, q >= 1");
    if (gcd(p, q) != 1)
        throw std::invalid_argument("canonical_bezout: arguments are not coprime");
    InversePair r;
    r.p = p;
    r.q = q;
    // {1/q}_p: least positive representative, degenerating to 0 when p = 1.
    mpz_class y = (p == 1) ? mpz_class(0) : mod_inverse(q, p);
    // {1/p}_q from the exact integer identity p*X + q*Y = 1.
    mpz_class x = (1 - q * y) / p;
    r.inv_p_mod_q = mod_inverse(p, q);
    r.inv_neg_q_mod_p = -y;
    r.shift = (r.inv_p_mod_q - x) / q;
    return r;
}

int legendre(const mpz_class& p, const mpz_class& s) {
    if (s < 3 || mod_norm(s, 2) == 0 ||
        mpz_probab_prime_p(s.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    return mpz_legendre(p.get_mpz_t(), s.get_mpz_t());
}

int jacobi(const mpz_class& p, const mpz_class& q) {
    if (q <= 0 || mod_norm(q, 2) == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    return mpz_jacobi(p.get_mpz_t(), q.get_mpz_t());
}

int parity_indicator(const mpz_class& q, const mpz_class& p) {
    return (mpz_odd_p(q.get_mpz_t()) && mpz_odd_p(p.get_mpz_t())) ? 1 : 0;
}

mpq_class reduce_mod_2(const mpq_class& r) {
    // r = n/d with d > 0 (mpq_class canonical form). r mod 2 = (n mod 2d)/d.
    mpz_class two_d = 2 * r.get_den();
    mpz_class n = mod_norm(r.get_num(), two_d);  // in [0, 2d)
    mpq_class out(n, r.get_den());
    out.canonicalize();
    if (out > 1) out -= 2;  // into (-1, 1]
    return out;
}

std::complex<double> exp_i_pi(const mpq_class& r) {
    const double x = reduce_mod_2(r).get_d();  // |x| <= 1 exactly
    const double a = std::numbers::pi * x;
    return {std::cos(a), std::sin(a)};
}

std::complex<double> exp_2pi_i(const mpq_class& r) { return exp_i_pi(2 * r); }

}  // namespace gaussopt
