#include "gaussopt/gauss_sum.hpp"

#include <cmath>
#include <stdexcept>

namespace gaussopt {

namespace {

void check_coprime(const mpz_class& p, const mpz_class& q, const char* who) {
    if (q < 1) throw std::invalid_argument(std::string(who) + ": requires q >= 1");
    mpz_class g = gcd(p, q);
    if (g < 0) g = -g;
    if (g != 1) throw std::invalid_argument(std::string(who) + ": p, q must be coprime");
}

/// sum_{c=0}^{q-1} exp(i*pi * scale * p * (c+d)^2 / q), scale in {1, 2}.
std::complex<double> quadratic_sum(const mpz_class& p, const mpz_class& q,
                                   const mpq_class& d, int scale) {
    mpq_class ratio(scale * p, q);
    ratio.canonicalize();
    std::complex<double> acc = 0.0;
    for (mpz_class c = 0; c < q; ++c) {
        mpq_class arg = (mpq_class(c) + d);
        arg *= arg;
        arg *= ratio;
        acc += exp_i_pi(arg);
    }
    return acc;
}

}  // namespace

std::complex<double> gauss_sum_full(const mpz_class& p, const mpz_class& q,
                                    const mpq_class& d) {
    check_coprime(p, q, "gauss_sum_full");
    return quadratic_sum(p, q, d, 2);
}

std::complex<double> gauss_sum_half(const mpz_class& p, const mpz_class& q,
                                    const mpq_class& d) {
    check_coprime(p, q, "gauss_sum_half");
    return quadratic_sum(p, q, d, 1);
}

std::complex<double> closed_form_G1(const mpz_class& q) {
    if (q < 3 || mod_norm(q, 2) == 0 ||
        mpz_probab_prime_p(q.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("closed_form_G1: q must be an odd prime");
    const double root = std::sqrt(q.get_d());
    return (mod_norm(q, 4) == 1) ? std::complex<double>(root, 0.0)
                                 : std::complex<double>(0.0, root);
}

std::complex<double> legendre_reduction(const mpz_class& p, const mpz_class& q) {
    const int sym = legendre(p, q);
    if (sym == 0)
        throw std::invalid_argument("legendre_reduction: p, q must be coprime");
    return double(sym) * closed_form_G1(q);
}

ReciprocityReport reciprocity_residual(const mpz_class& p, const mpz_class& q,
                                       const mpz_class& d) {
    if (p == 0 || q == 0)
        throw std::invalid_argument("reciprocity_residual: p, q must be nonzero");
    mpz_class g = gcd(p, q);
    if (g < 0) g = -g;
    if (g != 1)
        throw std::invalid_argument("reciprocity_residual: p, q must be coprime");

    const mpz_class qa = abs(q), pa = abs(p);

    std::complex<double> lhs = 0.0;
    for (mpz_class c = 0; c < qa; ++c) {
        mpz_class cd = c + d;
        mpq_class arg(p * cd * cd, q);
        arg.canonicalize();
        lhs += exp_i_pi(arg);
    }
    lhs /= std::sqrt(qa.get_d());

    std::complex<double> sum = 0.0;
    for (mpz_class c = 0; c < pa; ++c) {
        // exp(-i*pi*q*c^2/p) * exp(-2*pi*i*d*c) as a single exact phase.
        mpq_class arg(-q * c * c, p);
        arg.canonicalize();
        arg -= mpq_class(2 * d * c);
        sum += exp_i_pi(arg);
    }
    const int sgn_pq = (sgn(p) * sgn(q) > 0) ? 1 : -1;
    std::complex<double> rhs =
        exp_i_pi(mpq_class(sgn_pq, 4)) * sum / std::sqrt(pa.get_d());

    ReciprocityReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = std::abs(lhs - rhs);
    rep.asserted = (parity_indicator(p, q) == 0);
    return rep;
}

}  // namespace gaussopt
