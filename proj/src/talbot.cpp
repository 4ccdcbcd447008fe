#include "gaussopt/talbot.hpp"

#include <cmath>
#include <stdexcept>

namespace gaussopt {

namespace {

const std::complex<double> kI(0.0, 1.0);

void check_pq(const mpz_class& p, const mpz_class& q, const char* who) {
    if (p < 1 || q < 1)
        throw std::invalid_argument(std::string(who) + ": requires p, q >= 1");
    if (gcd(p, q) != 1)
        throw std::invalid_argument(std::string(who) + ": p, q must be coprime");
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

std::complex<double> amplitude_direct_I(const mpz_class& n,
                                        const FractionalParams& params) {
    const mpz_class &p = params.p, &q = params.q;
    check_pq(p, q, "amplitude_direct_I");
    const int e = parity_indicator(q, p);
    const mpz_class m = 2 * n + q * e;
    // Curvature term kappa1_hat * m^2 / (4*p*q), common to every summand.
    const mpq_class curvature = params.kappa1_hat * ratio(m * m, 4 * p * q);
    std::complex<double> sum = 0.0;
    for (mpz_class s = 0; s < p; ++s)
        sum += exp_i_pi(ratio(m * s + q * s * s, p) + curvature);
    return std::sqrt(kI / double(p.get_d())) * sum;
}

std::complex<double> amplitude_direct_II(const mpz_class& n,
                                         const FractionalParams& params) {
    const mpz_class &p = params.p, &q = params.q;
    check_pq(p, q, "amplitude_direct_II");
    const int e = parity_indicator(q, p);
    const mpz_class m = 2 * n + q * e;
    const mpq_class curvature = params.kappa3_hat * ratio(m * m, 4 * q * q);
    std::complex<double> sum = 0.0;
    for (mpz_class s = 0; s < q; ++s)
        sum += exp_i_pi(ratio(m * s - p * s * s, q) + curvature);
    // The factor i aligns this route's natural prefactor with the one of
    // amplitude_direct_I, making the reciprocity law an equality.
    return kI / std::sqrt(q.get_d()) * sum;
}

std::complex<double> amplitude_closed_I(const mpz_class& n, const mpz_class& p,
                                        const mpz_class& q) {
    check_pq(p, q, "amplitude_closed_I");
    std::complex<double> value;
    if (mpz_even_p(p.get_mpz_t())) {
        // p even, q odd.
        const mpz_class inv_q = mod_inverse(q, p);  // [1/q]_p
        const mpq_class coeff = ratio(q, p) * inv_q * inv_q - ratio(1, q * p);
        const mpq_class arg = ratio(q - 1, 4) - coeff * mpq_class(n * n);
        value = double(jacobi(p, q)) * exp_i_pi(arg);
    } else if (mpz_even_p(q.get_mpz_t())) {
        // p odd, q even.
        const mpz_class inv_q = mod_inverse(q, p);
        const mpq_class coeff = ratio(q, p) * inv_q * inv_q - ratio(1, q * p);
        const mpq_class arg = -(ratio(p, 4) + coeff * mpq_class(n * n));
        value = double(jacobi(q, p)) * exp_i_pi(arg);
    } else {
        // p odd, q odd: the lattice is offset by half a period, so the phase
        // depends on (2n + q)^2.
        const mpz_class inv_2 = mod_inverse(2, p);        // [1/2]_p
        const mpz_class inv_2q = mod_inverse(2 * q, p);   // [1/(2q)]_p
        const mpq_class coeff =
            ratio(2 * q, p) * inv_2 * inv_2q * inv_2q - ratio(1, 4 * q * p);
        const mpz_class m = 2 * n + q;
        const mpq_class arg = -(ratio(p, 4) + coeff * mpq_class(m * m));
        value = double(jacobi(q, p)) * exp_i_pi(arg);
    }
    // Constant alignment with the direct-sum prefactor convention.
    return kI * value;
}

std::complex<double> amplitude_closed_II(const mpz_class& n, const mpz_class& p,
                                         const mpz_class& q) {
    check_pq(p, q, "amplitude_closed_II");
    std::complex<double> value;
    if (mpz_even_p(p.get_mpz_t())) {
        // p even, q odd.
        const mpz_class inv_p = mod_inverse(p, q);  // [1/p]_q
        const mpq_class arg =
            ratio(q - 1, 4) + ratio(p, q) * inv_p * inv_p * mpq_class(n * n);
        value = double(jacobi(p, q)) * exp_i_pi(arg);
    } else if (mpz_even_p(q.get_mpz_t())) {
        // p odd, q even.
        const mpz_class inv_p = mod_inverse(p, q);
        const mpq_class arg =
            -(ratio(p, 4) - ratio(p, q) * inv_p * inv_p * mpq_class(n * n));
        value = double(jacobi(q, p)) * exp_i_pi(arg);
    } else {
        // p odd, q odd.
        const mpz_class inv_2 = mod_inverse(2, q);        // [1/2]_q
        const mpz_class inv_2p = mod_inverse(2 * p, q);   // [1/(2p)]_q
        const mpz_class m = 2 * n + q;
        const mpq_class arg =
            ratio(q - 1, 4) +
            ratio(2 * p, q) * inv_2 * inv_2p * inv_2p * mpq_class(m * m);
        value = double(jacobi(p, q)) * exp_i_pi(arg);
    }
    return kI * value;
}

TalbotPattern pattern(const FractionalParams& params, const mpz_class& n_min,
                      const mpz_class& n_max, AmplitudeVariant variant) {
    if (n_min > n_max)
        throw std::invalid_argument("pattern: requires n_min <= n_max");
    check_pq(params.p, params.q, "pattern");
    const int e = parity_indicator(params.q, params.p);
    TalbotPattern out;
    out.params = params;
    for (mpz_class n = n_min; n <= n_max; ++n) {
        TalbotSpot spot;
        spot.n = n;
        spot.position = (ratio(e, 2) + ratio(n, params.q)) / params.kappa2;
        switch (variant) {
            case AmplitudeVariant::direct_I:
                spot.amplitude = amplitude_direct_I(n, params);
                break;
            case AmplitudeVariant::direct_II:
                spot.amplitude = amplitude_direct_II(n, params);
                break;
            case AmplitudeVariant::closed_I:
                spot.amplitude = amplitude_closed_I(n, params.p, params.q);
                break;
            case AmplitudeVariant::closed_II:
                spot.amplitude = amplitude_closed_II(n, params.p, params.q);
                break;
        }
        spot.intensity = std::norm(spot.amplitude);
        out.spots.push_back(spot);
    }
    return out;
}

}  // namespace gaussopt
