#include "gaussopt/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaussopt {

namespace {

constexpr double kTermCutoff = 1e-18;
constexpr int kMaxTerms = 100000;
const std::complex<double> kI(0.0, 1.0);

std::complex<double> theta_term(std::complex<double> u,
                                std::complex<double> tau, int n) {
    const double dn = n;
    return std::exp(std::numbers::pi * kI * (2.0 * dn * u + tau * dn * dn));
}

}  // namespace

std::complex<double> theta(std::complex<double> u, std::complex<double> tau) {
    if (!(tau.imag() > 0.0))
        throw std::domain_error("theta: requires Im tau > 0");
    std::complex<double> sum = theta_term(u, tau, 0);
    for (int n = 1; n < kMaxTerms; ++n) {
        const std::complex<double> tp = theta_term(u, tau, n);
        const std::complex<double> tm = theta_term(u, tau, -n);
        sum += tp + tm;
        const double cutoff = kTermCutoff * (std::abs(sum) + 1.0);
        if (std::abs(tp) < cutoff && std::abs(tm) < cutoff) return sum;
    }
    throw std::domain_error("theta: series did not converge (Im tau too small)");
}

double jacobi_transform_residual(std::complex<double> u,
                                 std::complex<double> tau) {
    const std::complex<double> lhs = theta(u / tau, -1.0 / tau);
    const std::complex<double> rhs =
        std::sqrt(-kI * tau) *
        std::exp(std::numbers::pi * kI * u * u / tau) * theta(u, tau);
    return std::abs(lhs - rhs);
}

std::complex<double> phi_theta(double x2, const HatSystem& gh, ScreenForm form,
                               double eps) {
    if (gh.A == 0 || gh.B == 0)
        throw std::invalid_argument("phi_theta: requires A^ != 0 and B^ != 0");
    if (!(eps > 0.0))
        throw std::invalid_argument("phi_theta: requires eps > 0");

    const double A = gh.A.get_d(), B = gh.B.get_d(), D = gh.D.get_d();
    const std::complex<double> sigma(A / B, eps);
    const std::complex<double> u(-x2 / B, 0.0);
    const std::complex<double> quad =
        std::exp(std::numbers::pi * kI * (D / B) * x2 * x2);
    const std::complex<double> prefactor = std::sqrt(kI / B) * quad;

    switch (form) {
        case ScreenForm::direct_lattice:
            return prefactor * theta(u, sigma);
        case ScreenForm::reciprocal_lattice:
            // Exact imaginary-transform partner:
            //   theta(u, sigma) = (-i*sigma)^{-1/2} e^{-i*pi*u^2/sigma}
            //                     * theta(u/sigma, -1/sigma).
            return prefactor / std::sqrt(-kI * sigma) *
                   std::exp(-std::numbers::pi * kI * u * u / sigma) *
                   theta(u / sigma, -1.0 / sigma);
    }
    throw std::invalid_argument("phi_theta: unknown form");
}

}  // namespace gaussopt
