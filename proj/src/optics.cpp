#include "gaussopt/optics.hpp"

#include <stdexcept>

namespace gaussopt {

namespace {

void check_unit_det(const mpq_class& det, const char* who) {
    if (det != 1)
        throw std::invalid_argument(std::string(who) + ": determinant must be 1");
}

}  // namespace

Rational2x2 identity2x2() { return {1, 0, 0, 1}; }

Rational2x2 compose(const Rational2x2& g2, const Rational2x2& g1) {
    check_unit_det(g2.det(), "compose");
    check_unit_det(g1.det(), "compose");
    return {g2.A * g1.A + g2.B * g1.C, g2.A * g1.B + g2.B * g1.D,
            g2.C * g1.A + g2.D * g1.C, g2.C * g1.B + g2.D * g1.D};
}

Rational2x2 free_prop(const mpq_class& dz) { return {1, dz, 0, 1}; }

Rational2x2 thin_lens(const mpq_class& P) { return {1, 0, P, 1}; }

PhasePoint apply(const Rational2x2& g, const PhasePoint& w) {
    return {g.A * w.x + g.B * w.u, g.C * w.x + g.D * w.u};
}

mpq_class symplectic(const PhasePoint& w, const PhasePoint& wp) {
    return w.x * wp.u - wp.x * w.u;
}

double optical_length(double x1, double x2, const Rational2x2& g,
                      double z1, double z2) {
    if (g.B == 0)
        throw std::domain_error(
            "optical_length: B = 0 (imaging condition, kernel degenerates)");
    const double A = g.A.get_d(), B = g.B.get_d(), D = g.D.get_d();
    return (D * x2 * x2 - 2.0 * x1 * x2 + A * x1 * x1) / (2.0 * B) + (z2 - z1);
}

HatSystem scale_to_hat(const Rational2x2& g, const mpq_class& a,
                       const mpq_class& lambda) {
    if (a <= 0 || lambda <= 0)
        throw std::invalid_argument("scale_to_hat: a and lambda must be positive");
    check_unit_det(g.det(), "scale_to_hat");
    const mpq_class scale = a * a / lambda;
    return {g.A, g.B * scale, g.C / scale, g.D, a, lambda};
}

PhasePoint apply(const HatSystem& gh, const PhasePoint& w) {
    return {gh.A * w.x + gh.B * w.u, gh.C * w.x + gh.D * w.u};
}

PhasePoint translation_action(const HatSystem& gh, const mpz_class& n,
                              const PhasePoint& w) {
    if (gh.B == 0)
        throw std::domain_error("translation_action: B^ = 0");
    return {w.x + n, w.u - (gh.A / gh.B) * n};
}

FractionalParams fractional_params(const HatSystem& gh) {
    if (gh.A == 0 || gh.B == 0)
        throw std::invalid_argument("fractional_params: requires A^ != 0 and B^ != 0");
    FractionalParams out;
    // mpq_class canonical form already has q > 0 and gcd(p, q) = 1.
    const mpq_class ratio = gh.A / gh.B;
    out.p = ratio.get_num();
    out.q = ratio.get_den();
    out.kappa1 = gh.D / gh.A;
    out.kappa2 = 1 / gh.A;
    out.kappa3 = gh.C;
    out.kappa1_hat = gh.A * gh.D;
    out.kappa3_hat = gh.A * gh.A * gh.C;
    return out;
}

HatSystem standard_talbot_system(const mpz_class& p, const mpz_class& q) {
    if (p < 1 || q < 1 || gcd(p, q) != 1)
        throw std::invalid_argument(
            "standard_talbot_system: requires coprime p, q >= 1");
    return scale_to_hat({1, mpq_class(q, p), 0, 1}, 1, 1);
}

TalbotDecomposition talbot_decomposition(const mpz_class& p, const mpz_class& q) {
    const InversePair ip = canonical_bezout(p, q);  // validates inputs
    const mpz_class X = ip.brace_inv_p_mod_q();     // {1/p}_q
    const mpz_class Y = ip.brace_inv_q_mod_p();     // {1/q}_p
    TalbotDecomposition d;
    d.M1 = {mpq_class(1, p), 0, mpq_class(Y), mpq_class(p)};
    d.M2 = {mpq_class(p), mpq_class(q), mpq_class(-Y), mpq_class(X)};
    return d;
}

}  // namespace gaussopt
