#include "gaussopt/heisenberg.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "gaussopt/optics.hpp"
#include "gaussopt/talbot.hpp"

namespace gaussopt {

namespace {

void check_modulus(const mpz_class& b) {
    if (b < 1 || mpz_even_p(b.get_mpz_t()))
        throw std::invalid_argument("heisenberg: modulus must be odd and >= 1");
}

void check_same_modulus(const mpz_class& b1, const mpz_class& b2) {
    if (b1 != b2) throw std::invalid_argument("heisenberg: modulus mismatch");
}

void check_character(const CharacterParam& chi, const mpz_class& b) {
    if (chi.q != b)
        throw std::invalid_argument(
            "heisenberg: character modulus must equal the group modulus");
    if (gcd(chi.p, chi.q) != 1)
        throw std::invalid_argument(
            "heisenberg: character numerator must be a unit mod b");
}

/// 1/2 in Z/bZ: the unique residue with 2*h == 1 (exists because b is odd).
mpz_class half_unit(const mpz_class& b) { return mod_norm((b + 1) / 2, b); }

/// chi(k) = exp(2*pi*i*p*k/q).
std::complex<double> chi_value(const CharacterParam& chi, const mpz_class& k) {
    mpq_class r(2 * chi.p * k, chi.q);
    r.canonicalize();
    return exp_i_pi(r);
}

std::size_t idx(const mpz_class& v) {
    return static_cast<std::size_t>(v.get_ui());
}

RepMatrix zero_matrix(const mpz_class& b, std::string label) {
    RepMatrix M;
    M.b = static_cast<std::size_t>(b.get_ui());
    M.m.assign(M.b * M.b, {0.0, 0.0});
    M.label = std::move(label);
    return M;
}

std::string sl2_label(const SL2Mod& g) {
    std::ostringstream os;
    os << "[[" << g.A << "," << g.B << "],[" << g.C << "," << g.D
       << "]] mod " << g.b;
    return os.str();
}

std::string h_label(const HeisenbergElement& h) {
    std::ostringstream os;
    os << "((" << h.x << "," << h.u << ")," << h.z << ") mod " << h.b;
    return os.str();
}

RepMatrix mat_mul(const RepMatrix& L, const RepMatrix& R) {
    RepMatrix P;
    P.b = L.b;
    P.m.assign(L.b * L.b, {0.0, 0.0});
    for (std::size_t i = 0; i < L.b; ++i)
        for (std::size_t k = 0; k < L.b; ++k) {
            const std::complex<double> lik = L.at(i, k);
            if (lik == std::complex<double>(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < L.b; ++j) P.at(i, j) += lik * R.at(k, j);
        }
    return P;
}

RepMatrix mat_adjoint(const RepMatrix& M) {
    RepMatrix A;
    A.b = M.b;
    A.m.assign(M.b * M.b, {0.0, 0.0});
    for (std::size_t i = 0; i < M.b; ++i)
        for (std::size_t j = 0; j < M.b; ++j) A.at(i, j) = std::conj(M.at(j, i));
    return A;
}

/// Global unimodular factor aligning `approx` with `target`, read off the
/// first entry (row-major) where the target is well away from zero.
std::complex<double> leading_ratio(const RepMatrix& target,
                                   const RepMatrix& approx) {
    for (std::size_t i = 0; i < target.b; ++i)
        for (std::size_t j = 0; j < target.b; ++j) {
            if (std::abs(target.at(i, j)) < 1e-6) continue;
            if (std::abs(approx.at(i, j)) < 1e-12) return {1.0, 0.0};
            std::complex<double> c = target.at(i, j) / approx.at(i, j);
            return c / std::abs(c);
        }
    return {1.0, 0.0};
}

double max_scaled_difference(const RepMatrix& target, const RepMatrix& approx,
                             std::complex<double> c) {
    double r = 0.0;
    for (std::size_t k = 0; k < target.m.size(); ++k)
        r = std::max(r, std::abs(target.m[k] - c * approx.m[k]));
    return r;
}

}  // namespace

HeisenbergElement h_make(const mpz_class& x, const mpz_class& u,
                         const mpz_class& z, const mpz_class& b) {
    check_modulus(b);
    return {mod_norm(x, b), mod_norm(u, b), mod_norm(z, b), b};
}

HeisenbergElement h_identity(const mpz_class& b) { return h_make(0, 0, 0, b); }

bool h_equal(const HeisenbergElement& a, const HeisenbergElement& b) {
    return a.b == b.b && a.x == b.x && a.u == b.u && a.z == b.z;
}

HeisenbergElement h_mul(const HeisenbergElement& h1,
                        const HeisenbergElement& h2) {
    check_modulus(h1.b);
    check_same_modulus(h1.b, h2.b);
    const mpz_class pairing = h1.x * h2.u - h2.x * h1.u;
    return h_make(h1.x + h2.x, h1.u + h2.u,
                  h1.z + h2.z + half_unit(h1.b) * pairing, h1.b);
}

HeisenbergElement h_inverse(const HeisenbergElement& h) {
    return h_make(-h.x, -h.u, -h.z, h.b);
}

HeisenbergElement dilation(const mpz_class& gamma, const HeisenbergElement& h) {
    check_modulus(h.b);
    if (gcd(gamma, h.b) != 1)
        throw std::invalid_argument("dilation: scale must be a unit mod b");
    return h_make(gamma * h.x, gamma * h.u, gamma * gamma * h.z, h.b);
}

double unitarity_residual(const RepMatrix& M) {
    double r = 0.0;
    for (std::size_t i = 0; i < M.b; ++i)
        for (std::size_t j = 0; j < M.b; ++j) {
            std::complex<double> s{0.0, 0.0};
            for (std::size_t k = 0; k < M.b; ++k)
                s += std::conj(M.at(k, i)) * M.at(k, j);
            if (i == j) s -= 1.0;
            r = std::max(r, std::abs(s));
        }
    return r;
}

ExactRepMatrix exact_mul(const ExactRepMatrix& left,
                         const ExactRepMatrix& right) {
    check_same_modulus(left.b, right.b);
    const std::size_t n = idx(left.b);
    ExactRepMatrix P;
    P.b = left.b;
    P.offset = mod_norm(left.offset + right.offset, left.b);
    P.exps.resize(n);
    // Row t of the product picks up the left phase at t and the right phase at
    // the column t + offset_left the left factor maps t to.
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t mid = idx(mod_norm(mpz_class(t) + left.offset, left.b));
        P.exps[t] = mod_norm(left.exps[t] + right.exps[mid], left.b);
    }
    return P;
}

ExactRepMatrix exact_scale(const ExactRepMatrix& M, const mpz_class& k) {
    ExactRepMatrix S = M;
    for (auto& e : S.exps) e = mod_norm(e + k, M.b);
    return S;
}

bool exact_equal(const ExactRepMatrix& a, const ExactRepMatrix& b) {
    return a.b == b.b && a.offset == b.offset && a.exps == b.exps;
}

ExactRepMatrix schrodinger_exact(const HeisenbergElement& h,
                                 const CharacterParam& chi) {
    check_modulus(h.b);
    check_character(chi, h.b);
    const std::size_t n = idx(h.b);
    const mpz_class hu = half_unit(h.b);
    ExactRepMatrix M;
    M.b = h.b;
    M.offset = mod_norm(h.x, h.b);
    M.exps.resize(n);
    // (S(h) f)(t) = chi(z + u*t + (1/2)*x*u) f(t + x).
    for (std::size_t t = 0; t < n; ++t)
        M.exps[t] = mod_norm(h.z + h.u * mpz_class(t) + hu * h.x * h.u, h.b);
    return M;
}

RepMatrix schrodinger(const HeisenbergElement& h, const CharacterParam& chi) {
    const ExactRepMatrix E = schrodinger_exact(h, chi);
    RepMatrix M = zero_matrix(h.b, "S" + h_label(h));
    const std::size_t n = M.b;
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t col = idx(mod_norm(mpz_class(t) + E.offset, h.b));
        M.at(t, col) = chi_value(chi, E.exps[t]);
    }
    return M;
}

SL2Mod sl2_make(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                const mpz_class& D, const mpz_class& b) {
    check_modulus(b);
    SL2Mod g{mod_norm(A, b), mod_norm(B, b), mod_norm(C, b), mod_norm(D, b), b};
    if (mod_norm(g.A * g.D - g.B * g.C, b) != mod_norm(1, b))
        throw std::invalid_argument("sl2_make: determinant must be 1 mod b");
    return g;
}

SL2Mod sl2_mul(const SL2Mod& g2, const SL2Mod& g1) {
    check_same_modulus(g2.b, g1.b);
    return sl2_make(g2.A * g1.A + g2.B * g1.C, g2.A * g1.B + g2.B * g1.D,
                    g2.C * g1.A + g2.D * g1.C, g2.C * g1.B + g2.D * g1.D,
                    g2.b);
}

HeisenbergElement sl2_act(const SL2Mod& g, const HeisenbergElement& h) {
    check_same_modulus(g.b, h.b);
    return h_make(g.A * h.x - g.B * h.u, -g.C * h.x + g.D * h.u, h.z, h.b);
}

std::complex<double> weil_kernel(const SL2Mod& g, const mpz_class& x2,
                                 const mpz_class& x1,
                                 const CharacterParam& chi) {
    check_character(chi, g.b);
    if (gcd(g.B, g.b) != 1)
        throw std::invalid_argument("weil_kernel: B must be invertible mod b");
    const mpz_class lambda = mod_inverse(mod_norm(2 * g.B, g.b), g.b);
    const mpz_class e = mod_norm(
        lambda * (g.D * x2 * x2 - 2 * x1 * x2 + g.A * x1 * x1), g.b);
    return chi_value(chi, e) / std::sqrt(g.b.get_d());
}

RepMatrix weil_matrix(const SL2Mod& g, const CharacterParam& chi) {
    check_character(chi, g.b);
    const std::size_t n = idx(g.b);
    if (mod_norm(g.B, g.b) == 0) {
        // Imaging case: (W f)(t) = chi((1/2)*C*D*t^2) f(D*t), a permutation
        // matrix with chirp phases (D = A^{-1} since det = A*D = 1 here).
        RepMatrix M = zero_matrix(g.b, "W" + sl2_label(g) + " [point map]");
        const mpz_class hu = half_unit(g.b);
        for (std::size_t t = 0; t < n; ++t) {
            const mpz_class tz(t);
            const std::size_t col = idx(mod_norm(g.D * tz, g.b));
            M.at(t, col) = chi_value(chi, mod_norm(hu * g.C * g.D * tz * tz, g.b));
        }
        return M;
    }
    if (gcd(g.B, g.b) != 1)
        throw std::invalid_argument(
            "weil_matrix: B is a zero divisor mod b; no kernel branch applies");
    RepMatrix M = zero_matrix(g.b, "W" + sl2_label(g) + " [Gauss kernel]");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            M.at(r, c) = weil_kernel(g, mpz_class(r), mpz_class(c), chi);
    return M;
}

std::complex<double> metaplectic_phase(const SL2Mod& g) {
    mpz_class r = mod_norm(g.B, g.b);
    if (r == 0)
        throw std::invalid_argument(
            "metaplectic_phase: undefined when B == 0 mod b");
    if (2 * r > g.b) r -= g.b;  // lift into (-b/2, b/2)
    return {0.0, r > 0 ? 1.0 : -1.0};
}

double intertwine_residual(const SL2Mod& g, const HeisenbergElement& h,
                           const CharacterParam& chi) {
    const RepMatrix W = weil_matrix(g, chi);
    const RepMatrix conj =
        mat_mul(mat_mul(W, schrodinger(h, chi)), mat_adjoint(W));
    const RepMatrix target = schrodinger(sl2_act(g, h), chi);
    const std::complex<double> c = leading_ratio(target, conj);
    return max_scaled_difference(target, conj, c);
}

KernelComposition kernel_compose(const SL2Mod& g2, const SL2Mod& g1,
                                 const CharacterParam& chi) {
    const RepMatrix product = mat_mul(weil_matrix(g2, chi), weil_matrix(g1, chi));
    const RepMatrix direct = weil_matrix(sl2_mul(g2, g1), chi);
    KernelComposition out;
    // The scalar relating W(g2)W(g1) to W(g2*g1): report it as measured.
    out.cocycle = leading_ratio(product, direct);
    out.residual = max_scaled_difference(product, direct, out.cocycle);
    return out;
}

WeilTalbotReport weil_vs_talbot(const mpz_class& n, const mpz_class& p,
                                const mpz_class& q) {
    if (p < 1 || q < 1 || gcd(p, q) != 1 || mpz_even_p(q.get_mpz_t()))
        throw std::invalid_argument(
            "weil_vs_talbot: requires coprime p >= 1 and odd q >= 1");
    const int e = parity_indicator(q, p);
    // sqrt(i/p) * sum_{j mod p} exp(i*pi*(q/p)*(y - j)^2) with
    // y = (q*e + 2n)/(2q); the j-th exponent is (q*e + 2n - 2qj)^2 / (4pq).
    std::complex<double> sum{0.0, 0.0};
    for (mpz_class j = 0; j < p; ++j) {
        mpq_class arg((q * e + 2 * n - 2 * q * j) * (q * e + 2 * n - 2 * q * j),
                      4 * p * q);
        arg.canonicalize();
        sum += exp_i_pi(arg);
    }
    WeilTalbotReport rep;
    rep.kernel_sum =
        sum * std::sqrt(std::complex<double>(0.0, 1.0) / p.get_d());
    rep.amplitude =
        amplitude_direct_I(n, fractional_params(standard_talbot_system(p, q)));
    rep.phase = {1.0, 0.0};
    rep.residual = std::abs(rep.kernel_sum - rep.amplitude);
    return rep;
}

}  // namespace gaussopt
