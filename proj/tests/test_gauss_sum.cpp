#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gaussopt/gauss_sum.hpp"

using namespace gaussopt;
using cplx = std::complex<double>;

namespace {

/// Long-double oracle summing exp(2 pi i p (c+d)^2 / q) without the exact
/// rational phase reduction (safe for the small arguments used here).
cplx full_sum_oracle(long p, long q, double d) {
    const long double pi = 3.14159265358979323846264338327950288L;
    long double re = 0, im = 0;
    for (long c = 0; c < q; ++c) {
        const long double a =
            2.0L * pi * p * (c + (long double)d) * (c + (long double)d) / q;
        re += cosl(a);
        im += sinl(a);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

/// Multiset of exactly reduced phase exponents of G(p,q,d) — two sums whose
/// sorted phase multisets coincide are equal exactly, not just numerically.
std::vector<mpq_class> phase_multiset(const mpz_class& p, const mpz_class& q,
                                      const mpq_class& d) {
    std::vector<mpq_class> out;
    for (mpz_class c = 0; c < q; ++c) {
        mpq_class arg = (c + d) * (c + d);
        arg *= 2 * p;
        arg /= q;
        out.push_back(reduce_mod_2(arg));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("gauss_sum_full pinned values") {
    const double tol = 1e-12;
    CHECK(std::abs(gauss_sum_full(1, 1) - cplx(1, 0)) < tol);
    CHECK(std::abs(gauss_sum_full(1, 3) - cplx(0, std::sqrt(3.0))) < tol);
    CHECK(std::abs(gauss_sum_full(1, 5) - cplx(std::sqrt(5.0), 0)) < tol);
    CHECK(std::abs(gauss_sum_full(2, 3) - cplx(0, -std::sqrt(3.0))) < tol);

    CHECK_THROWS_AS(gauss_sum_full(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_full(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_full(1, -3), std::invalid_argument);
}

TEST_CASE("gauss_sum_full agrees with a long-double oracle") {
    for (long q : {1L, 2L, 3L, 5L, 7L, 12L, 25L})
        for (long p : {1L, 3L, 5L, 11L}) {
            if (gcd(mpz_class(p), mpz_class(q)) != 1) continue;
            for (double d : {0.0, 0.25, 1.5}) {
                mpq_class dr(static_cast<long>(d * 4), 4);
                dr.canonicalize();
                CHECK(std::abs(gauss_sum_full(p, q, dr) -
                               full_sum_oracle(p, q, d)) < 1e-10);
            }
        }
}

TEST_CASE("gauss_sum_half pinned values") {
    const double tol = 1e-12;
    CHECK(std::abs(gauss_sum_half(1, 1) - cplx(1, 0)) < tol);
    // Even p reduces the half sum to a full sum: G'(2p', q, 0) = G(p', q, 0).
    CHECK(std::abs(gauss_sum_half(2, 3) - gauss_sum_full(1, 3)) < tol);
    // Two-term direct case: 1 + e^{3 pi i / 2} = 1 - i.
    CHECK(std::abs(gauss_sum_half(3, 2) - cplx(1, -1)) < tol);
    CHECK_THROWS_AS(gauss_sum_half(3, 6), std::invalid_argument);
}

TEST_CASE("closed_form_G1 branches and validation") {
    const double tol = 1e-15;
    CHECK(std::abs(closed_form_G1(5) - cplx(std::sqrt(5.0), 0)) < tol);
    CHECK(std::abs(closed_form_G1(3) - cplx(0, std::sqrt(3.0))) < tol);
    CHECK(std::abs(closed_form_G1(7) - cplx(0, std::sqrt(7.0))) < tol);
    CHECK(std::abs(closed_form_G1(13) - cplx(std::sqrt(13.0), 0)) < tol);
    CHECK_THROWS_AS(closed_form_G1(9), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_G1(2), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_G1(1), std::invalid_argument);
}

TEST_CASE("legendre_reduction pinned values and direct-sum agreement") {
    const double tol = 1e-12;
    CHECK(std::abs(legendre_reduction(2, 3) - cplx(0, -std::sqrt(3.0))) < tol);
    CHECK(std::abs(legendre_reduction(4, 5) - cplx(std::sqrt(5.0), 0)) < tol);
    for (mpz_class q : {mpz_class(3), mpz_class(5), mpz_class(7), mpz_class(11)})
        CHECK(std::abs(legendre_reduction(1, q) - closed_form_G1(q)) == 0.0);

    for (long q : {3L, 5L, 7L, 11L, 13L})
        for (long p = 1; p < q; ++p)
            CHECK(std::abs(legendre_reduction(p, q) - gauss_sum_full(p, q)) <
                  1e-9);

    CHECK_THROWS_AS(legendre_reduction(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(legendre_reduction(5, 5), std::invalid_argument);
}

TEST_CASE("modulus law |G(1,q)|^2 = q (smoke sample)") {
    for (long q = 1; q <= 199; q += 2) {
        const double a2 = std::norm(gauss_sum_full(1, q));
        CHECK(std::abs(a2 - static_cast<double>(q)) / q < 1e-9);
    }
}

TEST_CASE("integer d-shift leaves the sum invariant, exactly in phase space") {
    for (long q : {3L, 5L, 8L})
        for (long p : {1L, 3L}) {
            if (gcd(mpz_class(p), mpz_class(q)) != 1) continue;
            const auto base = phase_multiset(p, q, 0);
            for (mpq_class d : {mpq_class(1), mpq_class(2), mpq_class(-3)}) {
                CHECK(phase_multiset(p, q, d) == base);  // exact equality
                CHECK(std::abs(gauss_sum_full(p, q, d) - gauss_sum_full(p, q)) <
                      1e-13);
            }
        }
}

TEST_CASE("reciprocity pinned example: (2,3,0) has both sides equal to i") {
    const auto rep = reciprocity_residual(2, 3);
    CHECK(rep.residual < 1e-12);
    CHECK(rep.asserted);
    CHECK(std::abs(rep.lhs - cplx(0, 1)) < 1e-12);
    CHECK(std::abs(rep.rhs - cplx(0, 1)) < 1e-12);
}

TEST_CASE("reciprocity degenerate modulus q = 1 (even p)") {
    for (mpz_class p : {mpz_class(2), mpz_class(4), mpz_class(6)}) {
        const auto rep = reciprocity_residual(p, 1);
        CHECK(rep.asserted);
        CHECK(rep.residual < 1e-12);
        CHECK(std::abs(rep.lhs - cplx(1, 0)) < 1e-12);
    }
}

TEST_CASE("reciprocity sweep: even products assert, odd-odd only reported") {
    double max_asserted = 0.0;
    for (int p = 1; p <= 20; ++p)
        for (int q = 1; q <= 20; ++q) {
            if (gcd(mpz_class(p), mpz_class(q)) != 1) continue;
            for (int d = 0; d <= 3; ++d) {
                const auto rep = reciprocity_residual(p, q, d);
                CHECK(rep.asserted == (p % 2 == 0 || q % 2 == 0));
                if (rep.asserted) max_asserted = std::max(max_asserted, rep.residual);
            }
        }
    CHECK(max_asserted < 1e-9);
}

TEST_CASE("reciprocity also holds with negative moduli in the asserted domain") {
    for (int p : {-4, -2, 2, 4})
        for (int q : {-3, -1, 1, 3, 5}) {
            if (gcd(mpz_class(p), mpz_class(q)) != 1) continue;
            const auto rep = reciprocity_residual(p, q, 1);
            CHECK(rep.asserted);
            CHECK(rep.residual < 1e-9);
        }
}

TEST_CASE("reciprocity input validation") {
    CHECK_THROWS_AS(reciprocity_residual(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(reciprocity_residual(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(reciprocity_residual(2, 4), std::invalid_argument);
}
