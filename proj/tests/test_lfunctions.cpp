#include <doctest.h>

#include <random>

#include "lambertz/lfunctions.hpp"
#include "lambertz/special.hpp"

using namespace lambertz;

namespace {

const PrecisionContext& ctx60() {
    static PrecisionContext ctx(60);
    return ctx;
}

const DirichletLSeries& zeta_series() {
    static DirichletLSeries s(build_character(1, "principal", ctx60()), ctx60());
    return s;
}

const DirichletLSeries& chi5_series() {
    static DirichletLSeries s(build_character(5, "quadratic", ctx60()), ctx60());
    return s;
}

const CuspFormLSeries& delta_series() {
    static CuspFormLSeries s(delta_form(256, ctx60()), build_character(1, "principal", ctx60()),
                             ctx60());
    return s;
}

const CuspFormLSeries& delta_chi5_series() {
    static CuspFormLSeries s(delta_form(512, ctx60()), build_character(5, "quadratic", ctx60()),
                             ctx60());
    return s;
}

}  // namespace

TEST_CASE("dirichlet L at convergent points against direct series") {
    const auto& ctx = ctx60();
    // zeta(2) = pi^2/6
    Complex two(ctx.real(2), ctx.zero());
    CHECK(abs(zeta_series().L(two) - Complex(ctx.pi() * ctx.pi() / 6, ctx.zero())) < ctx.pow10(-40));

    // L(2, chi5) versus the plain Dirichlet sum with integral tail brackets:
    // grouped over full periods the tail alternates, so 2e5 terms with a
    // n^{-2} envelope certify ~1e-11
    Complex got = chi5_series().L(two);
    DirichletCharacter chi5 = build_character(5, "quadratic", ctx);
    Real partial = ctx.zero();
    const long N = 200000;
    for (long n = 1; n <= N; ++n) {
        const Complex& c = chi5(n);
        if (c.re() == 0) continue;
        partial += c.re() / (ctx.real(n) * ctx.real(n));
    }
    CHECK(abs(got.re() - partial) < ctx.pow10(-9));
    CHECK(abs(got.im()) < ctx.tol_digits(5));
}

TEST_CASE("Schwarz reflection for the real mod-5 character") {
    const auto& ctx = ctx60();
    Complex s(ctx.real("0.5"), ctx.real(6));
    Complex a = chi5_series().L(conj(s));
    Complex b = conj(chi5_series().L(s));
    CHECK(abs(a - b) < ctx.tol_digits(8) * abs(a));
}

TEST_CASE("dirichlet L pole handling") {
    const auto& ctx = ctx60();
    CHECK_THROWS_AS(zeta_series().L(Complex(ctx.one(), ctx.zero())), pole_error);
}

TEST_CASE("dirichlet L derivative against central differences") {
    const auto& ctx = ctx60();
    Complex two(ctx.real(2), ctx.zero());
    Complex d = zeta_series().L_deriv(two);
    Real h = ctx.pow10(-16);
    Complex cd = (zeta_series().L(Complex(ctx.real(2) + h, ctx.zero())) -
                  zeta_series().L(Complex(ctx.real(2) - h, ctx.zero()))) /
                 (2 * h);
    CHECK(abs(d - cd) < ctx.pow10(-20));

    // L'(0, chi5) finite and nonzero (feeds R_0)
    Complex d0 = chi5_series().L_deriv(Complex(ctx.zero(), ctx.zero()));
    CHECK(abs(d0) > ctx.real("0.1"));
    CHECK(abs(d0.im()) < ctx.tol_digits(8));
}

TEST_CASE("dirichlet FE residual on seeded random points") {
    const auto& ctx = ctx60();
    std::mt19937 rng(1105);
    std::uniform_real_distribution<double> re(-2.0, 3.0), im(-30.0, 30.0);
    Real tol = ctx.tol_digits(10);
    int used = 0;
    while (used < 50) {
        double rr = re(rng), ii = im(rng);
        Complex s(ctx.real(rr), ctx.real(ii));
        // step off the real axis' special points
        if (std::abs(ii) < 0.3) continue;
        CHECK(chi5_series().fe_residual(s) < tol);
        CHECK(zeta_series().fe_residual(s) < tol);
        ++used;
    }
}

TEST_CASE("completed xi: reality on the critical line and trivial-zero limits") {
    const auto& ctx = ctx60();
    // root number +1 branch: xi(1/2) real for the even real character
    Complex xi_half = chi5_series().completed_xi(Complex(ctx.real("0.5"), ctx.zero()));
    CHECK(abs(xi_half.im()) < ctx.pow10(-40));

    // FE residual at a specific interior point
    CHECK(chi5_series().fe_residual(Complex(ctx.real("0.3"), ctx.real(2))) < ctx.pow10(-40));

    // zeta: xi finite at the trivial zero s = -2 (pole-zero cancellation)
    Complex xi_m2 = zeta_series().completed_xi(Complex(ctx.real(-2), ctx.zero()));
    CHECK(abs(xi_m2) > 0);
    CHECK(abs(xi_m2) < ctx.real(100));
    // and genuinely singular at s = 0 where zeta(0) != 0
    CHECK_THROWS_AS(zeta_series().completed_xi(Complex(ctx.zero(), ctx.zero())), pole_error);
}

TEST_CASE("cusp form series constructor rejects bad input") {
    const auto& ctx = ctx60();
    auto f = delta_form(64, ctx);
    // twist must be primitive: principal mod 4 is not
    CHECK_THROWS_AS(CuspFormLSeries(f, build_character(4, "principal", ctx), ctx),
                    parameter_error);
}

TEST_CASE("lambda_f of Delta: reality at the center and FE residual") {
    const auto& ctx = ctx60();
    const auto& L = delta_series();
    // |root factor| = 1 and equals i^12 = +1 here
    CHECK(abs(L.root_factor() - Complex(ctx.one(), ctx.zero())) < ctx.tol_digits(5));

    // center s = 6: real value
    Complex center = L.lambda(Complex(ctx.real(6), ctx.zero()));
    CHECK(abs(center.im()) < ctx.tol_digits(10) * abs(center));

    // FE residual at s = 3 + 5i
    CHECK(L.fe_residual(Complex(ctx.real(3), ctx.real(5))) < ctx.pow10(-40));
}

TEST_CASE("lambda_f against the convergent Dirichlet series at large Re(s)") {
    const auto& ctx = ctx60();
    const auto& L = delta_chi5_series();
    auto tau = ramanujan_tau(4000);
    DirichletCharacter chi5 = build_character(5, "quadratic", ctx);
    Complex s(ctx.real(10), ctx.real(1));
    Complex direct(ctx.zero(), ctx.zero());
    for (long n = 1; n <= 4000; ++n) {
        const Complex& c = chi5(n);
        if (c.re() == 0) continue;
        direct += Complex(ctx.real(tau[n]) * c.re(), ctx.zero()) * rpow(ctx.real(n), -s);
    }
    Complex lam_direct =
        rpow(sqrt(ctx.real(25)) / ctx.two_pi(), s) * gamma(s, ctx) * direct;
    Complex lam = L.lambda(s);
    // the direct series tail at Re s = 10 is ~ n^{-7/2} past 4000, ~1e-12
    CHECK(abs(lam - lam_direct) < ctx.pow10(-8) * abs(lam));
}

TEST_CASE("twisted FE residual at seeded random points, trivial and mod-5 twists") {
    const auto& ctx = ctx60();
    std::mt19937 rng(2207);
    std::uniform_real_distribution<double> re(1.0, 11.0), im(-20.0, 20.0);
    Real tol = ctx.tol_digits(10);
    for (int i = 0; i < 20; ++i) {
        Complex s(ctx.real(re(rng)), ctx.real(im(rng)));
        CHECK(delta_series().fe_residual(s) < tol);
        CHECK(delta_chi5_series().fe_residual(s) < tol);
    }
}

TEST_CASE("AFE truncation is stable: doubled coefficients change nothing") {
    const auto& ctx = ctx60();
    // same form data, arrays twice as long: identical values within tail tol
    CuspFormLSeries a(delta_form(256, ctx), build_character(1, "principal", ctx), ctx);
    CuspFormLSeries b(delta_form(512, ctx), build_character(1, "principal", ctx), ctx);
    Complex s(ctx.real("0.5"), ctx.real(14));
    CHECK(abs(a.lambda(s) - b.lambda(s)) < 2 * ctx.series_tail_tol());
}

TEST_CASE("residue numerator: definition, two-route agreement, conjugation") {
    const auto& ctx = ctx60();
    const auto& L = delta_series();
    Complex rho(ctx.real("0.5"), ctx.real(14));
    // definition unwinding
    Complex lhs = L.residue_numerator(rho);
    Complex rhs = L.lambda(rho) * rpow(ctx.two_pi(), rho);
    CHECK(abs(lhs - rhs) == 0);

    // two-route agreement where Gamma and L_f are separately representable:
    // Gamma(rho) * [Lambda(rho) (2pi)^rho / Gamma(rho)]
    Complex g = gamma(rho, ctx);
    Complex lf = L.lambda(rho) * rpow(ctx.two_pi(), rho) / g;
    CHECK(abs(lhs - g * lf) < ctx.pow10(-30) * abs(lhs));

    // conjugation symmetry for real data
    Complex c1 = L.residue_numerator(conj(rho));
    CHECK(abs(c1 - conj(lhs)) < ctx.tol_digits(10) * abs(lhs));
}

TEST_CASE("L_f'(0) by the limit quotient") {
    const auto& ctx = ctx60();
    const auto& L = delta_series();
    Complex lp0 = L.lfprime_at_zero();
    CHECK(abs(lp0.im()) < ctx.tol_digits(10));  // real for real coefficients

    // L_f(eps)/eps -> L_f'(0): L_f(eps) = Lambda(eps) (2pi)^eps / Gamma(eps)
    Real eps = ctx.pow10(-20);
    Complex se(eps, ctx.zero());
    Complex lf_eps = L.lambda(se) * rpow(ctx.two_pi(), se) / gamma(se, ctx);
    CHECK(abs(lf_eps / eps - lp0) < ctx.pow10(-18));

    // endpoint FE: Lambda(0) = root_factor * Lambda_partner(12)
    Complex end = L.root_factor() * L.lambda_partner(Complex(ctx.real(12), ctx.zero()));
    CHECK(abs(lp0 - end) < ctx.tol_digits(10) * abs(lp0));
}

TEST_CASE("insufficient coefficients raise with the required count") {
    const auto& ctx = ctx60();
    CuspFormLSeries small(delta_form(4, ctx), build_character(1, "principal", ctx), ctx);
    CHECK_THROWS_AS(small.lambda(Complex(ctx.real(6), ctx.zero())), data_error);
}
