#include <doctest.h>

#include "lambertz/precision.hpp"

using namespace lambertz;

TEST_CASE("context enforces its invariants") {
    CHECK_THROWS_AS(PrecisionContext(20), config_error);
    PrecisionContext ctx(60);
    CHECK(ctx.digits() == 60);
    CHECK(ctx.series_tail_tol() == ctx.pow10(-50));
    CHECK(ctx.quad_tol() > 0);
    CHECK_THROWS_AS(PrecisionContext(60, ctx.real(-1), ctx.one()), config_error);
    CHECK_THROWS_AS(PrecisionContext(60, ctx.pow10(-5), ctx.pow10(-5)), config_error);
}

TEST_CASE("leaf values carry the working precision through expressions") {
    PrecisionContext ctx(60);
    Real x = ctx.real(2);
    Real y = sqrt(x) + 1;
    CHECK(y.precision() == ctx.work_digits());
    Real z = exp(ctx.real("0.5")) * ctx.pi() - 3;
    CHECK(z.precision() == ctx.work_digits());
}

TEST_CASE("complex arithmetic identities") {
    PrecisionContext ctx(60);
    Complex z(ctx.real(3), ctx.real(-4));
    CHECK(abs(z) == ctx.real(5));
    Complex w = z * conj(z);
    CHECK(w.re() == ctx.real(25));
    CHECK(w.im() == 0);
    Complex q = Complex(ctx.one(), ctx.zero()) / z;
    CHECK(abs(q * z - Complex(ctx.one(), ctx.zero())) < ctx.pow10(-70));

    // exp(log z) = z away from the cut
    Complex e = exp(log(z));
    CHECK(abs(e - z) < ctx.pow10(-70));

    // principal sqrt squares back
    Complex s = sqrt(z);
    CHECK(abs(s * s - z) < ctx.pow10(-70));

    // i^n cycle
    CHECK(abs(unit_i_pow(12, ctx) - Complex(ctx.one(), ctx.zero())) == 0);
    CHECK(abs(unit_i_pow(14, ctx) + Complex(ctx.one(), ctx.zero())) == 0);
    CHECK(abs(unit_i_pow(-1, ctx) - Complex(ctx.zero(), -ctx.one())) == 0);
}

TEST_CASE("rpow matches pow on the positive axis") {
    PrecisionContext ctx(60);
    Complex s(ctx.real("2.5"), ctx.real("1.5"));
    Complex a = rpow(ctx.real(7), s);
    Complex b = pow(Complex(ctx.real(7), ctx.zero()), s);
    CHECK(abs(a - b) < ctx.pow10(-70) * abs(a));
}

TEST_CASE("arithmetic is deterministic for a fixed context") {
    PrecisionContext ctx(45);
    auto run = [&] {
        Real acc = ctx.zero();
        for (int i = 1; i <= 200; ++i) acc += sqrt(ctx.real(i)) / ctx.real(i * i - i + 3);
        return to_string(acc, 45);
    };
    std::string a = run(), b = run();
    CHECK(a == b);
}

TEST_CASE("big integer and rational conversion round correctly") {
    PrecisionContext ctx(60);
    BigInt n("123456789123456789123456789");
    CHECK(ctx.real(n) == ctx.real("123456789123456789123456789"));  // exact at 80 digits
    BigRational q(BigInt(1), BigInt(3));
    CHECK(abs(ctx.real(q) * 3 - 1) < ctx.pow10(-75));
}
