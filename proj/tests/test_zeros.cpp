#include <doctest.h>

#include <cstdio>

#include "lambertz/zeros.hpp"

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

const std::vector<LZero>& zeta_zeros_30() {
    static std::vector<LZero> zs = find_zeros(zeta_series(), {30.0, 0.05, ExecPolicy::openmp});
    return zs;
}

}  // namespace

TEST_CASE("zeta zeros below 30 re-derived by scan + bisection") {
    const auto& ctx = ctx60();
    const auto& zs = zeta_zeros_30();
    REQUIRE(zs.size() == 3);
    // ordinates re-derived here agree with the classical decimals
    CHECK(abs(zs[0].t - ctx.real("14.134725141734693790")) < ctx.pow10(-15));
    CHECK(abs(zs[1].t - ctx.real("21.022039638771554993")) < ctx.pow10(-15));
    CHECK(abs(zs[2].t - ctx.real("25.010857580145688763")) < ctx.pow10(-15));
    for (const auto& z : zs) {
        CHECK(z.residual < ctx.pow10(-30));
        CHECK(z.modulus == 1);
    }
    CHECK(zs[0].index == 1);
    CHECK(zs[2].index == 3);
}

TEST_CASE("mod-5 zeros: first ordinate in (0, 10), residual certified") {
    const auto& ctx = ctx60();
    auto zs = find_zeros(chi5_series(), {12.0, 0.05, ExecPolicy::openmp});
    REQUIRE(zs.size() >= 2);
    CHECK(zs[0].t > 0);
    CHECK(zs[0].t < 10);
    CHECK(zs[0].residual < ctx.pow10(-30));
    // simplicity witness holds at every stored zero
    for (const auto& z : zs) {
        Complex rho(ctx.real("0.5"), z.t);
        CHECK(abs(chi5_series().L_deriv(rho)) > 1000 * z.residual);
    }
}

TEST_CASE("halving the scan step discovers no further zeros") {
    auto coarse = find_zeros(chi5_series(), {12.0, 0.05, ExecPolicy::openmp});
    auto fine = find_zeros(chi5_series(), {12.0, 0.025, ExecPolicy::openmp});
    CHECK(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i)
        CHECK(abs(coarse[i].t - fine[i].t) < ctx60().pow10(-25));
}

TEST_CASE("export/import round-trip and perturbation rejection") {
    const auto& ctx = ctx60();
    const auto& zs = zeta_zeros_30();
    std::string path = "zeta_zeros_test.csv";
    export_zeros(zs, path);
    auto back = import_zeros(path, zeta_series());
    REQUIRE(back.size() == zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i)
        CHECK(abs(back[i].t - zs[i].t) < ctx.pow10(-36));  // 38 significant digits stored
    std::remove(path.c_str());

    // perturb one ordinate by 1e-3: certification must fail naming the row
    auto bad = zs;
    bad[1].t += ctx.pow10(-3);
    export_zeros(bad, path);
    CHECK_THROWS_AS(import_zeros(path, zeta_series()), data_error);
    std::remove(path.c_str());

    // empty file: empty list, valid
    std::FILE* fp = std::fopen(path.c_str(), "w");
    std::fclose(fp);
    CHECK(import_zeros(path, zeta_series()).empty());
    std::remove(path.c_str());
}

TEST_CASE("import rejects a digest from the wrong character") {
    const auto& zs = zeta_zeros_30();
    std::string path = "digest_mismatch.csv";
    export_zeros(zs, path);
    CHECK_THROWS_AS(import_zeros(path, chi5_series()), data_error);
    std::remove(path.c_str());
}

TEST_CASE("bracketing rule") {
    const auto& ctx = ctx60();
    Real C = ctx.one();

    // the first two zeta ordinates sit in separate brackets: their gap is
    // far above exp(-t/log(t+3)) + exp(-t'/log(t'+3))
    std::vector<Real> two{ctx.real("14.134725"), ctx.real("21.022039")};
    auto b2 = bracket(two, C, ctx);
    CHECK(b2.groups.size() == 2);

    // single zero: single bracket
    std::vector<Real> one{ctx.real("14.134725")};
    CHECK(bracket(one, C, ctx).groups.size() == 1);

    // artificial near-coincident pair at t = 14: thresholds ~ 2 e^{-14/log 17}
    // ~ 1.4e-2 exceed 1e-9, so they chain
    std::vector<Real> close{ctx.real(14), ctx.real(14) + ctx.pow10(-9)};
    auto bc = bracket(close, C, ctx);
    CHECK(bc.groups.size() == 1);
    CHECK(bc.groups[0] == std::pair<std::size_t, std::size_t>{0, 2});

    // partition property on a mixed-sign list
    std::vector<Real> mixed{-ctx.real("14.1347"), -ctx.real("6.6485"), ctx.real("6.6485"),
                            ctx.real("14.1347"), ctx.real("14.1347") + ctx.pow10(-8)};
    auto bm = bracket(mixed, C, ctx);
    std::size_t covered = 0;
    for (auto [f, l] : bm.groups) covered += l - f;
    CHECK(covered == mixed.size());
    CHECK(bm.groups.size() == 4);  // the last two ordinates share a bracket

    // unsorted input is rejected
    std::vector<Real> unsorted{ctx.real(2), ctx.real(1)};
    CHECK_THROWS_AS(bracket(unsorted, C, ctx), parameter_error);
}

TEST_CASE("rotated xi is real and changes sign across a zero") {
    const auto& ctx = ctx60();
    Real before = rotated_xi(chi5_series(), ctx.real("6.5"));
    Real after = rotated_xi(chi5_series(), ctx.real("6.8"));
    CHECK(((before < 0) != (after < 0)));  // first mod-5 zero lies between
}
