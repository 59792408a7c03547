// Times the OpenMP kernels against their serial reference implementations
// on the workloads that dominate a verification run, and checks that the
// two paths produce bit-identical results.

#include <chrono>
#include <iostream>

#include "lambertz/identity.hpp"

using namespace lambertz;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& f) {
    auto a = std::chrono::steady_clock::now();
    f();
    return seconds(a, std::chrono::steady_clock::now());
}

}  // namespace

int main(int argc, char** argv) {
    unsigned digits = 60;
    std::size_t conv_n = 20000;
    double t_max = 25.0;
    if (argc > 1) conv_n = std::stoul(argv[1]);
    if (argc > 2) t_max = std::stod(argv[2]);

    PrecisionContext ctx(digits);
    std::cout << "threads available: " << hardware_threads() << ", digits: " << digits << "\n\n";

    // kernel 1: twisted convolution
    auto tau = ramanujan_tau(conv_n);
    auto mu = mobius_sieve(conv_n);
    std::vector<Complex> a, b;
    a.reserve(conv_n);
    b.reserve(conv_n);
    for (std::size_t n = 1; n <= conv_n; ++n) {
        a.emplace_back(ctx.real(tau[n]), ctx.zero());
        b.emplace_back(ctx.real(static_cast<long>(mu[n])), ctx.zero());
    }
    DirichletCharacter triv = build_character(1, "principal", ctx);
    DirichletCharacter chi5 = build_character(5, "quadratic", ctx);
    ConvolvedSequence cs, co;
    double conv_s = timed([&] { cs = twisted_convolve(a, triv, b, chi5, conv_n, ctx, ExecPolicy::serial); });
    double conv_p = timed([&] { co = twisted_convolve(a, triv, b, chi5, conv_n, ctx, ExecPolicy::openmp); });
    bool conv_same = true;
    for (std::size_t n = 1; n <= conv_n; ++n)
        conv_same = conv_same && cs(n).re() == co(n).re() && cs(n).im() == co(n).im();
    std::cout << "twisted_convolve(n=" << conv_n << "):  serial " << conv_s << " s,  openmp "
              << conv_p << " s,  speedup " << conv_s / conv_p
              << (conv_same ? "  [bit-identical]" : "  [MISMATCH]") << "\n";

    // kernel 2: zero scan + bisection refinement
    DirichletLSeries series(chi5, ctx);
    std::vector<LZero> zs, zo;
    double scan_s = timed([&] { zs = find_zeros(series, {t_max, 0.05, ExecPolicy::serial}); });
    double scan_p = timed([&] { zo = find_zeros(series, {t_max, 0.05, ExecPolicy::openmp}); });
    bool scan_same = zs.size() == zo.size();
    for (std::size_t i = 0; scan_same && i < zs.size(); ++i) scan_same = zs[i].t == zo[i].t;
    std::cout << "find_zeros(t_max=" << t_max << "):    serial " << scan_s << " s,  openmp "
              << scan_p << " s,  speedup " << scan_s / scan_p
              << (scan_same ? "  [bit-identical]" : "  [MISMATCH]") << "\n";

    // kernel 3: the per-term hypergeometric map of the identity's right side
    IdentityConfig cfg{delta_form((std::max)<std::size_t>(4096, conv_n), ctx),
                       triv,
                       chi5,
                       {ctx.one()},
                       2000,
                       conv_n,
                       4,
                       true,
                       1.0,
                       t_max,
                       0.05,
                       ExecPolicy::serial};
    IdentityConfig cfg2 = cfg;
    cfg2.policy = ExecPolicy::openmp;
    IdentityEvaluator ev_s(std::move(cfg), ctx);
    IdentityEvaluator ev_p(std::move(cfg2), ctx);
    Complex hs(ctx.zero(), ctx.zero()), hp(ctx.zero(), ctx.zero());
    double hyp_s = timed([&] { hs = ev_s.rhs_hypergeometric_sum(ctx.one()).value; });
    double hyp_p = timed([&] { hp = ev_p.rhs_hypergeometric_sum(ctx.one()).value; });
    bool hyp_same = hs.re() == hp.re() && hs.im() == hp.im();
    std::cout << "rhs_hypergeometric_sum(n=" << conv_n << "): serial " << hyp_s << " s,  openmp "
              << hyp_p << " s,  speedup " << hyp_s / hyp_p
              << (hyp_same ? "  [bit-identical]" : "  [MISMATCH]") << "\n";

    return (conv_same && scan_same && hyp_same) ? 0 : 1;
}
