#include "lambertz/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace lambertz {

namespace {

Real at_precision(const Real& x, unsigned digits10) {
    Real r(0, digits10);
    mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Complex at_precision(const Complex& z, unsigned digits10) {
    return {at_precision(z.re(), digits10), at_precision(z.im(), digits10)};
}

double d(const Real& x) { return static_cast<double>(x); }

}  // namespace

// ---- Bernoulli numbers -----------------------------------------------------

const BigRational& bernoulli_rational(unsigned n) {
    static std::vector<BigRational> table;
    static std::shared_mutex mtx;
    {
        std::shared_lock lk(mtx);
        if (n < table.size()) return table[n];
    }
    std::unique_lock lk(mtx);
    if (table.empty()) table.push_back(BigRational(1));
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (table.size() <= n) {
        unsigned m = static_cast<unsigned>(table.size());
        BigRational acc(0);
        BigInt binom(1);  // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            acc += BigRational(binom) * table[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        // binom now C(m+1, m) = m+1
        table.push_back(-acc / BigRational(binom));
    }
    return table[n];
}

namespace {

// B_{2r}/(2r)! at the context's working precision, cached per precision
const Real& bernoulli_over_factorial(unsigned r, const PrecisionContext& ctx) {
    static std::map<unsigned, std::vector<Real>> cache;
    static std::shared_mutex mtx;
    unsigned wd = ctx.work_digits();
    {
        std::shared_lock lk(mtx);
        auto it = cache.find(wd);
        if (it != cache.end() && r < it->second.size()) return it->second[r];
    }
    std::unique_lock lk(mtx);
    auto& vec = cache[wd];
    while (vec.size() <= r) {
        unsigned k = static_cast<unsigned>(vec.size());
        BigInt fact(1);
        for (unsigned i = 2; i <= 2 * k; ++i) fact *= i;
        vec.push_back(ctx.real(bernoulli_rational(2 * k) / BigRational(fact)));
    }
    return vec[r];
}

}  // namespace

// ---- gamma / log-gamma -----------------------------------------------------

namespace {

void check_gamma_pole(const Complex& s, const PrecisionContext& ctx) {
    if (s.re() > ctx.real("0.25")) return;
    Real nearest = floor(s.re() + Real(1, ctx.work_digits()) / 2);
    if (nearest > 0) return;
    Real dist = abs(Complex(s.re() - nearest, s.im()));
    if (dist < ctx.tol_digits(0))
        throw pole_error("gamma: argument within 10^-digits of a non-positive integer");
}

// Stirling series for log Gamma(w); caller guarantees Re(w) >= 1 and |w|
// past the digits-dependent threshold.
Complex stirling_log_gamma(const Complex& w, const PrecisionContext& ctx) {
    Complex lw = log(w);
    Complex lead = (w - Real(1, ctx.work_digits()) / 2) * lw - w + ctx.log_two_pi() / 2;
    Real eps = pow(ctx.real(10), -static_cast<int>(ctx.work_digits() + 5));
    Real scale = (std::max)(ctx.one(), abs(lead));
    Complex winv2 = Real(1, ctx.work_digits()) / (w * w);
    Complex wpow = Real(1, ctx.work_digits()) / w;  // w^{-(2r-1)}
    Complex sum(ctx.zero(), ctx.zero());
    Real prev = ctx.real(0);
    for (unsigned r = 1; r < 4000; ++r) {
        Real coef = ctx.real(bernoulli_rational(2 * r)) /
                    ctx.real(static_cast<long>(2 * r) * static_cast<long>(2 * r - 1));
        Complex term = coef * wpow;
        Real mag = abs(term);
        sum += term;
        if (mag < eps * scale) return lead + sum;
        if (r > 4 && mag > prev)
            throw accuracy_error("log_gamma: Stirling series diverged before tolerance");
        prev = mag;
        wpow *= winv2;
    }
    throw accuracy_error("log_gamma: Stirling series did not converge");
}

}  // namespace

Complex log_gamma(const Complex& s, const PrecisionContext& ctx) {
    check_gamma_pole(s, ctx);
    double rstar = 0.55 * ctx.work_digits() + 8;
    Complex w = s;
    std::vector<Complex> shifts;
    while (d(w.re()) < 1.0 || d(abs(w)) < rstar) {
        shifts.push_back(w);
        w += ctx.one();
    }
    Complex lg = stirling_log_gamma(w, ctx);
    for (const Complex& z : shifts) lg -= log(z);
    return lg;
}

Complex gamma(const Complex& s, const PrecisionContext& ctx) {
    check_gamma_pole(s, ctx);
    if (s.re() >= ctx.real("0.5")) return exp(log_gamma(s, ctx));
    long m = static_cast<long>(std::ceil(0.5 - d(s.re())));
    Complex prod(ctx.one(), ctx.zero());
    Complex z = s;
    for (long j = 0; j < m; ++j) {
        prod *= z;
        z += ctx.one();
    }
    return exp(log_gamma(z, ctx)) / prod;
}

// ---- upper incomplete gamma ------------------------------------------------

namespace {

// Gamma(s,x) = Gamma(s) - x^s sum_m (-x)^m / (m! (s+m)), for x below the
// size threshold; evaluated at a precision raised to cover the alternating
// cancellation (~ e^{2x}) and any near-pole 1/(s+m) amplification.
Complex incomplete_gamma_series(const Complex& s, const Real& x, const PrecisionContext& ctx) {
    double dist_pole = 1e9;
    if (d(s.re()) < 0.6) {
        double nearest = std::round(d(s.re()));
        if (nearest <= 0)
            dist_pole = std::hypot(d(s.re()) - nearest, d(s.im()));
    }
    unsigned raise = static_cast<unsigned>(std::ceil(0.87 * d(x))) + 10;
    if (dist_pole < 1.0) raise += static_cast<unsigned>(std::ceil(-std::log10((std::max)(dist_pole, 1e-300))));
    PrecisionContext hctx(ctx.digits() + raise);
    Complex sh = at_precision(s, hctx.work_digits());
    Real xh = at_precision(x, hctx.work_digits());

    Complex sum(hctx.zero(), hctx.zero());
    Real u = hctx.one();  // (-x)^m / m!
    Real eps = pow(hctx.real(10), -static_cast<int>(hctx.work_digits() + 5));
    unsigned mmax = static_cast<unsigned>(10 * d(x) + 4 * hctx.work_digits() + 64);
    for (unsigned m = 0; m <= mmax; ++m) {
        Complex denom = sh + hctx.real(static_cast<long>(m));
        sum += u / denom;
        u *= -xh / hctx.real(static_cast<long>(m + 1));
        if (m > d(x) && abs(u) < eps) break;
    }
    Complex res = gamma(sh, hctx) - rpow(xh, sh) * sum;
    return at_precision(res, ctx.work_digits());
}

// E_1-type series at the exact non-positive integers, where Gamma(s,x) is
// entire but both pieces of the series route blow up.
Complex incomplete_gamma_nonpositive_int(long n, const Real& x, const PrecisionContext& ctx) {
    unsigned raise = static_cast<unsigned>(std::ceil(0.87 * d(x))) + 10;
    PrecisionContext hctx(ctx.digits() + raise);
    Real xh = at_precision(x, hctx.work_digits());
    // Gamma(0,x) = -euler - log x - sum_{m>=1} (-x)^m / (m m!)
    Real sum = hctx.zero();
    Real u = hctx.one();
    Real eps = pow(hctx.real(10), -static_cast<int>(hctx.work_digits() + 5));
    unsigned mmax = static_cast<unsigned>(10 * d(x) + 4 * hctx.work_digits() + 64);
    for (unsigned m = 1; m <= mmax; ++m) {
        u *= -xh / hctx.real(static_cast<long>(m));
        Real term = u / hctx.real(static_cast<long>(m));
        sum += term;
        if (m > d(x) && abs(term) < eps) break;
    }
    Real g0 = -hctx.euler() - log(xh) - sum;
    Complex g(g0, hctx.zero());
    // walk down: Gamma(s-1,x) = (Gamma(s,x) - x^{s-1} e^{-x}) / (s-1)
    Real emx = exp(-xh);
    for (long sl = 0; sl > n; --sl) {
        Real xp = pow(xh, static_cast<int>(sl - 1));
        g = (g - Complex(xp * emx, hctx.zero())) / hctx.real(sl - 1);
    }
    return at_precision(g, ctx.work_digits());
}

Complex incomplete_gamma_quadrature(const Complex& s, const Real& x, const PrecisionContext& ctx) {
    // e^{-x} int_0^U (x+u)^{s-1} e^{-u} du, panels sized against the
    // oscillation rate |Im s| / (x+u)
    double sigma = d(s.re());
    double tau = std::fabs(d(s.im()));
    double ln_tol = d(log(ctx.quad_tol())) - 18;
    double U = -ln_tol;
    for (int it = 0; it < 4; ++it)
        U = (std::max)(1.0, -ln_tol + (std::max)(sigma - 1, 0.0) * std::log(d(x) + U));
    // tolerance for the u-integral, relative to its natural x^{sigma-1} scale
    // (the final e^{-x} factor is applied afterwards)
    Real tol_u = exp(ctx.real(ln_tol)) * (std::max)(ctx.one(), pow(x, ctx.real(sigma - 1)));
    Complex sm1 = s - ctx.one();
    auto f = [&](const Real& u) -> Complex { return rpow(x + u, sm1) * exp(-u); };
    Complex total(ctx.zero(), ctx.zero());
    double u0 = 0;
    while (u0 < U) {
        double len = (std::min)({8.0, U - u0, 1.2 * (d(x) + u0) / (std::max)(tau, 1.0),
                                 (d(x) + u0) / 2});
        len = (std::max)(len, 1e-3);
        double u1 = (std::min)(U, u0 + len);
        total += integrate_adaptive(f, ctx.real(u0), ctx.real(u1), tol_u * ((u1 - u0) / U), ctx);
        u0 = u1;
    }
    return total * exp(-x);
}

}  // namespace

Complex upper_incomplete_gamma(const Complex& s, const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0)) throw parameter_error("upper_incomplete_gamma: x must be positive");
    double thresh = (std::max)(1.0, d(abs(s))) / 2;
    if (d(x) >= thresh) return incomplete_gamma_quadrature(s, x, ctx);
    if (d(s.re()) < 0.5) {
        Real nearest = floor(s.re() + ctx.real("0.5"));
        if (nearest <= 0 && abs(Complex(s.re() - nearest, s.im())) < ctx.tol_digits(0))
            return incomplete_gamma_nonpositive_int(static_cast<long>(d(nearest)), x, ctx);
    }
    return incomplete_gamma_series(s, x, ctx);
}

// ---- Hurwitz zeta ----------------------------------------------------------

namespace {

struct EmPlan {
    unsigned P;  // shift length
    unsigned q;  // Bernoulli order: terms B_2 .. B_{2q}
};

EmPlan em_plan(const Complex& s, const Real& alpha, const PrecisionContext& ctx) {
    unsigned q = ctx.digits() / 2 + 2;
    double sigma = d(s.re());
    if (sigma < -2.0 * q + 4) throw parameter_error("hurwitz_zeta: Re(s) too negative for the configured Bernoulli order");
    double logtol = d(log(ctx.series_tail_tol()) / ctx.ln10()) - 2;
    // log10 of |B_{2q+2}/(2q+2)!| ~ 2/(2pi)^{2q+2}
    double logb = std::log10(2.0) - (2.0 * q + 2) * std::log10(2 * std::acos(-1.0));
    // log10 |(s)_{2q+1}|, each factor clamped below by 1 so a plan chosen at
    // s stays valid on a small circle around it
    double logpoch = 0;
    double sr = sigma, si = d(s.im());
    for (unsigned j = 0; j <= 2 * q; ++j)
        logpoch += 0.5 * std::log10((std::max)((sr + j) * (sr + j) + si * si, 1.0));
    double a = d(alpha);
    double cap = std::log10(std::hypot(sr + 2.0 * q + 1, si) / (sigma + 2.0 * q + 1));
    unsigned P = 1;
    while (true) {
        double bound = logb + logpoch - (sigma + 2.0 * q + 1) * std::log10(P + a) + cap;
        if (bound <= logtol) break;
        P = (P < 16) ? P + 1 : P + P / 8;
        if (P > 2000000) throw accuracy_error("hurwitz_zeta: shift length bound not attainable");
    }
    return {P, q};
}

Complex hurwitz_em(const Complex& s, const Real& alpha, const EmPlan& plan,
                   const PrecisionContext& ctx, const std::vector<Real>* log_cache) {
    const unsigned P = plan.P, q = plan.q;
    Complex s1(ctx.zero(), ctx.zero());
    for (unsigned j = 0; j < P; ++j) {
        Real lg = (log_cache && j < log_cache->size()) ? (*log_cache)[j] : log(alpha + ctx.real(static_cast<long>(j)));
        Complex e = exp(Complex(-s.re() * lg, -s.im() * lg));
        s1 += e;
    }
    Real T = alpha + ctx.real(static_cast<long>(P));
    Complex W = rpow(T, -s);
    Complex s2 = (T * W) / (s - ctx.one());
    Complex s3 = W / ctx.real(2);
    Complex s4(ctx.zero(), ctx.zero());
    Complex poch = s;                         // (s)_{2r-1}
    Real tpow = ctx.one() / T;                // T^{1-2r}
    Real tinv2 = ctx.one() / (T * T);
    for (unsigned r = 1; r <= q; ++r) {
        s4 += bernoulli_over_factorial(r, ctx) * poch * W * tpow;
        poch *= (s + ctx.real(static_cast<long>(2 * r - 1))) * (s + ctx.real(static_cast<long>(2 * r)));
        tpow *= tinv2;
    }
    return s1 + s2 + s3 + s4;
}

void check_hurwitz_args(const Complex& s, const Real& alpha, const PrecisionContext& ctx) {
    // contract domain is (0,1]; anything positive works and the shift
    // identity zeta(s,a) = a^{-s} + zeta(s,a+1) is tested through a+1
    if (!(alpha > 0)) throw parameter_error("hurwitz_zeta: alpha must be positive");
    if (abs(s - ctx.one()) < ctx.tol_digits(0)) throw pole_error("hurwitz_zeta: pole at s = 1");
}

}  // namespace

unsigned hurwitz_shift_length(const Complex& s, const Real& alpha, const PrecisionContext& ctx) {
    return em_plan(s, alpha, ctx).P;
}

Complex hurwitz_zeta(const Complex& s, const Real& alpha, const PrecisionContext& ctx,
                     const std::vector<Real>* log_cache) {
    check_hurwitz_args(s, alpha, ctx);
    return hurwitz_em(s, alpha, em_plan(s, alpha, ctx), ctx, log_cache);
}

Complex hurwitz_zeta_sderiv(const Complex& s, const Real& alpha, const PrecisionContext& ctx,
                            const std::vector<Real>* log_cache, std::optional<Real> radius) {
    check_hurwitz_args(s, alpha, ctx);
    EmPlan plan = em_plan(s, alpha, ctx);  // one plan for every sample point
    Real rho = radius ? *radius : pow(ctx.real(10), -static_cast<int>(ctx.digits() / 4));
    const unsigned K = 8;
    Complex acc(ctx.zero(), ctx.zero());
    for (unsigned k = 0; k < K; ++k) {
        auto [sn, cs] = sin_cos(ctx.two_pi() * ctx.real(static_cast<long>(k)) / ctx.real(static_cast<long>(K)));
        Complex node = s + Complex(rho * cs, rho * sn);
        acc += hurwitz_em(node, alpha, plan, ctx, log_cache) * Complex(cs, -sn);
    }
    Complex deriv = acc / (ctx.real(static_cast<long>(K)) * rho);
    // central-difference cross-check at the same shift plan; one Richardson
    // step removes the rho^2 f''' term that would otherwise dominate the
    // comparison at large |Im s|
    auto central = [&](const Real& h) {
        Complex fp = hurwitz_em(s + Complex(h, ctx.zero()), alpha, plan, ctx, log_cache);
        Complex fm = hurwitz_em(s - Complex(h, ctx.zero()), alpha, plan, ctx, log_cache);
        return (fp - fm) / (ctx.real(2) * h);
    };
    Complex cd_h = central(rho);
    Complex cd_h2 = central(rho / 2);
    Complex cd = (ctx.real(4) * cd_h2 - cd_h) / ctx.real(3);
    Real tol = pow(ctx.real(10), -static_cast<int>(ctx.digits() / 2)) *
               (std::max)(ctx.one(), abs(deriv));
    if (abs(deriv - cd) > tol)
        throw accuracy_error("hurwitz_zeta_sderiv: circle and central-difference estimates disagree (" +
                             to_string(abs(deriv - cd), 3) + ")");
    return deriv;
}

// ---- Gauss 2F1 -------------------------------------------------------------

namespace {

Real gauss_2f1_series(const Real& a, const Real& b, const Real& c, const Real& z,
                      const PrecisionContext& ctx) {
    Real sum = ctx.one();
    Real term = ctx.one();
    Real eps = pow(ctx.real(10), -static_cast<int>(ctx.work_digits() + 2));
    Real absz = abs(z);
    for (unsigned m = 0; m < 2000000; ++m) {
        Real rm = ctx.real(static_cast<long>(m));
        term *= (a + rm) * (b + rm) / ((c + rm) * (rm + 1)) * z;
        sum += term;
        if (m > 2) {
            Real ratio = abs((a + rm) * (b + rm) / ((c + rm) * (rm + 2))) * absz;
            if (ratio < 1 && abs(term) / (1 - ratio) < eps * (std::max)(ctx.one(), abs(sum)))
                return sum;
        }
    }
    throw accuracy_error("gauss_2f1: series did not converge");
}

}  // namespace

Real gauss_2f1(const Real& a, const Real& b, const Real& c, const Real& z,
               const PrecisionContext& ctx) {
    if (z > 0) throw parameter_error("gauss_2f1: argument must satisfy z <= 0");
    Real nearest = floor(c + ctx.real("0.5"));
    if (nearest <= 0 && abs(c - nearest) < ctx.tol_digits(0))
        throw parameter_error("gauss_2f1: c is a non-positive integer");
    if (z == 0) return ctx.one();
    if (z > -1) return gauss_2f1_series(a, b, c, z, ctx);
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)), w in [1/2, 1)
    Real w = z / (z - 1);
    return pow(1 - z, -a) * gauss_2f1_series(a, c - b, c, w, ctx);
}

// ---- Gauss-Legendre nodes and adaptive quadrature --------------------------

const GaussLegendre& gauss_legendre(unsigned n, const PrecisionContext& ctx) {
    static std::map<std::pair<unsigned, unsigned>, GaussLegendre> cache;
    static std::shared_mutex mtx;
    auto key = std::make_pair(n, ctx.work_digits());
    {
        std::shared_lock lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::unique_lock lk(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    const double pi_d = std::acos(-1.0);
    int iters = 4 + static_cast<int>(std::ceil(std::log2(ctx.work_digits() / 14.0 + 1)));
    for (unsigned i = 0; i < n; ++i) {
        Real x = ctx.real(std::cos(pi_d * (i + 0.75) / (n + 0.5)));
        Real dp = ctx.zero();
        for (int it2 = 0; it2 < iters + 2; ++it2) {
            // Legendre recurrence for P_n(x), P_n'(x)
            Real p0 = ctx.one(), p1 = x;
            for (unsigned k = 2; k <= n; ++k) {
                Real p2 = ((2 * ctx.real(static_cast<long>(k)) - 1) * x * p1 -
                           (ctx.real(static_cast<long>(k)) - 1) * p0) /
                          ctx.real(static_cast<long>(k));
                p0 = p1;
                p1 = p2;
            }
            dp = ctx.real(static_cast<long>(n)) * (x * p1 - p0) / (x * x - 1);
            x -= p1 / dp;
        }
        gl.nodes[i] = x;
        gl.weights[i] = 2 / ((1 - x * x) * dp * dp);
    }
    auto [pos, inserted] = cache.emplace(key, std::move(gl));
    (void)inserted;
    return pos->second;
}

namespace {

Complex gl_apply(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                 const GaussLegendre& gl, const PrecisionContext& ctx) {
    Real mid = (a + b) / 2;
    Real half = (b - a) / 2;
    Complex acc(ctx.zero(), ctx.zero());
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        acc += f(mid + half * gl.nodes[i]) * gl.weights[i];
    return acc * half;
}

Complex integrate_rec(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                      const Real& tol, const PrecisionContext& ctx, const GaussLegendre& g24,
                      const GaussLegendre& g48, int depth) {
    Complex i24 = gl_apply(f, a, b, g24, ctx);
    Complex i48 = gl_apply(f, a, b, g48, ctx);
    Real err = abs(i48 - i24);
    if (err <= tol || depth >= 44) {
        if (depth >= 44 && err > tol * 1000)
            throw accuracy_error("integrate_adaptive: declared tolerance unattainable (achieved " +
                                 to_string(err, 3) + ")");
        return i48;
    }
    Real mid = (a + b) / 2;
    Real half_tol = tol / 2;
    return integrate_rec(f, a, mid, half_tol, ctx, g24, g48, depth + 1) +
           integrate_rec(f, mid, b, half_tol, ctx, g24, g48, depth + 1);
}

}  // namespace

Complex integrate_adaptive(const std::function<Complex(const Real&)>& f, const Real& a,
                           const Real& b, const Real& tol, const PrecisionContext& ctx) {
    const GaussLegendre& g24 = gauss_legendre(24, ctx);
    const GaussLegendre& g48 = gauss_legendre(48, ctx);
    return integrate_rec(f, a, b, tol, ctx, g24, g48, 0);
}

// ---- Mellin-Barnes U_{n,a} --------------------------------------------------

Real mellin_barnes_u(unsigned n, int parity_a, unsigned k, unsigned levelN, unsigned modulusM,
                     const Real& y, const PrecisionContext& ctx, std::optional<Real> lambda) {
    if (!(y > 0)) throw parameter_error("mellin_barnes_u: y must be positive");
    if (parity_a != 0 && parity_a != 1) throw parameter_error("mellin_barnes_u: parity must be 0 or 1");
    Real lam = lambda ? *lambda : ctx.real(-1) / 2;
    if (!(lam > -1) || !(lam < 0)) throw parameter_error("mellin_barnes_u: lambda must lie in (-1,0)");

    Real base = ctx.real(static_cast<long>(levelN)) * y /
                (ctx.two_pi() * ctx.real(static_cast<long>(modulusM)) * ctx.real(static_cast<long>(n)));
    Real z = base * base;
    Real lnz = log(z);
    Real sigma0 = (ctx.real(static_cast<long>(k)) - lam) / 2;
    Real ka2 = ctx.real(static_cast<long>(k) + parity_a) / 2;
    Real shift4 = (ctx.one() - ctx.real(static_cast<long>(k)) + ctx.real(parity_a)) / 2;

    auto F = [&](const Real& t) -> Complex {
        Complex s(sigma0, t);
        Complex lg = log_gamma(s, ctx) + log_gamma(s + ctx.real("0.5"), ctx) -
                     log_gamma(s + Complex(shift4, ctx.zero()), ctx) + s * Complex(lnz, ctx.zero());
        return exp(lg) * gamma(Complex(ka2, ctx.zero()) - s, ctx);
    };

    // integrate over t > 0 (Schwarz symmetry supplies t < 0), in segments
    // sized against the z^{it} oscillation, until the e^{-pi t} decay is
    // exhausted
    double seg = (std::max)(0.5, (std::min)(4.0, 6.28 / (std::fabs(d(lnz)) + 0.5)));
    Real tol_seg = ctx.quad_tol() / 50;
    Complex total(ctx.zero(), ctx.zero());
    double t0 = 0;
    int quiet = 0;
    while (t0 < 4000) {
        double t1 = t0 + seg;
        Complex piece = integrate_adaptive(F, ctx.real(t0), ctx.real(t1), tol_seg, ctx);
        total += piece;
        t0 = t1;
        if (t0 > k + 6 && abs(piece) < ctx.quad_tol() / 20 && abs(F(ctx.real(t0))) < ctx.quad_tol() / 20)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 2) break;
    }
    if (t0 >= 4000) throw accuracy_error("mellin_barnes_u: contour tail did not decay");
    return total.re() / (ctx.pi() * ctx.sqrt_pi());
}

}  // namespace lambertz
