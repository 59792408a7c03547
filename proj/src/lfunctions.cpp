#include "lambertz/lfunctions.hpp"

#include <algorithm>
#include <cmath>

#include "lambertz/special.hpp"

namespace lambertz {

namespace {

double d(const Real& x) { return static_cast<double>(x); }

unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

// ---- DirichletLSeries ------------------------------------------------------

DirichletLSeries::DirichletLSeries(DirichletCharacter chi, const PrecisionContext& ctx)
    : chi_(std::move(chi)), ctx_(&ctx), log_caches_(chi_.modulus()) {
    if (!chi_.primitive())
        throw parameter_error("DirichletLSeries: character must be primitive");
}

void DirichletLSeries::prepare(double t_max) const {
    const unsigned M = chi_.modulus();
    Complex s_top(ctx_->real("0.5"), ctx_->real(t_max));
    unsigned P = hurwitz_shift_length(s_top, ctx_->one(), *ctx_) + 8;
    std::lock_guard lk(cache_mtx_);
    if (P <= cached_len_) return;
    for (unsigned j = 1; j <= M; ++j) {
        auto& cache = log_caches_[j - 1];
        Real alpha = ctx_->real(static_cast<long>(j)) / ctx_->real(static_cast<long>(M));
        for (unsigned i = static_cast<unsigned>(cache.size()); i < P; ++i)
            cache.push_back(log(alpha + ctx_->real(static_cast<long>(i))));
    }
    cached_len_ = P;
}

const std::vector<Real>* DirichletLSeries::cache_for(unsigned j) const {
    const auto& cache = log_caches_[j - 1];
    return cache.empty() ? nullptr : &cache;
}

Complex DirichletLSeries::L(const Complex& s) const {
    const unsigned M = chi_.modulus();
    if (abs(s - ctx_->one()) < ctx_->tol_digits(0))
        throw pole_error("dirichlet_L: s = 1 not reachable through the Hurwitz decomposition");
    Complex acc(ctx_->zero(), ctx_->zero());
    for (unsigned j = 1; j <= M; ++j) {
        const Complex& cj = chi_(j);
        if (cj.re() == 0 && cj.im() == 0) continue;
        Real alpha = ctx_->real(static_cast<long>(j)) / ctx_->real(static_cast<long>(M));
        acc += cj * hurwitz_zeta(s, alpha, *ctx_, cache_for(j));
    }
    return rpow(ctx_->real(static_cast<long>(M)), -s) * acc;
}

Complex DirichletLSeries::L_conj(const Complex& s) const {
    const unsigned M = chi_.modulus();
    Complex acc(ctx_->zero(), ctx_->zero());
    for (unsigned j = 1; j <= M; ++j) {
        const Complex cj = conj(chi_(j));
        if (cj.re() == 0 && cj.im() == 0) continue;
        Real alpha = ctx_->real(static_cast<long>(j)) / ctx_->real(static_cast<long>(M));
        acc += cj * hurwitz_zeta(s, alpha, *ctx_, cache_for(j));
    }
    return rpow(ctx_->real(static_cast<long>(M)), -s) * acc;
}

Complex DirichletLSeries::L_deriv(const Complex& s) const {
    const unsigned M = chi_.modulus();
    if (abs(s - ctx_->one()) < ctx_->tol_digits(0))
        throw pole_error("dirichlet_L_deriv: s = 1 not reachable through the Hurwitz decomposition");
    Complex acc(ctx_->zero(), ctx_->zero());
    for (unsigned j = 1; j <= M; ++j) {
        const Complex& cj = chi_(j);
        if (cj.re() == 0 && cj.im() == 0) continue;
        Real alpha = ctx_->real(static_cast<long>(j)) / ctx_->real(static_cast<long>(M));
        acc += cj * hurwitz_zeta_sderiv(s, alpha, *ctx_, cache_for(j));
    }
    Real logM = log(ctx_->real(static_cast<long>(M)));
    Complex deriv = rpow(ctx_->real(static_cast<long>(M)), -s) * acc - Complex(logM, ctx_->zero()) * L(s);

    // Cauchy-circle cross-validation over L itself
    Real rho = pow(ctx_->real(10), -static_cast<int>(ctx_->digits() / 4));
    const unsigned K = 4;
    Complex circ(ctx_->zero(), ctx_->zero());
    for (unsigned k = 0; k < K; ++k) {
        auto [sn, cs] = sin_cos(ctx_->two_pi() * ctx_->real(static_cast<long>(k)) / ctx_->real(static_cast<long>(K)));
        circ += L(s + Complex(rho * cs, rho * sn)) * Complex(cs, -sn);
    }
    circ /= ctx_->real(static_cast<long>(K)) * rho;
    Real tol = pow(ctx_->real(10), -static_cast<int>(ctx_->digits() / 2)) * (std::max)(ctx_->one(), abs(deriv));
    if (abs(deriv - circ) > tol)
        throw accuracy_error("dirichlet_L_deriv: Hurwitz route and Cauchy circle disagree (" +
                             to_string(abs(deriv - circ), 3) + ")");
    return deriv;
}

Complex DirichletLSeries::root_number() const {
    return chi_.gauss_sum() / (unit_i_pow(chi_.parity_a(), *ctx_) *
                               sqrt(ctx_->real(static_cast<long>(chi_.modulus()))));
}

Complex DirichletLSeries::completed_xi_impl(const Complex& s, bool conjugate) const {
    const unsigned M = chi_.modulus();
    const int a = chi_.parity_a();
    Complex half_arg = (s + ctx_->real(a)) / ctx_->real(2);
    Real piM = ctx_->pi() / ctx_->real(static_cast<long>(M));

    // gamma-factor pole at (s+a)/2 = -m: finite iff L has the trivial zero
    Real nearest = floor(half_arg.re() + ctx_->real("0.5"));
    if (nearest <= 0 && abs(half_arg - Complex(nearest, ctx_->zero())) < ctx_->tol_digits(0)) {
        long m = std::lround(d(nearest));
        Real s0r = 2 * ctx_->real(m) - ctx_->real(a);
        bool compensated = (M > 1) || (M == 1 && m < 0);  // zeta: s=0 pole of xi, s=-2,-4,.. fine
        if (!compensated)
            throw pole_error("completed_xi: gamma-factor pole without a compensating trivial zero");
        // Gamma((s+a)/2) ~ (-1)^mm/mm! * 2/(s-s0) against L(s) ~ L'(s0)(s-s0)
        long mm = -m;
        BigInt fact(1);
        for (long i = 2; i <= mm; ++i) fact *= i;
        Real resg = ctx_->real(fact);
        Complex res = Complex((mm % 2 ? -ctx_->one() : ctx_->one()) / resg, ctx_->zero()) * ctx_->real(2);
        Complex s0(s0r, ctx_->zero());
        Complex Lp = conjugate ? conj(L_deriv(conj(s0))) : L_deriv(s0);
        // xi ~ resg_factor * L'(s0) * (pi/M)^{-(s+a)/2}
        return res * Lp * rpow(piM, -half_arg);
    }
    Complex Lv = conjugate ? L_conj(s) : L(s);
    return rpow(piM, -half_arg) * gamma(half_arg, *ctx_) * Lv;
}

Complex DirichletLSeries::completed_xi(const Complex& s) const {
    return completed_xi_impl(s, false);
}

Real DirichletLSeries::fe_residual(const Complex& s) const {
    Complex lhs = completed_xi_impl(s, false);
    Complex rhs = root_number() * completed_xi_impl(ctx_->one() - s, true);
    Real scale = (std::max)({abs(lhs), abs(rhs), ctx_->tol_digits(0)});
    return abs(lhs - rhs) / scale;
}

// ---- CuspFormLSeries -------------------------------------------------------

CuspFormLSeries::CuspFormLSeries(CuspFormData form, DirichletCharacter twist,
                                 const PrecisionContext& ctx)
    : form_(std::move(form)),
      twist_(std::move(twist)),
      twist_bar_(twist_.conjugate(ctx)),
      ctx_(&ctx) {
    const unsigned Q = form_.level;
    const unsigned r = twist_.modulus();
    if (!twist_.primitive()) throw parameter_error("CuspFormLSeries: twist must be primitive");
    if (gcd_ul(Q, r) != 1) throw parameter_error("CuspFormLSeries: gcd(level, twist modulus) must be 1");
    if (form_.nebentypus.modulus() != 1 && !form_.nebentypus.primitive())
        throw parameter_error("CuspFormLSeries: nebentypus must be primitive or trivial");
    if (form_.weight == 0 || form_.weight % 2 != 0)
        throw parameter_error("CuspFormLSeries: weight must be positive and even");
    levelN_ = static_cast<unsigned long>(Q) * r * r;
    sqrtN_ = sqrt(ctx.real(static_cast<long>(levelN_)));
    // i^k eps_psi^2 chi(r) psi(Q) / r: the proof's Gauss sum is the twist's
    Complex eps = twist_.gauss_sum();
    root_factor_ = unit_i_pow(form_.weight, ctx) * eps * eps * form_.nebentypus(r) * twist_(Q) /
                   ctx.real(static_cast<long>(r));
    Complex eps_b = twist_bar_.gauss_sum();
    root_factor_partner_ = unit_i_pow(form_.weight, ctx) * eps_b * eps_b *
                           conj(form_.nebentypus(r)) * twist_bar_(Q) / ctx.real(static_cast<long>(r));
}

std::size_t CuspFormLSeries::terms_needed(double sigma) const {
    // smallest n with d(n) n^{(k-1)/2} (sqrtN/2 pi n)^{sigma} Gamma-tail below
    // series_tail_tol, by a double-log scan
    double logtol = d(log(ctx_->series_tail_tol()) / ctx_->ln10()) - 3;
    double c = 2 * std::acos(-1.0) / d(sqrtN_);
    double km12 = (form_.weight - 1) / 2.0;
    for (std::size_t n = 1;; ++n) {
        double x = c * static_cast<double>(n);
        if (x > 2.0 * std::fabs(sigma) + 2) {
            double logterm = (km12 + 1.5) * std::log10(static_cast<double>(n)) -
                             sigma * std::log10(x) + ((sigma - 1) * std::log(x) - x) / 2.302585 +
                             std::log10(2.0);
            if (logterm < logtol) return n + 2;
        }
        if (n > 2000000) throw accuracy_error("CuspFormLSeries: truncation bound not attainable");
    }
}

std::vector<Complex> CuspFormLSeries::gamma_ladder(const Complex& s, const Real& c,
                                                   std::size_t n_used) const {
    std::vector<Complex> out(n_used + 1, Complex(ctx_->zero(), ctx_->zero()));
    double thresh = (std::max)(1.0, d(abs(s))) / 2;
    std::size_t n_switch = n_used + 1;
    for (std::size_t n = 1; n <= n_used; ++n)
        if (d(c) * static_cast<double>(n) >= thresh) {
            n_switch = n;
            break;
        }
    for (std::size_t n = 1; n < n_switch && n <= n_used; ++n)
        out[n] = upper_incomplete_gamma(s, c * ctx_->real(static_cast<long>(n)), *ctx_);
    if (n_switch > n_used) return out;

    // anchor at the top, then suffix sums of the short integrals
    Real x_top = c * ctx_->real(static_cast<long>(n_used));
    Complex anchor = upper_incomplete_gamma(s, x_top, *ctx_);
    Complex sm1 = s - ctx_->one();
    auto f = [&](const Real& t) -> Complex { return rpow(t, sm1) * exp(-t); };
    double tau = std::fabs(d(s.im()));
    double sigma = d(s.re());
    std::vector<Complex> interval(n_used, Complex(ctx_->zero(), ctx_->zero()));
    for (std::size_t n = n_switch; n < n_used; ++n) {
        Real x0 = c * ctx_->real(static_cast<long>(n));
        Real x1 = c * ctx_->real(static_cast<long>(n + 1));
        double mag = (sigma - 1) * std::log(d(x0)) - d(x0);
        Real tol = ctx_->quad_tol() / 64 * (std::max)(exp(ctx_->real(mag)), ctx_->tol_digits(-8));
        unsigned pieces = 1 + static_cast<unsigned>(tau * std::log((n + 1.0) / n) / 1.2);
        Complex acc(ctx_->zero(), ctx_->zero());
        for (unsigned p = 0; p < pieces; ++p) {
            Real a = x0 + (x1 - x0) * ctx_->real(static_cast<long>(p)) / ctx_->real(static_cast<long>(pieces));
            Real b = x0 + (x1 - x0) * ctx_->real(static_cast<long>(p + 1)) / ctx_->real(static_cast<long>(pieces));
            acc += integrate_adaptive(f, a, b, tol / pieces, *ctx_);
        }
        interval[n] = acc;
    }
    Complex suffix = anchor;
    out[n_used] = suffix;
    for (std::size_t n = n_used; n-- > n_switch;) {
        suffix += interval[n];
        out[n] = suffix;
    }
    return out;
}

Complex CuspFormLSeries::smoothed_sum(const std::vector<Complex>& coeffs,
                                      const DirichletCharacter& chi, const Complex& s) const {
    std::size_t n_used = terms_needed(d(s.re()));
    if (coeffs.size() < n_used)
        throw data_error("CuspFormLSeries: need coefficients up to n = " + std::to_string(n_used) +
                         " but only " + std::to_string(coeffs.size()) + " are available");
    Real c = ctx_->two_pi() / sqrtN_;
    auto ladder = gamma_ladder(s, c, n_used);
    Complex acc(ctx_->zero(), ctx_->zero());
    for (std::size_t n = 1; n <= n_used; ++n) {
        Complex coef = coeffs[n - 1] * chi(static_cast<long long>(n));
        if (coef.re() == 0 && coef.im() == 0) continue;
        Real xn = c * ctx_->real(static_cast<long>(n));
        acc += coef * rpow(xn, -s) * ladder[n];
    }
    return acc;
}

Complex CuspFormLSeries::lambda(const Complex& s) const {
    Complex k(ctx_->real(static_cast<long>(form_.weight)), ctx_->zero());
    return smoothed_sum(form_.coeffs_f, twist_, s) +
           root_factor_ * smoothed_sum(fricke_partner(form_), twist_bar_, k - s);
}

Complex CuspFormLSeries::lambda_partner(const Complex& s) const {
    Complex k(ctx_->real(static_cast<long>(form_.weight)), ctx_->zero());
    return smoothed_sum(fricke_partner(form_), twist_bar_, s) +
           root_factor_partner_ * smoothed_sum(form_.coeffs_f, twist_, k - s);
}

Complex CuspFormLSeries::residue_numerator(const Complex& rho) const {
    return lambda(rho) * rpow(ctx_->two_pi() / sqrtN_, rho);
}

Complex CuspFormLSeries::lfprime_at_zero() const {
    return lambda(Complex(ctx_->zero(), ctx_->zero()));
}

Real CuspFormLSeries::fe_residual(const Complex& s) const {
    Complex k(ctx_->real(static_cast<long>(form_.weight)), ctx_->zero());
    Complex lhs = lambda(s);
    Complex rhs = root_factor_ * lambda_partner(k - s);
    Real scale = (std::max)({abs(lhs), abs(rhs), ctx_->tol_digits(0)});
    return abs(lhs - rhs) / scale;
}

}  // namespace lambertz
