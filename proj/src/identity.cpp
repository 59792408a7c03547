#include "lambertz/identity.hpp"

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

bool is_real_sequence(const std::vector<Complex>& v, const Real& tol) {
    for (const Complex& z : v)
        if (abs(z.im()) > tol) return false;
    return true;
}

}  // namespace

IdentityEvaluator::IdentityEvaluator(IdentityConfig config, const PrecisionContext& ctx)
    : cfg_(std::move(config)), ctx_(&ctx) {
    const unsigned Q = cfg_.form.level;
    const unsigned r = cfg_.psi.modulus();
    const unsigned M = cfg_.psi_prime.modulus();
    const unsigned k = cfg_.form.weight;
    if (gcd_ul(Q, r) != 1) throw config_error("identity: gcd(Q, r) must be 1");
    if (!cfg_.psi.primitive() || !cfg_.psi_prime.primitive())
        throw config_error("identity: psi and psi' must be primitive");
    for (const Real& y : cfg_.y_values)
        if (!(y > 0)) throw config_error("identity: every y must be positive");
    if (cfg_.n_max_lhs < 1 || cfg_.n_max_rhs < 1 || cfg_.zero_budget < 1)
        throw config_error("identity: truncation parameters must be positive");
    if (!(cfg_.bracket_C > 0)) throw config_error("identity: bracket constant C must be positive");

    const std::size_t lhs_need = 2 * cfg_.n_max_lhs;
    if (cfg_.form.coeffs_f.size() < (std::max)(lhs_need, cfg_.n_max_rhs))
        throw config_error("identity: coefficient arrays must reach max(2 n_max_lhs, n_max_rhs) = " +
                           std::to_string((std::max)(lhs_need, cfg_.n_max_rhs)));

    lf_ = std::make_unique<CuspFormLSeries>(cfg_.form, cfg_.psi, ctx);
    lps_ = std::make_unique<DirichletLSeries>(cfg_.psi_prime, ctx);

    // mu and mu_k as coefficient sequences
    std::size_t conv_len = (std::max)(lhs_need, cfg_.n_max_rhs);
    auto mu = mobius_sieve(conv_len);
    std::vector<Complex> mu_seq(conv_len, Complex(ctx.zero(), ctx.zero()));
    std::vector<Complex> mu_k_seq(conv_len, Complex(ctx.zero(), ctx.zero()));
    for (std::size_t n = 1; n <= conv_len; ++n) {
        if (mu[n] == 0) continue;
        mu_seq[n - 1] = Complex(ctx.real(static_cast<long>(mu[n])), ctx.zero());
        mu_k_seq[n - 1] = Complex(ctx.real(mu_k(n, k)), ctx.zero());
    }

    DirichletCharacter psi_bar = cfg_.psi.conjugate(ctx);
    DirichletCharacter psi_prime_bar = cfg_.psi_prime.conjugate(ctx);
    conv_lhs_ = twisted_convolve(cfg_.form.coeffs_f, cfg_.psi, mu_seq, cfg_.psi_prime, lhs_need,
                                 ctx, cfg_.policy);
    conv_rhs_ = twisted_convolve(fricke_partner(cfg_.form), psi_bar, mu_k_seq, psi_prime_bar,
                                 cfg_.n_max_rhs, ctx, cfg_.policy);

    // 2 N^{k/2} Gamma(k+a) (N/M)^a (i/2pi)^{k+a} chi(r) psi(Q) eps_psi^2 / (r eps_psi')
    const int a = cfg_.psi_prime.parity_a();
    const unsigned long N = lf_->level_N();
    BigInt fact(1);
    for (unsigned i = 2; i <= k + static_cast<unsigned>(a) - 1; ++i) fact *= i;
    Real gamma_ka = ctx.real(fact);
    Real Nk2 = pow(ctx.real(static_cast<long>(N)), static_cast<int>(k / 2));
    Real NMa = a == 0 ? ctx.one() : ctx.real(static_cast<long>(N)) / ctx.real(static_cast<long>(M));
    Complex i_pow = unit_i_pow(k + a, ctx);
    Real two_pi_pow = pow(ctx.two_pi(), static_cast<int>(k + a));
    Complex eps_psi = cfg_.psi.gauss_sum();
    Complex phi = cfg_.form.nebentypus(r) * cfg_.psi(Q) * eps_psi * eps_psi /
                  (ctx.real(static_cast<long>(r)) * cfg_.psi_prime.gauss_sum());
    prefactor_ = ctx.real(2) * Nk2 * gamma_ka * NMa * i_pow / two_pi_pow * phi;

    conv_lhs_max_ = ctx.zero();
    for (std::size_t n = 1; n <= lhs_need; ++n)
        conv_lhs_max_ = (std::max)(conv_lhs_max_, abs(conv_lhs_(n)));
}

void IdentityEvaluator::use_zeros(std::vector<LZero> zeros) {
    zeros_ = std::move(zeros);
    w_.clear();
}

std::size_t IdentityEvaluator::budget_positive_zeros() const {
    // "pairs": budget conjugate pairs; "terms": each of +-t counts once
    return cfg_.budget_pairs ? cfg_.zero_budget : (cfg_.zero_budget + 1) / 2;
}

void IdentityEvaluator::ensure_zeros(unsigned min_count) {
    if (zeros_.size() >= min_count) return;
    ZeroScanOptions opts{cfg_.t_max, cfg_.scan_step, cfg_.policy};
    zeros_ = find_zeros(*lps_, opts);
    w_.clear();
    if (zeros_.size() < min_count)
        throw config_error("identity: only " + std::to_string(zeros_.size()) + " zeros below t_max = " +
                           std::to_string(cfg_.t_max) + ", need " + std::to_string(min_count) +
                           "; raise t_max");
}

void IdentityEvaluator::ensure_residue_data(std::size_t count) {
    ensure_zeros(static_cast<unsigned>(count));
    if (w_.size() >= count) return;
    std::size_t old = w_.size();
    w_.resize(count, Complex(ctx_->zero(), ctx_->zero()));
    parallel_for(count - old, cfg_.policy, [&](std::size_t i) {
        std::size_t idx = old + i;
        Complex rho(ctx_->real("0.5"), zeros_[idx].t);
        Complex num = lf_->residue_numerator(rho);
        Complex den = lps_->L_deriv(rho);
        Real floor_mag = 1000 * (std::max)(zeros_[idx].residual, ctx_->tol_digits(0));
        if (!(abs(den) > floor_mag))
            throw data_error("residue sum: |L'(rho)| below the simplicity witness threshold at t = " +
                             to_string(zeros_[idx].t, 20));
        w_[idx] = num / den;
    });
}

SeriesValue IdentityEvaluator::lhs_series(const Real& y) const {
    if (!(y > 0)) throw parameter_error("lhs_series: y must be positive");
    const std::size_t n_max = cfg_.n_max_lhs;
    Real q = exp(-y);
    Complex acc(ctx_->zero(), ctx_->zero());
    Real qn = ctx_->one();
    for (std::size_t n = 1; n <= n_max; ++n) {
        qn *= q;
        const Complex& c = conv_lhs_(n);
        if (c.re() == 0 && c.im() == 0) continue;
        acc += c * qn;
    }
    Real tail = conv_lhs_max_ * exp(-(ctx_->real(static_cast<long>(n_max)) + 1) * y) / (1 - q);
    return {acc, tail, tail > ctx_->series_tail_tol()};
}

SeriesValue IdentityEvaluator::rhs_hypergeometric_sum(const Real& y) const {
    if (!(y > 0)) throw parameter_error("rhs_hypergeometric_sum: y must be positive");
    const unsigned k = cfg_.form.weight;
    const int a = parity_a();
    const unsigned M = cfg_.psi_prime.modulus();
    const std::size_t n_max = cfg_.n_max_rhs;

    Real fa = ctx_->real(static_cast<long>(k) + a) / 2;
    Real fb = ctx_->real(static_cast<long>(k) + 1 + a) / 2;
    Real fc = ctx_->real(1 + 2 * a) / 2;
    Real base = ctx_->real(static_cast<long>(lf_->level_N())) * y /
                (ctx_->two_pi() * ctx_->real(static_cast<long>(M)));
    Real one_minus_a = ctx_->real(1 - a);

    std::vector<Complex> terms(n_max, Complex(ctx_->zero(), ctx_->zero()));
    parallel_for(n_max, cfg_.policy, [&](std::size_t i) {
        std::size_t n = i + 1;
        const Complex& c = conv_rhs_(n);
        if (c.re() == 0 && c.im() == 0) return;
        Real bn = base / ctx_->real(static_cast<long>(n));
        Real kernel = gauss_2f1(fa, fb, fc, -bn * bn, *ctx_) - one_minus_a;
        terms[i] = c * kernel / pow(ctx_->real(static_cast<long>(n)), static_cast<int>(k + a));
    });
    Complex acc(ctx_->zero(), ctx_->zero());
    for (const Complex& t : terms) acc += t;

    Complex value = prefactor_ * (a == 0 ? ctx_->one() : y) * acc;

    // tail: coefficient scale from the last stored decade, kernel tail from
    // the z -> 0 expansion (O(y^2/n^2) per term), plus the m = 0 piece for
    // odd parity
    Real chat = ctx_->zero();
    for (std::size_t n = (std::max)(std::size_t{1}, n_max / 2); n <= n_max; ++n)
        chat = (std::max)(chat, abs(conv_rhs_(n)) / pow(ctx_->real(static_cast<long>(n)), static_cast<int>(k - 1)));
    Real c1 = fa * fb / fc;
    Real nmax_r = ctx_->real(static_cast<long>(n_max));
    Real tail = abs(prefactor_) * pow(y, a) * chat *
                (c1 * base * base / pow(nmax_r, 2 + a) / (2 + a) + (a == 1 ? 1 / nmax_r : ctx_->zero()));
    return {value, tail, tail > ctx_->series_tail_tol()};
}

Complex IdentityEvaluator::residue_sum(const Real& y, std::vector<Complex>* bracket_subtotals) {
    if (!(y > 0)) throw parameter_error("residue_sum: y must be positive");
    if (!cfg_.psi_prime.real_valued() || !cfg_.psi.real_valued() ||
        !cfg_.form.nebentypus.real_valued() ||
        !is_real_sequence(cfg_.form.coeffs_f, ctx_->tol_digits(10)))
        throw parameter_error("residue_sum: conjugate-pair folding needs the all-real configuration");
    const std::size_t count = budget_positive_zeros();
    ensure_residue_data(count);

    std::vector<Real> ordinates;
    ordinates.reserve(count);
    for (std::size_t i = 0; i < count; ++i) ordinates.push_back(zeros_[i].t);
    Bracketing br = bracket(ordinates, ctx_->real(cfg_.bracket_C), *ctx_);

    Real lny = log(y);
    Complex total(ctx_->zero(), ctx_->zero());
    if (bracket_subtotals) bracket_subtotals->clear();
    for (auto [first, last] : br.groups) {
        Complex sub(ctx_->zero(), ctx_->zero());
        for (std::size_t i = first; i < last; ++i) {
            // y^{-rho} = y^{-1/2} e^{-i t log y}
            auto [sn, cs] = sin_cos(-zeros_[i].t * lny);
            Complex ypow = Complex(cs, sn) / sqrt(y);
            sub += w_[i] * ypow;
        }
        Complex folded(2 * sub.re(), ctx_->zero());
        if (bracket_subtotals) bracket_subtotals->push_back(folded);
        total += folded;
    }
    return total;
}

Complex IdentityEvaluator::r0_term() {
    const int a = parity_a();
    const unsigned M = cfg_.psi_prime.modulus();
    if (a != 0 || M <= 1) return Complex(ctx_->zero(), ctx_->zero());
    Complex num = lf_->lfprime_at_zero();
    Complex den = lps_->L_deriv(Complex(ctx_->zero(), ctx_->zero()));
    return num / den;
}

VerificationReport IdentityEvaluator::verify_identity() {
    VerificationReport rep;
    rep.zero_budget_mode = cfg_.budget_pairs ? "pairs" : "terms";
    Complex r0 = r0_term();
    const std::size_t ny = cfg_.y_values.size();
    rep.rows.resize(ny);
    ensure_residue_data(budget_positive_zeros());
    parallel_for(ny, cfg_.policy, [&](std::size_t i) {
        const Real& y = cfg_.y_values[i];
        VerificationRow row{y,
                            Complex(ctx_->zero(), ctx_->zero()),
                            Complex(ctx_->zero(), ctx_->zero()),
                            r0,
                            Complex(ctx_->zero(), ctx_->zero()),
                            {},
                            Complex(ctx_->zero(), ctx_->zero()),
                            ctx_->zero(),
                            ctx_->zero(),
                            ctx_->zero()};
        SeriesValue lhs = lhs_series(y);
        SeriesValue hyp = rhs_hypergeometric_sum(y);
        row.lhs = lhs.value;
        row.lhs_tail_bound = lhs.tail_bound;
        row.rhs_hypergeom = hyp.value;
        row.rhs_tail_bound = hyp.tail_bound;
        row.rhs_residue_sum = residue_sum(y, &row.bracket_subtotals);
        row.rhs_total = row.rhs_hypergeom + row.rhs_r0 + row.rhs_residue_sum;
        row.abs_diff = abs(row.lhs - row.rhs_total);
        rep.rows[i] = std::move(row);
    });
    rep.zeros_used = static_cast<unsigned>(budget_positive_zeros());
    rep.brackets_used = rep.rows.empty() ? 0 : static_cast<unsigned>(rep.rows[0].bracket_subtotals.size());
    return rep;
}

std::vector<Complex> IdentityEvaluator::asymptotic_coeffs(unsigned M_prime) {
    if (M_prime < 1) throw parameter_error("asymptotic_coeffs: M_prime must be >= 1");
    const unsigned k = cfg_.form.weight;
    const int a = parity_a();
    const unsigned M = cfg_.psi_prime.modulus();
    Real fa = ctx_->real(static_cast<long>(k) + a) / 2;
    Real fb = ctx_->real(static_cast<long>(k) + 1 + a) / 2;
    Real fc = ctx_->real(1 + 2 * a) / 2;
    Real ratio2 = ctx_->real(static_cast<long>(lf_->level_N())) /
                  (ctx_->two_pi() * ctx_->real(static_cast<long>(M)));
    ratio2 *= ratio2;  // (N / 2 pi M)^2

    // D(k+a+2m) = sum c~(n) / n^{k+a+2m}, all M_prime of them in one pass
    std::vector<Complex> D(M_prime, Complex(ctx_->zero(), ctx_->zero()));
    for (std::size_t n = 1; n <= cfg_.n_max_rhs; ++n) {
        const Complex& c = conv_rhs_(n);
        if (c.re() == 0 && c.im() == 0) continue;
        Real npow = pow(ctx_->real(static_cast<long>(n)), static_cast<int>(k + a));
        Real n2 = ctx_->real(static_cast<long>(n)) * ctx_->real(static_cast<long>(n));
        Complex term = c / npow;
        for (unsigned m = 0; m < M_prime; ++m) {
            D[m] += term;
            term /= n2;
        }
    }

    std::vector<Complex> B(M_prime, Complex(ctx_->zero(), ctx_->zero()));
    Real cm = ctx_->one();  // (fa)_m (fb)_m / ((fc)_m m!)
    Real sign = ctx_->one();
    Real zpow = ctx_->one();  // (N/2piM)^{2m}
    for (unsigned m = 0; m < M_prime; ++m) {
        if (m == 0) {
            B[0] = (a == 0) ? Complex(ctx_->zero(), ctx_->zero()) : prefactor_ * D[0];
        } else {
            Real rm = ctx_->real(static_cast<long>(m) - 1);
            cm *= (fa + rm) * (fb + rm) / ((fc + rm) * ctx_->real(static_cast<long>(m)));
            sign = -sign;
            zpow *= ratio2;
            B[m] = prefactor_ * (cm * sign * zpow) * D[m];
        }
    }
    return B;
}

std::vector<IdentityEvaluator::PolarTerm> IdentityEvaluator::polar_terms(unsigned count) {
    ensure_residue_data(count);
    std::vector<PolarTerm> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        Complex two_w = ctx_->real(2) * w_[i];
        out.push_back({zeros_[i].t, abs(two_w), atan2(two_w.im(), two_w.re())});
    }
    return out;
}

std::vector<OscillationRow> IdentityEvaluator::oscillation_profile(const std::vector<Real>& y_grid) {
    if (!cfg_.psi_prime.real_valued() || !cfg_.psi.real_valued() ||
        !cfg_.form.nebentypus.real_valued())
        throw parameter_error("oscillation_profile: the corollary hypotheses need real characters");
    const int a = parity_a();
    const unsigned count = static_cast<unsigned>(budget_positive_zeros());
    auto polar = polar_terms(count);
    auto B = asymptotic_coeffs(3);
    Complex r0 = r0_term();

    std::vector<OscillationRow> rows(y_grid.size());
    parallel_for(y_grid.size(), cfg_.policy, [&](std::size_t i) {
        const Real& y = y_grid[i];
        SeriesValue lhs = lhs_series(y);
        Complex poly(ctx_->zero(), ctx_->zero());
        for (unsigned m = 0; m < 3; ++m) poly += B[m] * pow(y, static_cast<int>(2 * m + a));
        Real direct = sqrt(y) * (lhs.value.re() - r0.re() - poly.re());
        Real lny = log(y);
        Real rec = ctx_->zero();
        for (const auto& p : polar) rec += p.r * cos(p.theta - p.t * lny);
        rows[i] = {y, direct, rec, direct - rec};
    });
    return rows;
}

}  // namespace lambertz
