// Both sides of the twisted Lambert identity: the exponential series on the
// left, and the hypergeometric sum, the R_0 residue, and the bracketed sum
// over non-trivial zeros on the right, plus the small-y asymptotic
// coefficients and the oscillation decomposition.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lambertz/characters.hpp"
#include "lambertz/cuspforms.hpp"
#include "lambertz/lfunctions.hpp"
#include "lambertz/parallel.hpp"
#include "lambertz/precision.hpp"
#include "lambertz/zeros.hpp"

namespace lambertz {

struct IdentityConfig {
    CuspFormData form;
    DirichletCharacter psi;        // twist, modulus r, gcd(Q, r) = 1
    DirichletCharacter psi_prime;  // modulus M, source of the zeros
    std::vector<Real> y_values;
    std::size_t n_max_lhs = 2000;
    std::size_t n_max_rhs = 2000;
    unsigned zero_budget = 22;
    bool budget_pairs = true;  // false: "terms", two per conjugate pair
    double bracket_C = 1.0;
    double t_max = 100.0;
    double scan_step = 0.05;
    ExecPolicy policy = ExecPolicy::openmp;
};

struct SeriesValue {
    Complex value;
    Real tail_bound;
    bool tail_warning = false;  // tail bound above series_tail_tol
};

struct VerificationRow {
    Real y;
    Complex lhs;
    Complex rhs_hypergeom;
    Complex rhs_r0;
    Complex rhs_residue_sum;
    std::vector<Complex> bracket_subtotals;
    Complex rhs_total;  // sum of the three stored parts, exactly
    Real abs_diff;
    Real lhs_tail_bound;
    Real rhs_tail_bound;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    unsigned zeros_used = 0;
    unsigned brackets_used = 0;
    std::string zero_budget_mode;
};

struct OscillationRow {
    Real y;
    Real direct;         // y^{1/2} (lhs - R0 - poly part)
    Real reconstructed;  // sum r_n cos(theta_n - t_n log y)
    Real deviation;
};

class IdentityEvaluator {
  public:
    IdentityEvaluator(IdentityConfig config, const PrecisionContext& ctx);

    const IdentityConfig& config() const { return cfg_; }
    int parity_a() const { return cfg_.psi_prime.parity_a(); }
    const std::vector<LZero>& zeros() const { return zeros_; }
    const CuspFormLSeries& lf() const { return *lf_; }
    const DirichletLSeries& lpsi_prime() const { return *lps_; }

    // supply zeros (e.g. imported); otherwise found on first use
    void use_zeros(std::vector<LZero> zeros);

    SeriesValue lhs_series(const Real& y) const;
    SeriesValue rhs_hypergeometric_sum(const Real& y) const;
    // bracketed 2 Re sum over the positive-ordinate zero budget
    Complex residue_sum(const Real& y, std::vector<Complex>* bracket_subtotals = nullptr);
    Complex r0_term();

    VerificationReport verify_identity();

    // y-independent coefficients of y^{2m+a}, m = 0..M_prime-1
    std::vector<Complex> asymptotic_coeffs(unsigned M_prime);

    // direct vs zero-reconstruction on a y grid; poly part uses M' = 3
    std::vector<OscillationRow> oscillation_profile(const std::vector<Real>& y_grid);

    // r_n e^{i theta_n} = 2 L_f(rho_n, psi) Gamma(rho_n) / L'(rho_n, psi')
    struct PolarTerm {
        Real t, r, theta;
    };
    std::vector<PolarTerm> polar_terms(unsigned count);

  private:
    void ensure_zeros(unsigned min_count);
    void ensure_residue_data(std::size_t count);
    std::size_t budget_positive_zeros() const;
    const Complex& prefactor() const { return prefactor_; }

    IdentityConfig cfg_;
    const PrecisionContext* ctx_;
    std::unique_ptr<CuspFormLSeries> lf_;
    std::unique_ptr<DirichletLSeries> lps_;
    ConvolvedSequence conv_lhs_;   // [a_f psi * mu psi'](n), up to 2 n_max_lhs
    ConvolvedSequence conv_rhs_;   // [a_g conj-psi * mu_k conj-psi'](n)
    Real conv_lhs_max_;            // max |c(n)| over n <= 2 n_max_lhs, for the tail bound
    Complex prefactor_;            // 2 N^{k/2} Gamma(k+a) (N/M)^a (i/2pi)^{k+a} phi
    std::vector<LZero> zeros_;
    std::vector<Complex> w_;       // residue_numerator(rho_n) / L'(rho_n) per zero
};

}  // namespace lambertz
