// Dirichlet L-functions via the Hurwitz-zeta decomposition, their completed
// xi, and twisted cusp-form L-functions via the incomplete-gamma smoothed
// series, valid at every complex s.

#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "lambertz/characters.hpp"
#include "lambertz/cuspforms.hpp"
#include "lambertz/precision.hpp"

namespace lambertz {

class DirichletLSeries {
  public:
    DirichletLSeries(DirichletCharacter chi, const PrecisionContext& ctx);

    const DirichletCharacter& character() const { return chi_; }
    const PrecisionContext& context() const { return *ctx_; }

    // L(s, chi) = M^{-s} sum_j chi(j) zeta(s, j/M)
    Complex L(const Complex& s) const;
    // closed-form derivative via the Hurwitz route, cross-validated against
    // a Cauchy circle around s over L itself
    Complex L_deriv(const Complex& s) const;
    // (pi/M)^{-(s+a)/2} Gamma((s+a)/2) L(s, chi); finite limits at the
    // trivial zeros, pole_error where the gamma pole is uncompensated
    Complex completed_xi(const Complex& s) const;
    // eps_chi / (i^a sqrt(M))
    Complex root_number() const;
    // |xi(s) - W xi_conj(1-s)| / max(|..|, |..|, floor): the Lemma-4.5 check
    Real fe_residual(const Complex& s) const;

    // grow the per-residue log caches to cover |Im s| <= t_max before
    // read-only parallel use
    void prepare(double t_max) const;

  private:
    Complex L_conj(const Complex& s) const;  // L(s, conj chi)
    Complex completed_xi_impl(const Complex& s, bool conjugate) const;
    const std::vector<Real>* cache_for(unsigned j) const;

    DirichletCharacter chi_;
    const PrecisionContext* ctx_;
    mutable std::vector<std::vector<Real>> log_caches_;  // per residue j=1..M
    mutable std::mutex cache_mtx_;
    mutable unsigned cached_len_ = 0;
};

class CuspFormLSeries {
  public:
    // twist must be primitive with gcd(Q, r) = 1; the nebentypus must be
    // primitive or trivial (mod 1)
    CuspFormLSeries(CuspFormData form, DirichletCharacter twist, const PrecisionContext& ctx);

    const CuspFormData& form() const { return form_; }
    const DirichletCharacter& twist() const { return twist_; }
    unsigned long level_N() const { return levelN_; }
    // i^k eps_psi^2 chi(r) psi(Q) / r
    const Complex& root_factor() const { return root_factor_; }

    // Lambda_f(s, psi) by the two-sum incomplete-gamma representation with
    // certified exponential tails
    Complex lambda(const Complex& s) const;
    // Lambda_g(k - s, conj psi) built with g's own data (for the FE check)
    Complex lambda_partner(const Complex& s) const;
    // Gamma(rho) L_f(rho, psi) = Lambda_f(rho, psi) (2 pi / sqrt N)^rho,
    // never forming the two factors separately
    Complex residue_numerator(const Complex& rho) const;
    // L_f'(0, psi) = Lambda_f(0, psi)
    Complex lfprime_at_zero() const;
    // |lambda(s) - omega lambda_partner(s)| / scale
    Real fe_residual(const Complex& s) const;

  private:
    // Gamma(s, c n) for n = 1..n_used: series regime per-term, quadrature
    // regime by suffix integrals from an anchor at the largest argument
    std::vector<Complex> gamma_ladder(const Complex& s, const Real& c, std::size_t n_used) const;
    std::size_t terms_needed(double sigma) const;
    Complex smoothed_sum(const std::vector<Complex>& coeffs, const DirichletCharacter& chi,
                         const Complex& s) const;

    CuspFormData form_;
    DirichletCharacter twist_;
    DirichletCharacter twist_bar_;
    const PrecisionContext* ctx_;
    unsigned long levelN_;
    Real sqrtN_;
    Complex root_factor_;
    Complex root_factor_partner_;
};

}  // namespace lambertz
