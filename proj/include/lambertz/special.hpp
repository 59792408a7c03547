// Special functions on arbitrary-precision complex arguments: gamma and
// log-gamma (Stirling with recurrence shift), upper incomplete gamma
// (Kummer-type series / adaptive quadrature split), Hurwitz zeta
// (Euler-Maclaurin), its s-derivative (Cauchy circle cross-checked against
// central differences), the Gauss hypergeometric 2F1 on the ray z <= 0
// (defining series + Pfaff map), and the Mellin-Barnes line integral that
// witnesses the hypergeometric closed form.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lambertz/precision.hpp"

namespace lambertz {

// exact Bernoulli number B_n (B_1 = -1/2); cached, thread-safe
const BigRational& bernoulli_rational(unsigned n);

// log Gamma(s), continuous on vertical lines in the right half-plane and
// real on the positive reals.  Stirling series after shifting s by the
// recurrence until |s| clears a digits-dependent threshold.
Complex log_gamma(const Complex& s, const PrecisionContext& ctx);

// Gamma(s) anywhere off the non-positive integers
Complex gamma(const Complex& s, const PrecisionContext& ctx);

// int_x^infty t^{s-1} e^{-t} dt for x > 0.
// x < max(1,|s|)/2: Gamma(s) minus the alternating series for the lower
// incomplete gamma, at a precision raised to cover the e^{2x} cancellation.
// Otherwise adaptive Gauss-Legendre quadrature of the tail integral.
Complex upper_incomplete_gamma(const Complex& s, const Real& x, const PrecisionContext& ctx);

// Hurwitz zeta(s, alpha) for alpha in (0,1], s != 1, by Euler-Maclaurin
// with B_{2q} terms, q = digits/2, and shift length from the certified
// remainder bound.  `log_cache`, when given, must hold log(alpha + j) for
// j = 0.. at least the shift length.
Complex hurwitz_zeta(const Complex& s, const Real& alpha, const PrecisionContext& ctx,
                     const std::vector<Real>* log_cache = nullptr);

// shift length the Euler-Maclaurin evaluation will use at this s
unsigned hurwitz_shift_length(const Complex& s, const Real& alpha, const PrecisionContext& ctx);

// d/ds zeta(s, alpha): Cauchy circle of radius 10^{-digits/4} (overridable,
// for radius-halving consistency checks), cross-checked against a central
// difference; throws accuracy_error on disagreement.
Complex hurwitz_zeta_sderiv(const Complex& s, const Real& alpha, const PrecisionContext& ctx,
                            const std::vector<Real>* log_cache = nullptr,
                            std::optional<Real> radius = std::nullopt);

// 2F1(a,b;c;z) for real parameters and real z <= 0: defining series for
// |z| < 1, Pfaff transformation w = z/(z-1) for z <= -1.
Real gauss_2f1(const Real& a, const Real& b, const Real& c, const Real& z,
               const PrecisionContext& ctx);

// U_{n,a}(y): (1/sqrt(pi)) (1/2 pi i) int Gamma(s)Gamma(s+1/2)
//   Gamma((k+a)/2 - s)/Gamma(s+(1-k+a)/2) z^s ds on Re s = (k - lambda)/2,
// z = (N y / 2 pi M n)^2.  Equals the 2F1 closed form; the agreement is the
// numerical witness of that reduction.  lambda defaults to -1/2.
Real mellin_barnes_u(unsigned n, int parity_a, unsigned k, unsigned levelN, unsigned modulusM,
                     const Real& y, const PrecisionContext& ctx,
                     std::optional<Real> lambda = std::nullopt);

// ---- adaptive quadrature core ---------------------------------------------

// Gauss-Legendre nodes/weights on [-1,1], cached per (n, precision)
struct GaussLegendre {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussLegendre& gauss_legendre(unsigned n, const PrecisionContext& ctx);

// integral of f over [a,b] to absolute tolerance tol, by recursive
// bisection with a GL24/GL48 error estimate
Complex integrate_adaptive(const std::function<Complex(const Real&)>& f, const Real& a,
                           const Real& b, const Real& tol, const PrecisionContext& ctx);

}  // namespace lambertz
