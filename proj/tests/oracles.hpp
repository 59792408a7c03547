// Test-only oracles, independent of the library's evaluation paths:
// a double-exponential quadrature rule, a naive 2F1 power series, and a
// naive eta-power coefficient generator by repeated squaring.

#pragma once

#include <functional>
#include <vector>

#include "lambertz/precision.hpp"

namespace lambertz::oracles {

// int_x^infty f(t) dt by the exp-sinh double-exponential rule with step
// halving until two levels agree to tol
inline Complex integrate_tail_de(const std::function<Complex(const Real&)>& f, const Real& x,
                                 const Real& tol, const PrecisionContext& ctx) {
    auto level = [&](double h, int span) {
        Complex acc(ctx.zero(), ctx.zero());
        for (int k = -span; k <= span; ++k) {
            Real u = ctx.real(h * k);
            Real sh = sinh(u) * ctx.pi() / 2;
            Real g = exp(sh);                  // t - x
            Real w = cosh(u) * ctx.pi() / 2 * g;  // dt/du
            acc += f(x + g) * w;
        }
        return acc * ctx.real(h);
    };
    double h = 0.5;
    Complex prev = level(h, 12);
    for (int lev = 0; lev < 10; ++lev) {
        h /= 2;
        Complex cur = level(h, static_cast<int>(5.0 / h));
        if (abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw accuracy_error("integrate_tail_de oracle did not converge");
}

// plain term-by-term 2F1 series, no transformations
inline Real naive_2f1(const Real& a, const Real& b, const Real& c, const Real& z,
                      const PrecisionContext& ctx, unsigned terms = 4000) {
    Real sum = ctx.one(), t = ctx.one();
    for (unsigned m = 0; m < terms; ++m) {
        Real rm = ctx.real(static_cast<long>(m));
        t *= (a + rm) * (b + rm) / ((c + rm) * (rm + 1)) * z;
        sum += t;
    }
    return sum;
}

// coefficients of (prod (1-q^n))^24 up to q^L via pentagonal-number series
// and exponentiation by repeated squaring: P^24 = ((P^2)^2)^2 * (P^2)^2 * ...
inline std::vector<BigInt> eta24_by_squaring(std::size_t L) {
    std::vector<BigInt> P(L + 1, BigInt(0));
    P[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 > static_cast<long>(L) && g2 > static_cast<long>(L)) break;
        BigInt s = (k % 2) ? -1 : 1;
        if (g1 <= static_cast<long>(L)) P[g1] += s;
        if (g2 <= static_cast<long>(L)) P[g2] += s;
    }
    auto mul = [L](const std::vector<BigInt>& A, const std::vector<BigInt>& B) {
        std::vector<BigInt> C(L + 1, BigInt(0));
        for (std::size_t i = 0; i <= L; ++i) {
            if (A[i] == 0) continue;
            for (std::size_t j = 0; i + j <= L; ++j)
                if (B[j] != 0) C[i + j] += A[i] * B[j];
        }
        return C;
    };
    auto P2 = mul(P, P);
    auto P4 = mul(P2, P2);
    auto P8 = mul(P4, P4);
    auto P16 = mul(P8, P8);
    return mul(P16, P8);  // 24 = 16 + 8
}

}  // namespace lambertz::oracles
