// Dirichlet characters as explicit value tables, the Moebius machinery, and
// the twisted Dirichlet convolutions feeding both sides of the identity.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lambertz/parallel.hpp"
#include "lambertz/precision.hpp"

namespace lambertz {

class DirichletCharacter {
  public:
    // values[j] is the character at residue j+1 (so values[M-1] sits at 0 mod M)
    DirichletCharacter(unsigned modulus, std::vector<Complex> values, const PrecisionContext& ctx);

    unsigned modulus() const { return modulus_; }
    int parity_a() const { return parity_a_; }
    bool primitive() const { return primitive_; }
    bool principal() const { return principal_; }
    bool real_valued() const { return real_valued_; }
    const Complex& gauss_sum() const { return gauss_sum_; }

    // value at any integer n (0 when gcd(n, M) > 1)
    const Complex& operator()(long long n) const {
        long long r = n % static_cast<long long>(modulus_);
        if (r < 0) r += modulus_;
        return r == 0 ? values_[modulus_ - 1] : values_[static_cast<std::size_t>(r - 1)];
    }

    DirichletCharacter conjugate(const PrecisionContext& ctx) const;

    // canonical content digest of (modulus, value table), for the zero CSV
    std::string digest() const;

  private:
    unsigned modulus_;
    std::vector<Complex> values_;
    int parity_a_ = 0;
    bool primitive_ = false;
    bool principal_ = false;
    bool real_valued_ = false;
    Complex gauss_sum_;
};

// value_spec: "principal" (all-ones on coprime residues) or "quadratic"
// (Legendre symbol, odd prime modulus)
DirichletCharacter build_character(unsigned modulus, const std::string& value_spec,
                                   const PrecisionContext& ctx);
DirichletCharacter build_character(unsigned modulus, std::vector<Complex> values,
                                   const PrecisionContext& ctx);

// mu(1..n_max), linear sieve
std::vector<std::int8_t> mobius_sieve(std::size_t n_max);

// mu_k(n) = mu(n) n^{k-1}, exact
BigInt mu_k(unsigned long n, unsigned k);

struct ConvolvedSequence {
    std::size_t length = 0;
    std::vector<Complex> terms;  // terms[n-1] = c(n)

    const Complex& operator()(std::size_t n) const { return terms[n - 1]; }
};

// c(n) = sum_{d | n} a(d) chi1(d) b(n/d) chi2(n/d), divisor enumeration per
// output index (a fixed summation tree, identical for both exec policies)
ConvolvedSequence twisted_convolve(const std::vector<Complex>& a, const DirichletCharacter& chi1,
                                   const std::vector<Complex>& b, const DirichletCharacter& chi2,
                                   std::size_t n_max, const PrecisionContext& ctx,
                                   ExecPolicy policy = ExecPolicy::serial);

}  // namespace lambertz
