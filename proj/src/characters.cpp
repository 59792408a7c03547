#include "lambertz/characters.hpp"

#include <numeric>
#include <sstream>

namespace lambertz {

namespace {

unsigned gcd_u(unsigned long a, unsigned long b) {
    while (b) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return static_cast<unsigned>(a);
}

}  // namespace

DirichletCharacter::DirichletCharacter(unsigned modulus, std::vector<Complex> values,
                                       const PrecisionContext& ctx)
    : modulus_(modulus), values_(std::move(values)), gauss_sum_(ctx.zero(), ctx.zero()) {
    if (modulus_ == 0) throw parameter_error("DirichletCharacter: modulus must be positive");
    if (values_.size() != modulus_)
        throw parameter_error("DirichletCharacter: value table must have modulus entries");

    Real tol = ctx.tol_digits(10);
    auto val = [&](unsigned long n) -> const Complex& {
        unsigned long r = n % modulus_;
        return r == 0 ? values_[modulus_ - 1] : values_[r - 1];
    };

    // zero exactly at non-coprime residues, unimodular elsewhere, chi(1) = 1
    for (unsigned long j = 1; j <= modulus_; ++j) {
        const Complex& v = val(j);
        bool coprime = gcd_u(j, modulus_) == 1;
        if (!coprime) {
            if (!(abs(v) < tol))
                throw parameter_error("DirichletCharacter: nonzero value at non-coprime residue " +
                                      std::to_string(j));
        } else if (abs(abs(v) - ctx.one()) > tol) {
            throw parameter_error("DirichletCharacter: value at residue " + std::to_string(j) +
                                  " is not a root of unity");
        }
    }
    if (abs(val(1) - ctx.one()) > tol)
        throw parameter_error("DirichletCharacter: chi(1) must be 1");

    // complete multiplicativity on the residue table
    for (unsigned long m = 1; m <= modulus_; ++m)
        for (unsigned long n = m; n <= modulus_; ++n)
            if (abs(val(m * n) - val(m) * val(n)) > tol)
                throw parameter_error("DirichletCharacter: value table is not completely multiplicative");

    principal_ = true;
    real_valued_ = true;
    for (unsigned long j = 1; j <= modulus_; ++j) {
        if (gcd_u(j, modulus_) != 1) continue;
        if (abs(val(j) - ctx.one()) > tol) principal_ = false;
        if (abs(val(j).im()) > tol) real_valued_ = false;
    }

    // parity: a = 0 iff chi(-1) = 1
    parity_a_ = (modulus_ == 1 || abs(val(modulus_ - 1) - ctx.one()) < tol) ? 0 : 1;

    // primitive iff no proper divisor modulus induces it: for every d | M,
    // d < M, some n = 1 (mod d) coprime to M has chi(n) != 1
    primitive_ = true;
    for (unsigned d = 1; d < modulus_ && primitive_; ++d) {
        if (modulus_ % d != 0) continue;
        bool witness = false;
        for (unsigned long n = 1; n <= modulus_; ++n) {
            if (n % d != 1 % d || gcd_u(n, modulus_) != 1) continue;
            if (abs(val(n) - ctx.one()) > tol) {
                witness = true;
                break;
            }
        }
        if (!witness) primitive_ = false;
    }
    if (modulus_ == 1) primitive_ = true;  // the trivial character

    // Gauss sum by the defining M-term sum
    Complex g(ctx.zero(), ctx.zero());
    for (unsigned long j = 1; j <= modulus_; ++j) {
        auto [sn, cs] = sin_cos(ctx.two_pi() * ctx.real(static_cast<long>(j)) /
                                ctx.real(static_cast<long>(modulus_)));
        g += val(j) * Complex(cs, sn);
    }
    gauss_sum_ = g;
}

DirichletCharacter DirichletCharacter::conjugate(const PrecisionContext& ctx) const {
    std::vector<Complex> vals;
    vals.reserve(values_.size());
    for (const Complex& v : values_) vals.push_back(conj(v));
    return DirichletCharacter(modulus_, std::move(vals), ctx);
}

std::string DirichletCharacter::digest() const {
    // FNV-1a over a canonical 20-digit rendering of the value table
    std::ostringstream os;
    os << modulus_ << ";";
    for (const Complex& v : values_) os << to_string(v.re(), 20) << "," << to_string(v.im(), 20) << ";";
    std::string s = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

DirichletCharacter build_character(unsigned modulus, const std::string& value_spec,
                                   const PrecisionContext& ctx) {
    std::vector<Complex> vals;
    vals.reserve(modulus);
    if (value_spec == "principal") {
        for (unsigned long j = 1; j <= modulus; ++j)
            vals.emplace_back(gcd_u(j, modulus) == 1 ? ctx.one() : ctx.zero(), ctx.zero());
    } else if (value_spec == "quadratic") {
        if (modulus < 3 || modulus % 2 == 0)
            throw parameter_error("build_character: quadratic spec needs an odd prime modulus");
        for (unsigned j = 2; j * j <= modulus; ++j)
            if (modulus % j == 0)
                throw parameter_error("build_character: quadratic spec needs a prime modulus");
        // Legendre symbol via Euler's criterion
        for (unsigned long j = 1; j <= modulus; ++j) {
            if (j % modulus == 0 || gcd_u(j, modulus) != 1) {
                vals.emplace_back(ctx.zero(), ctx.zero());
                continue;
            }
            unsigned long e = (modulus - 1) / 2, b = j % modulus, r = 1;
            while (e) {
                if (e & 1) r = r * b % modulus;
                b = b * b % modulus;
                e >>= 1;
            }
            vals.emplace_back(r == 1 ? ctx.one() : -ctx.one(), ctx.zero());
        }
    } else {
        throw parameter_error("build_character: unknown value spec '" + value_spec + "'");
    }
    return DirichletCharacter(modulus, std::move(vals), ctx);
}

DirichletCharacter build_character(unsigned modulus, std::vector<Complex> values,
                                   const PrecisionContext& ctx) {
    return DirichletCharacter(modulus, std::move(values), ctx);
}

std::vector<std::int8_t> mobius_sieve(std::size_t n_max) {
    if (n_max < 1) throw parameter_error("mobius_sieve: n_max must be >= 1");
    std::vector<std::int8_t> mu(n_max + 1, 1);
    std::vector<std::uint32_t> smallest(n_max + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::size_t i = 2; i <= n_max; ++i) {
        if (smallest[i] == 0) {
            smallest[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            if (p > smallest[i] || i * p > n_max) break;
            smallest[i * p] = p;
            mu[i * p] = (i % p == 0) ? 0 : static_cast<std::int8_t>(-mu[i]);
        }
    }
    mu[0] = 0;
    return mu;
}

BigInt mu_k(unsigned long n, unsigned k) {
    if (n < 1 || k < 1) throw parameter_error("mu_k: n and k must be >= 1");
    // factor n directly; desk-scale arguments
    unsigned long m = n;
    int mu = 1;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return BigInt(0);
        mu = -mu;
    }
    if (m > 1) mu = -mu;
    BigInt r = pow(BigInt(n), k - 1);
    return mu < 0 ? -r : r;
}

ConvolvedSequence twisted_convolve(const std::vector<Complex>& a, const DirichletCharacter& chi1,
                                   const std::vector<Complex>& b, const DirichletCharacter& chi2,
                                   std::size_t n_max, const PrecisionContext& ctx,
                                   ExecPolicy policy) {
    if (a.size() < n_max || b.size() < n_max)
        throw parameter_error("twisted_convolve: input sequences shorter than n_max");

    // pre-twist both sequences once
    std::vector<Complex> ta(n_max), tb(n_max);
    parallel_for(n_max, policy, [&](std::size_t i) {
        long long n = static_cast<long long>(i) + 1;
        ta[i] = a[i] * chi1(n);
        tb[i] = b[i] * chi2(n);
    });

    ConvolvedSequence out;
    out.length = n_max;
    out.terms.resize(n_max);
    parallel_for(n_max, policy, [&](std::size_t i) {
        std::size_t n = i + 1;
        Complex acc(ctx.zero(), ctx.zero());
        for (std::size_t s = 1; s * s <= n; ++s) {
            if (n % s != 0) continue;
            std::size_t t = n / s;
            acc += ta[s - 1] * tb[t - 1];
            if (t != s) acc += ta[t - 1] * tb[s - 1];
        }
        out.terms[i] = acc;
    });
    return out;
}

}  // namespace lambertz
