// Arbitrary-precision real/complex arithmetic layer.
//
// Real is an MPFR-backed float whose precision travels with the value:
// every operation produces a result at the precision of its operands, so a
// computation whose leaves were built through a PrecisionContext stays at
// that context's working precision regardless of any global default.  This
// is what makes evaluations bit-identical for a fixed context, including
// under OpenMP.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace lambertz {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using BigInt = mp::cpp_int;
using BigRational = mp::cpp_rational;

// ---- error taxonomy ------------------------------------------------------

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- precision context ---------------------------------------------------

class PrecisionContext {
  public:
    explicit PrecisionContext(unsigned digits = 60);
    PrecisionContext(unsigned digits, const Real& series_tail_tol, const Real& quad_tol);

    unsigned digits() const { return digits_; }
    unsigned work_digits() const { return work_digits_; }

    const Real& series_tail_tol() const { return series_tail_tol_; }
    const Real& quad_tol() const { return quad_tol_; }

    // leaf constructors: every Real entering a computation comes from here
    Real real(long v) const { return Real(v, work_digits_); }
    Real real(unsigned long v) const { return Real(v, work_digits_); }
    Real real(int v) const { return Real(v, work_digits_); }
    Real real(double v) const { return Real(v, work_digits_); }
    Real real(const std::string& decimal) const;
    Real real(const BigInt& v) const;
    Real real(const BigRational& v) const;

    Real zero() const { return Real(0, work_digits_); }
    Real one() const { return Real(1, work_digits_); }

    // 10^e
    Real pow10(long e) const;
    // 10^{-(digits - shift)}: the spec's tolerance family
    Real tol_digits(long shift) const { return pow10(shift - static_cast<long>(digits_)); }

    const Real& pi() const { return pi_; }
    const Real& two_pi() const { return two_pi_; }
    const Real& sqrt_pi() const { return sqrt_pi_; }
    const Real& log_two_pi() const { return log_two_pi_; }
    const Real& euler() const { return euler_; }
    const Real& ln10() const { return ln10_; }

  private:
    void init_constants();

    unsigned digits_;
    unsigned work_digits_;
    Real series_tail_tol_;
    Real quad_tol_;
    Real pi_, two_pi_, sqrt_pi_, log_two_pi_, euler_, ln10_;
};

// sin and cos in one MPFR call
std::pair<Real, Real> sin_cos(const Real& x);

// ---- complex values ------------------------------------------------------

class Complex {
  public:
    Complex() = default;  // valid only as assignment target
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(const Real& re) : re_(re), im_(re * 0) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }

    Complex operator-() const { return {-re_, -im_}; }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o);

    Complex& operator+=(const Real& x) {
        re_ += x;
        return *this;
    }
    Complex& operator-=(const Real& x) {
        re_ -= x;
        return *this;
    }
    Complex& operator*=(const Real& x) {
        re_ *= x;
        im_ *= x;
        return *this;
    }
    Complex& operator/=(const Real& x) {
        re_ /= x;
        im_ /= x;
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator+(Complex a, const Real& b) { return a += b; }
    friend Complex operator-(Complex a, const Real& b) { return a -= b; }
    friend Complex operator*(Complex a, const Real& b) { return a *= b; }
    friend Complex operator/(Complex a, const Real& b) { return a /= b; }
    friend Complex operator+(const Real& a, Complex b) { return b += a; }
    friend Complex operator*(const Real& a, Complex b) { return b *= a; }
    friend Complex operator-(const Real& a, const Complex& b) { return {a - b.re_, -b.im_}; }
    friend Complex operator/(const Real& a, const Complex& b) { return Complex(a) /= b; }

  private:
    Real re_, im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
// x^s for real x > 0: exp(s log x)
Complex rpow(const Real& x, const Complex& s);
// i^n, exact
Complex unit_i_pow(long n, const PrecisionContext& ctx);

std::string to_string(const Real& x, unsigned digits);
std::string to_string(const Complex& z, unsigned digits);

}  // namespace lambertz
