#include "lambertz/precision.hpp"

#include <sstream>

namespace lambertz {

namespace {

// decimal digits -> mpfr bits, plus a couple of bits of slack
mpfr_prec_t bits_for(unsigned digits10) {
    return static_cast<mpfr_prec_t>(digits10 * 3.3219280948873623 + 12);
}

}  // namespace

PrecisionContext::PrecisionContext(unsigned digits) : digits_(digits) {
    if (digits < 30) throw config_error("PrecisionContext: digits must be >= 30");
    work_digits_ = digits + 20;  // guard digits absorb algorithmic roundoff
    series_tail_tol_ = pow10(10 - static_cast<long>(digits));
    quad_tol_ = series_tail_tol_;
    init_constants();
}

PrecisionContext::PrecisionContext(unsigned digits, const Real& series_tail_tol,
                                   const Real& quad_tol)
    : digits_(digits) {
    if (digits < 30) throw config_error("PrecisionContext: digits must be >= 30");
    if (!(series_tail_tol > 0) || !(quad_tol > 0))
        throw config_error("PrecisionContext: tolerances must be positive");
    work_digits_ = digits + 20;
    series_tail_tol_ = zero() + series_tail_tol;
    quad_tol_ = zero() + quad_tol;
    Real cap = pow10(-15);
    if (series_tail_tol_ > cap || quad_tol_ > cap)
        throw config_error("PrecisionContext: tolerances must be <= 1e-15");
    init_constants();
}

void PrecisionContext::init_constants() {
    mpfr_prec_t bits = bits_for(work_digits_);
    auto make_const = [&](int (*f)(mpfr_t, mpfr_rnd_t)) {
        Real r(0, work_digits_);
        mpfr_set_prec(r.backend().data(), bits);
        f(r.backend().data(), MPFR_RNDN);
        return r;
    };
    pi_ = make_const(mpfr_const_pi);
    euler_ = make_const(mpfr_const_euler);
    two_pi_ = 2 * pi_;
    log_two_pi_ = log(two_pi_);
    sqrt_pi_ = sqrt(pi_);
    ln10_ = log(real(10));
}

Real PrecisionContext::real(const std::string& decimal) const {
    Real r(0, work_digits_);
    if (mpfr_set_str(r.backend().data(), decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw parse_error("invalid decimal literal: " + decimal);
    return r;
}

Real PrecisionContext::real(const BigInt& v) const {
    // via decimal string: exact while the integer fits the working precision,
    // correctly rounded beyond it
    return real(v.str());
}

Real PrecisionContext::real(const BigRational& v) const {
    return real(numerator(v)) / real(denominator(v));
}

Real PrecisionContext::pow10(long e) const {
    Real r(10, work_digits_);
    if (e >= 0) return pow(r, static_cast<unsigned long>(e));
    return 1 / pow(r, static_cast<unsigned long>(-e));
}

std::pair<Real, Real> sin_cos(const Real& x) {
    Real s(0, x.precision()), c(0, x.precision());
    mpfr_sin_cos(s.backend().data(), c.backend().data(), x.backend().data(), MPFR_RNDN);
    return {s, c};
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re_ * o.re_ + o.im_ * o.im_;
    Real r = (re_ * o.re_ + im_ * o.im_) / d;
    im_ = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    return *this;
}

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Real abs(const Complex& z) {
    Real r(0, z.re().precision());
    mpfr_hypot(r.backend().data(), z.re().backend().data(), z.im().backend().data(), MPFR_RNDN);
    return r;
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Complex exp(const Complex& z) {
    Real m = exp(z.re());
    auto [s, c] = sin_cos(z.im());
    return {m * c, m * s};
}

Complex log(const Complex& z) { return {log(abs(z)), atan2(z.im(), z.re())}; }

Complex sqrt(const Complex& z) {
    if (z.im() == 0 && z.re() >= 0) return {sqrt(z.re()), z.im()};
    // principal branch via half-angle
    Real r = abs(z);
    Real u = sqrt((r + z.re()) / 2);
    Real v = sqrt((r - z.re()) / 2);
    if (z.im() < 0) v = -v;
    return {u, v};
}

Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

Complex rpow(const Real& x, const Complex& s) {
    Real lx = log(x);
    return exp(Complex(s.re() * lx, s.im() * lx));
}

Complex unit_i_pow(long n, const PrecisionContext& ctx) {
    long m = ((n % 4) + 4) % 4;
    switch (m) {
        case 0: return {ctx.one(), ctx.zero()};
        case 1: return {ctx.zero(), ctx.one()};
        case 2: return {-ctx.one(), ctx.zero()};
        default: return {ctx.zero(), -ctx.one()};
    }
}

std::string to_string(const Real& x, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

std::string to_string(const Complex& z, unsigned digits) {
    std::ostringstream os;
    os << to_string(z.re(), digits);
    if (!(z.im() == 0)) os << (z.im() < 0 ? " - " : " + ") << to_string(abs(z.im()), digits) << "i";
    return os.str();
}

}  // namespace lambertz
