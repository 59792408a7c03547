#include "lambertz/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lambertz {

namespace {

double d(const Real& x) { return static_cast<double>(x); }

}  // namespace

Real rotated_xi(const DirichletLSeries& series, const Real& t) {
    const PrecisionContext& ctx = series.context();
    Complex W = series.root_number();
    if (abs(abs(W) - ctx.one()) > ctx.tol_digits(10))
        throw parameter_error("rotated_xi: root number is not unimodular (non-primitive input)");
    Complex z = series.completed_xi(Complex(ctx.real("0.5"), t)) / sqrt(W);
    // the rotation makes Z real; anything beyond roundoff means a bad rotation
    if (abs(z.im()) > ctx.tol_digits(12) * (std::max)(ctx.one(), abs(z)))
        throw accuracy_error("rotated_xi: rotated value has a non-negligible imaginary part");
    return z.re();
}

std::vector<LZero> find_zeros(const DirichletLSeries& series, const ZeroScanOptions& opts) {
    const PrecisionContext& ctx = series.context();
    if (!(opts.t_max > 0) || !(opts.scan_step > 0))
        throw parameter_error("find_zeros: t_max and scan_step must be positive");
    series.prepare(opts.t_max + 1);

    const std::size_t grid_n = static_cast<std::size_t>(std::floor(opts.t_max / opts.scan_step));
    std::vector<Real> grid_val(grid_n + 1);
    Real step = ctx.real(opts.scan_step);
    parallel_for(grid_n + 1, opts.policy, [&](std::size_t i) {
        Real t = (i == 0) ? step / 1024 : step * ctx.real(static_cast<long>(i));
        grid_val[i] = rotated_xi(series, t);
    });

    std::vector<std::pair<Real, Real>> intervals;
    for (std::size_t i = 0; i + 1 <= grid_n; ++i) {
        if (grid_val[i] == 0) continue;  // grid point exactly on a zero: neighbours bracket it
        if ((grid_val[i] < 0) != (grid_val[i + 1] < 0)) {
            Real a = (i == 0) ? step / 1024 : step * ctx.real(static_cast<long>(i));
            intervals.emplace_back(a, step * ctx.real(static_cast<long>(i + 1)));
        }
    }

    Real target = pow(ctx.real(10), -static_cast<int>(ctx.digits() / 2));
    std::vector<LZero> zeros(intervals.size());
    parallel_for(intervals.size(), opts.policy, [&](std::size_t idx) {
        Real a = intervals[idx].first, b = intervals[idx].second;
        Real fa = rotated_xi(series, a);
        while (b - a > target) {
            Real mid = (a + b) / 2;
            Real fm = rotated_xi(series, mid);
            if (fm == 0) {
                a = mid;
                b = mid;
                break;
            }
            if ((fa < 0) != (fm < 0)) {
                b = mid;
            } else {
                a = mid;
                fa = fm;
            }
        }
        LZero z;
        z.modulus = series.character().modulus();
        z.character_digest = series.character().digest();
        z.t = (a + b) / 2;
        certify_zero(series, z);
        zeros[idx] = z;
    });

    std::sort(zeros.begin(), zeros.end(), [](const LZero& x, const LZero& y) { return x.t < y.t; });
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i)
        if (zeros[i + 1].t - zeros[i].t < ctx.pow10(-6))
            throw data_error("find_zeros: ordinate gap below 1e-6; refine the scan step");
    for (std::size_t i = 0; i < zeros.size(); ++i) zeros[i].index = static_cast<unsigned>(i + 1);
    return zeros;
}

void certify_zero(const DirichletLSeries& series, LZero& z) {
    const PrecisionContext& ctx = series.context();
    Complex rho(ctx.real("0.5"), z.t);
    Real xi_res = abs(series.completed_xi(rho));
    Real l_res = abs(series.L(rho));
    Real bound = pow(ctx.real(10), -static_cast<int>(ctx.digits() / 2));
    // |L| catches perturbations at heights where the gamma factor has
    // already crushed |xi|
    Real l_bound = pow(ctx.real(10), -static_cast<int>(ctx.digits() / 3));
    if (xi_res > bound || l_res > l_bound)
        throw data_error("zero certification failed at t = " + to_string(z.t, 20) +
                         " (|xi| = " + to_string(xi_res, 3) + ", |L| = " + to_string(l_res, 3) + ")");
    Real lp = abs(series.L_deriv(rho));
    if (!(lp > 1000 * (std::max)(xi_res, l_res) && lp > 1000 * ctx.tol_digits(0)))
        throw data_error("simplicity witness failed at t = " + to_string(z.t, 20) +
                         ": |L'(rho)| = " + to_string(lp, 3) + " is not clear of the residual");
    z.residual = xi_res;
}

void export_zeros(const std::vector<LZero>& zeros, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write zero CSV: " + path);
    out << "modulus,character_values_digest,index,t\n";
    for (const LZero& z : zeros)
        out << z.modulus << "," << z.character_digest << "," << z.index << ","
            << to_string(z.t, 38) << "\n";
}

std::vector<LZero> import_zeros(const std::string& path, const DirichletLSeries& series) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open zero CSV: " + path);
    const PrecisionContext& ctx = series.context();
    std::vector<LZero> zeros;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.rfind("modulus", 0) == 0) continue;
        std::istringstream ls(line);
        std::string mod_s, digest, index_s, t_s;
        if (!(std::getline(ls, mod_s, ',') && std::getline(ls, digest, ',') &&
              std::getline(ls, index_s, ',') && std::getline(ls, t_s)))
            throw parse_error("zero CSV line " + std::to_string(lineno) + ": expected 4 fields");
        LZero z;
        z.modulus = static_cast<unsigned>(std::stoul(mod_s));
        z.character_digest = digest;
        z.index = static_cast<unsigned>(std::stoul(index_s));
        z.t = ctx.real(t_s);
        if (z.modulus != series.character().modulus() || digest != series.character().digest())
            throw data_error("zero CSV line " + std::to_string(lineno) +
                             ": character digest does not match the series");
        try {
            certify_zero(series, z);
        } catch (const data_error& e) {
            throw data_error("zero CSV line " + std::to_string(lineno) + ": " + e.what());
        }
        zeros.push_back(std::move(z));
    }
    std::sort(zeros.begin(), zeros.end(), [](const LZero& x, const LZero& y) { return x.t < y.t; });
    return zeros;
}

Bracketing bracket(const std::vector<Real>& ordinates, const Real& C, const PrecisionContext& ctx) {
    for (std::size_t i = 0; i + 1 < ordinates.size(); ++i)
        if (!(ordinates[i] < ordinates[i + 1]))
            throw parameter_error("bracket: ordinates must be strictly increasing");
    Bracketing b;
    b.constant_C = C;
    auto threshold = [&](const Real& t) {
        Real at = abs(t);
        return exp(-C * at / log(at + ctx.real(3)));
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < ordinates.size(); ++i) {
        Real gap = ordinates[i + 1] - ordinates[i];
        if (!(gap < threshold(ordinates[i]) + threshold(ordinates[i + 1]))) {
            b.groups.emplace_back(start, i + 1);
            start = i + 1;
        }
    }
    if (!ordinates.empty()) b.groups.emplace_back(start, ordinates.size());
    return b;
}

}  // namespace lambertz
