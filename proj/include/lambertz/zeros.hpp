// Zeros of L(s, chi) on the critical line: sign-change scan of the
// real-rotated completed xi, bisection refinement, residual certification,
// CSV import/export, and the bracketing rule for the residue sum.

#pragma once

#include <string>
#include <vector>

#include "lambertz/lfunctions.hpp"
#include "lambertz/parallel.hpp"
#include "lambertz/precision.hpp"

namespace lambertz {

struct LZero {
    unsigned modulus = 0;
    std::string character_digest;
    unsigned index = 0;   // ordinal among positive-ordinate zeros
    Real t;               // zero at rho = 1/2 + i t
    Real residual;        // |xi(1/2 + i t)|
};

struct ZeroScanOptions {
    double t_max = 100.0;
    double scan_step = 0.05;
    ExecPolicy policy = ExecPolicy::openmp;
};

// Z(t) = xi(1/2 + it) / sqrt(W), real for primitive chi; the scan function
Real rotated_xi(const DirichletLSeries& series, const Real& t);

std::vector<LZero> find_zeros(const DirichletLSeries& series, const ZeroScanOptions& opts);

// certification applied to every found or imported zero: |xi| and |L| both
// small, and the simplicity witness |L'(rho)| > 10^3 residual
void certify_zero(const DirichletLSeries& series, LZero& z);

void export_zeros(const std::vector<LZero>& zeros, const std::string& path);
// re-certifies each row against the series; throws data_error naming the row
std::vector<LZero> import_zeros(const std::string& path, const DirichletLSeries& series);

struct Bracketing {
    Real constant_C;
    // [first, last) index ranges into the ordinate list, contiguous, maximal
    std::vector<std::pair<std::size_t, std::size_t>> groups;
};

// ordinates must be sorted ascending (both signs allowed); consecutive zeros
// chain into one bracket when their gap is below the sum of the two
// exp(-C |t| / log(|t| + 3)) thresholds
Bracketing bracket(const std::vector<Real>& ordinates, const Real& C, const PrecisionContext& ctx);

}  // namespace lambertz
