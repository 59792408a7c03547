// Fourier-coefficient providers: the exact-integer Ramanujan Delta
// generator, coefficient-file ingestion, and the Fricke partner wiring.

#pragma once

#include <string>
#include <vector>

#include "lambertz/characters.hpp"
#include "lambertz/precision.hpp"

namespace lambertz {

struct CuspFormData {
    unsigned weight = 0;               // k, positive even
    unsigned level = 1;                // Q
    DirichletCharacter nebentypus;     // chi mod Q
    std::vector<Complex> coeffs_f;     // a_f(1..n_max)
    std::vector<Complex> coeffs_g;     // Fricke partner a_g(1..n_max)
    bool normalized = true;
    std::string source;                // "delta-generator" | "file"

    std::size_t n_max() const { return coeffs_f.size(); }
};

// tau(1..n_max) as exact integers, from the 24th power of the eta product
// q prod (1-q^n)^24 (Jacobi cube + seven sparse multiplications)
std::vector<BigInt> ramanujan_tau(std::size_t n_max);

// Delta as CuspFormData (k=12, Q=1, trivial nebentypus, a_g = a_f)
CuspFormData delta_form(std::size_t n_max, const PrecisionContext& ctx);

// coefficient file: header lines weight=, level=, nebentypus_modulus=,
// nebentypus_values=, normalized=; body lines "n re im"; optional [g]
// section with the same body shape
CuspFormData load_coefficients(const std::string& path, std::size_t n_max,
                               const PrecisionContext& ctx);
void save_coefficients(const CuspFormData& form, const std::string& path,
                       const PrecisionContext& ctx);

// Q = 1: coeffs_f (Fricke fixes level-1 forms); otherwise the stored a_g
const std::vector<Complex>& fricke_partner(const CuspFormData& form);

// divisor-count d(1..n_max), for the Deligne-scale integrity screen
std::vector<std::uint32_t> divisor_count_sieve(std::size_t n_max);

// |a_f(n)| <= d(n) n^{(k-1)/2} (1 + 1e-6); throws data_error on violation
void deligne_screen(const CuspFormData& form, const PrecisionContext& ctx);

}  // namespace lambertz
