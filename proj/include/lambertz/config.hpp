// Flat key/value run configuration with [form] / [psi] / [psi_prime] / [run]
// sections, plus the deterministic JSON report writer.

#pragma once

#include <string>
#include <vector>

#include "lambertz/identity.hpp"
#include "lambertz/precision.hpp"

namespace lambertz {

struct RunConfig {
    // [form]
    std::string form_source = "delta";  // "delta" | coefficient file path
    std::size_t form_n_max = 0;         // 0: derived from the truncations
    // [psi], [psi_prime]
    unsigned psi_modulus = 1;
    std::string psi_spec = "principal";  // "principal" | "quadratic" | value list
    unsigned psi_prime_modulus = 1;
    std::string psi_prime_spec = "principal";
    // [run]
    std::vector<std::string> y_literals;
    std::size_t n_max_lhs = 2000;
    std::size_t n_max_rhs = 2000;
    unsigned zero_budget = 22;
    bool budget_pairs = true;
    double bracket_C = 1.0;
    double t_max = 100.0;
    double scan_step = 0.05;
    unsigned digits = 60;
    bool serial = false;
    std::string out_path;
};

// parses the sectioned key = value text; aggregates every problem into one
// config_error
RunConfig parse_run_config(const std::string& path);

// character values from a spec string: "principal", "quadratic", or a
// comma-separated list of exact rationals / e(p/q) root-of-unity exponents
DirichletCharacter character_from_spec(unsigned modulus, const std::string& spec,
                                       const PrecisionContext& ctx);

// materialize the IdentityConfig (generates or loads coefficients)
IdentityConfig build_identity_config(const RunConfig& rc, const PrecisionContext& ctx);

// deterministic report JSON: high-precision numbers rendered as strings, a
// separate metadata block carries the timestamp
std::string report_to_json(const VerificationReport& rep, const RunConfig& rc,
                           const PrecisionContext& ctx, bool with_metadata);

}  // namespace lambertz
