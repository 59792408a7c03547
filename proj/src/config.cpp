#include "lambertz/config.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lambertz {

namespace {

std::string strip(std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
}

}  // namespace

RunConfig parse_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    RunConfig rc;
    std::string section, line;
    std::vector<std::string> problems;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            if (section != "form" && section != "psi" && section != "psi_prime" && section != "run")
                problems.push_back("line " + std::to_string(lineno) + ": unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            problems.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        try {
            if (section == "form") {
                if (key == "source") rc.form_source = val;
                else if (key == "n_max") rc.form_n_max = std::stoul(val);
                else problems.push_back("line " + std::to_string(lineno) + ": unknown [form] key " + key);
            } else if (section == "psi" || section == "psi_prime") {
                unsigned& mod = (section == "psi") ? rc.psi_modulus : rc.psi_prime_modulus;
                std::string& spec = (section == "psi") ? rc.psi_spec : rc.psi_prime_spec;
                if (key == "modulus") mod = static_cast<unsigned>(std::stoul(val));
                else if (key == "values") spec = val;
                else problems.push_back("line " + std::to_string(lineno) + ": unknown [" + section + "] key " + key);
            } else if (section == "run") {
                if (key == "y") {
                    std::istringstream ys(val);
                    std::string tok;
                    while (std::getline(ys, tok, ',')) rc.y_literals.push_back(strip(tok));
                } else if (key == "n_max_lhs") rc.n_max_lhs = std::stoul(val);
                else if (key == "n_max_rhs") rc.n_max_rhs = std::stoul(val);
                else if (key == "zero_budget") rc.zero_budget = static_cast<unsigned>(std::stoul(val));
                else if (key == "budget_mode") rc.budget_pairs = (val == "pairs");
                else if (key == "bracket_C") rc.bracket_C = std::stod(val);
                else if (key == "t_max") rc.t_max = std::stod(val);
                else if (key == "scan_step") rc.scan_step = std::stod(val);
                else if (key == "digits") rc.digits = static_cast<unsigned>(std::stoul(val));
                else if (key == "serial") rc.serial = (val == "true" || val == "1");
                else if (key == "out") rc.out_path = val;
                else problems.push_back("line " + std::to_string(lineno) + ": unknown [run] key " + key);
            } else {
                problems.push_back("line " + std::to_string(lineno) + ": key outside any section");
            }
        } catch (const std::exception&) {
            problems.push_back("line " + std::to_string(lineno) + ": cannot parse value '" + val + "'");
        }
    }
    if (rc.y_literals.empty()) problems.push_back("[run] y list is required");
    if (rc.digits < 30) problems.push_back("[run] digits must be >= 30");
    if (!problems.empty()) {
        std::string msg = "invalid config:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw config_error(msg);
    }
    return rc;
}

namespace {

// a single entry: exact rational "p/q" or "n", or root of unity "e(p/q)"
Complex parse_character_entry(const std::string& tok, const PrecisionContext& ctx) {
    std::string t = strip(tok);
    if (t.rfind("e(", 0) == 0 && t.back() == ')') {
        std::string frac = t.substr(2, t.size() - 3);
        auto slash = frac.find('/');
        long p = std::stol(frac.substr(0, slash));
        long q = slash == std::string::npos ? 1 : std::stol(frac.substr(slash + 1));
        if (q == 0) throw config_error("character entry with zero denominator: " + tok);
        auto [sn, cs] = sin_cos(ctx.two_pi() * ctx.real(p) / ctx.real(q));
        return {cs, sn};
    }
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        return Complex(ctx.real(std::stol(t.substr(0, slash))) / ctx.real(std::stol(t.substr(slash + 1))),
                       ctx.zero());
    }
    return Complex(ctx.real(t), ctx.zero());
}

}  // namespace

DirichletCharacter character_from_spec(unsigned modulus, const std::string& spec,
                                       const PrecisionContext& ctx) {
    if (spec == "principal" || spec == "quadratic") return build_character(modulus, spec, ctx);
    std::vector<Complex> vals;
    std::istringstream vs(spec);
    std::string tok;
    while (std::getline(vs, tok, ',')) vals.push_back(parse_character_entry(tok, ctx));
    if (vals.size() != modulus)
        throw config_error("character spec has " + std::to_string(vals.size()) +
                           " values, modulus needs " + std::to_string(modulus));
    return build_character(modulus, std::move(vals), ctx);
}

IdentityConfig build_identity_config(const RunConfig& rc, const PrecisionContext& ctx) {
    std::size_t coeff_need = (std::max)(2 * rc.n_max_lhs, rc.n_max_rhs);
    coeff_need = (std::max)(coeff_need, static_cast<std::size_t>(256));  // AFE headroom
    if (rc.form_n_max) coeff_need = (std::max)(coeff_need, rc.form_n_max);

    CuspFormData form = (rc.form_source == "delta")
                            ? delta_form(coeff_need, ctx)
                            : load_coefficients(rc.form_source, coeff_need, ctx);

    IdentityConfig cfg{std::move(form),
                       character_from_spec(rc.psi_modulus, rc.psi_spec, ctx),
                       character_from_spec(rc.psi_prime_modulus, rc.psi_prime_spec, ctx),
                       {},
                       rc.n_max_lhs,
                       rc.n_max_rhs,
                       rc.zero_budget,
                       rc.budget_pairs,
                       rc.bracket_C,
                       rc.t_max,
                       rc.scan_step,
                       rc.serial ? ExecPolicy::serial : ExecPolicy::openmp};
    for (const auto& lit : rc.y_literals) cfg.y_values.push_back(ctx.real(lit));
    return cfg;
}

std::string report_to_json(const VerificationReport& rep, const RunConfig& rc,
                           const PrecisionContext& ctx, bool with_metadata) {
    using json = nlohmann::ordered_json;
    const unsigned digits = ctx.digits();
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json subtotals = json::array();
        for (const auto& s : row.bracket_subtotals) subtotals.push_back(to_string(s, digits));
        rows.push_back({{"y", to_string(row.y, digits)},
                        {"lhs", to_string(row.lhs, digits)},
                        {"rhs_hypergeom", to_string(row.rhs_hypergeom, digits)},
                        {"rhs_R0", to_string(row.rhs_r0, digits)},
                        {"rhs_residue_sum", to_string(row.rhs_residue_sum, digits)},
                        {"bracket_subtotals", subtotals},
                        {"rhs_total", to_string(row.rhs_total, digits)},
                        {"abs_diff", to_string(row.abs_diff, 10)},
                        {"lhs_tail_bound", to_string(row.lhs_tail_bound, 10)},
                        {"rhs_tail_bound", to_string(row.rhs_tail_bound, 10)}});
    }
    json report = {{"digits", digits},
                   {"n_max_lhs", rc.n_max_lhs},
                   {"n_max_rhs", rc.n_max_rhs},
                   {"zero_budget", rc.zero_budget},
                   {"zero_budget_mode", rep.zero_budget_mode},
                   {"zeros_used", rep.zeros_used},
                   {"brackets_used", rep.brackets_used},
                   {"rows", rows}};
    json doc;
    if (with_metadata) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        doc["metadata"] = {
            {"unix_time", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
            {"threads", hardware_threads()}};
    }
    doc["report"] = report;
    return doc.dump(2) + "\n";
}

}  // namespace lambertz
