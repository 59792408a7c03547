#include "lambertz/cuspforms.hpp"

#include <fstream>
#include <sstream>

namespace lambertz {

namespace {

using i128 = __int128;

// eta(q)^3 / q^{1/8} = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
std::vector<std::pair<std::size_t, long>> jacobi_cube(std::size_t L) {
    std::vector<std::pair<std::size_t, long>> J;
    for (std::size_t k = 0;; ++k) {
        std::size_t e = k * (k + 1) / 2;
        if (e > L) break;
        J.emplace_back(e, (k % 2 ? -1L : 1L) * static_cast<long>(2 * k + 1));
    }
    return J;
}

}  // namespace

std::vector<BigInt> ramanujan_tau(std::size_t n_max) {
    if (n_max < 1) throw parameter_error("ramanujan_tau: n_max must be >= 1");
    // All intermediate coefficients stay far below 2^127 for this range
    // (the worst, eta^24 itself, is ~ d(n) n^{11/2}).
    if (n_max > 300000) throw parameter_error("ramanujan_tau: n_max above supported range");
    std::size_t L = n_max - 1;  // eta^24 = q * (series up to q^L)
    auto J = jacobi_cube(L);
    std::vector<i128> acc(L + 1, 0);
    for (auto [e, c] : J) acc[e] = c;
    // seven sparse multiplications: (eta^3)^8
    std::vector<i128> next(L + 1);
    for (int pass = 0; pass < 7; ++pass) {
        std::fill(next.begin(), next.end(), i128(0));
        for (auto [e, c] : J) {
            if (c == 0) continue;
            for (std::size_t i = 0; i + e <= L; ++i)
                if (acc[i] != 0) next[i + e] += acc[i] * c;
        }
        acc.swap(next);
    }
    std::vector<BigInt> tau(n_max + 1);
    for (std::size_t i = 0; i <= L; ++i) {
        i128 v = acc[i];
        bool neg = v < 0;
        if (neg) v = -v;
        BigInt b = static_cast<std::uint64_t>(v >> 64);
        b <<= 64;
        b += static_cast<std::uint64_t>(v);
        tau[i + 1] = neg ? -b : b;
    }
    return tau;
}

CuspFormData delta_form(std::size_t n_max, const PrecisionContext& ctx) {
    auto tau = ramanujan_tau(n_max);
    CuspFormData f{12, 1, build_character(1, "principal", ctx), {}, {}, true, "delta-generator"};
    f.coeffs_f.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) f.coeffs_f.emplace_back(ctx.real(tau[n]), ctx.zero());
    f.coeffs_g = f.coeffs_f;
    return f;
}

std::vector<std::uint32_t> divisor_count_sieve(std::size_t n_max) {
    std::vector<std::uint32_t> dcount(n_max + 1, 0);
    for (std::size_t d = 1; d <= n_max; ++d)
        for (std::size_t n = d; n <= n_max; n += d) ++dcount[n];
    return dcount;
}

void deligne_screen(const CuspFormData& form, const PrecisionContext& ctx) {
    auto dcount = divisor_count_sieve(form.n_max());
    Real slack = ctx.one() + ctx.pow10(-6);
    Real half_km1 = ctx.real(static_cast<long>(form.weight) - 1) / 2;
    for (std::size_t n = 1; n <= form.n_max(); ++n) {
        Real bound = ctx.real(static_cast<long>(dcount[n])) * pow(ctx.real(static_cast<long>(n)), half_km1) * slack;
        if (abs(form.coeffs_f[n - 1]) > bound)
            throw data_error("coefficient integrity screen failed at n = " + std::to_string(n) +
                             ": |a_f(n)| exceeds d(n) n^{(k-1)/2}");
    }
    if (form.normalized && !(abs(form.coeffs_f[0] - Complex(ctx.one(), ctx.zero())) < ctx.tol_digits(10)))
        throw data_error("form declared normalized but a_f(1) != 1");
}

namespace {

std::vector<Complex> parse_body(std::istream& in, std::size_t n_max, const PrecisionContext& ctx,
                                std::size_t& lineno, std::string& pending) {
    std::vector<Complex> coeffs(n_max, Complex(ctx.zero(), ctx.zero()));
    std::vector<bool> seen(n_max, false);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '[') {
            pending = line;
            break;
        }
        std::istringstream ls(line);
        unsigned long n;
        std::string re_s, im_s;
        if (!(ls >> n >> re_s >> im_s))
            throw parse_error("coefficient file line " + std::to_string(lineno) + ": expected 'n re im'");
        if (n >= 1 && n <= n_max) {
            coeffs[n - 1] = Complex(ctx.real(re_s), ctx.real(im_s));
            seen[n - 1] = true;
        }
    }
    for (std::size_t i = 0; i < n_max; ++i)
        if (!seen[i])
            throw parse_error("coefficient file: fewer than n_max = " + std::to_string(n_max) +
                              " coefficients (missing n = " + std::to_string(i + 1) + ")");
    return coeffs;
}

}  // namespace

CuspFormData load_coefficients(const std::string& path, std::size_t n_max,
                               const PrecisionContext& ctx) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open coefficient file: " + path);
    unsigned weight = 0, level = 0, neb_mod = 0;
    bool normalized = true;
    std::vector<Complex> neb_values;
    std::string line;
    std::size_t lineno = 0;
    // header
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) break;  // first body line reached only via [f]? keep strict
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        auto strip = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        key = strip(key);
        val = strip(val);
        if (key == "weight") weight = std::stoul(val);
        else if (key == "level") level = std::stoul(val);
        else if (key == "nebentypus_modulus") neb_mod = std::stoul(val);
        else if (key == "nebentypus_values") {
            std::istringstream vs(val);
            std::string tok;
            while (std::getline(vs, tok, ',')) neb_values.emplace_back(ctx.real(strip(tok)), ctx.zero());
        } else if (key == "normalized") normalized = (val == "true" || val == "1");
        else if (key == "body") break;
        else throw parse_error("coefficient file line " + std::to_string(lineno) + ": unknown header key '" + key + "'");
        if (key == "normalized") break;  // last header line by format
    }
    if (weight == 0 || weight % 2 != 0)
        throw parse_error("coefficient file: weight missing or odd");
    if (level == 0) throw parse_error("coefficient file: level missing");
    if (neb_mod == 0) throw parse_error("coefficient file: nebentypus_modulus missing");

    DirichletCharacter neb = neb_values.empty()
                                 ? build_character(neb_mod, "principal", ctx)
                                 : build_character(neb_mod, std::move(neb_values), ctx);

    std::string pending;
    auto coeffs_f = parse_body(in, n_max, ctx, lineno, pending);
    CuspFormData form{weight, level, neb, std::move(coeffs_f), {}, normalized, "file"};
    if (pending == "[g]") {
        std::string dummy;
        form.coeffs_g = parse_body(in, n_max, ctx, lineno, dummy);
    } else if (level == 1) {
        form.coeffs_g = form.coeffs_f;
    } else {
        throw data_error("coefficient file: level > 1 requires a [g] section with the Fricke partner");
    }
    deligne_screen(form, ctx);
    return form;
}

void save_coefficients(const CuspFormData& form, const std::string& path,
                       const PrecisionContext& ctx) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write coefficient file: " + path);
    out << "weight=" << form.weight << "\n";
    out << "level=" << form.level << "\n";
    out << "nebentypus_modulus=" << form.nebentypus.modulus() << "\n";
    out << "nebentypus_values=";
    for (unsigned j = 1; j <= form.nebentypus.modulus(); ++j)
        out << (j > 1 ? "," : "") << to_string(form.nebentypus(j).re(), ctx.work_digits());
    out << "\n";
    out << "normalized=" << (form.normalized ? "true" : "false") << "\n";
    for (std::size_t n = 1; n <= form.n_max(); ++n)
        out << n << " " << to_string(form.coeffs_f[n - 1].re(), ctx.work_digits()) << " "
            << to_string(form.coeffs_f[n - 1].im(), ctx.work_digits()) << "\n";
    if (form.level > 1) {
        out << "[g]\n";
        for (std::size_t n = 1; n <= form.coeffs_g.size(); ++n)
            out << n << " " << to_string(form.coeffs_g[n - 1].re(), ctx.work_digits()) << " "
                << to_string(form.coeffs_g[n - 1].im(), ctx.work_digits()) << "\n";
    }
}

const std::vector<Complex>& fricke_partner(const CuspFormData& form) {
    if (form.level == 1) return form.coeffs_f;
    if (form.coeffs_g.size() >= form.coeffs_f.size()) return form.coeffs_g;
    throw data_error("fricke_partner: level > 1 form has no stored a_g coefficients");
}

}  // namespace lambertz
