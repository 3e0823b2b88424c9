#include "faulhaber/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "faulhaber/bench.hpp"
#include "faulhaber/coeffs.hpp"
#include "faulhaber/polyforms.hpp"
#include "faulhaber/render.hpp"

namespace faulhaber {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Format require_format(const std::string& name) {
    if (auto f = parse_format(name)) return *f;
    throw UsageError("unknown format '" + name + "' (expected text, json or latex)");
}

Basis require_basis(const std::string& name) {
    if (auto b = parse_basis(name)) return *b;
    throw UsageError("unknown basis '" + name + "' (expected power, center or s1)");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render(const FaulhaberCoeffs& c, Format f) {
    switch (f) {
        case Format::text: return render_text(c);
        case Format::latex: return render_latex(c);
        case Format::json: return dump(to_json(c));
    }
    return {};
}

std::string render(const PolyForm& pf, Format f) {
    switch (f) {
        case Format::text: return render_text(pf);
        case Format::latex: return render_latex(pf);
        case Format::json: return dump(to_json(pf));
    }
    return {};
}

void check_basis_for_p(Basis b, std::int64_t p) {
    if (b == Basis::power && p < 0) throw UsageError("power basis needs p >= 0");
    if (b == Basis::center && p < 1) throw UsageError("center basis needs p >= 1");
    if (b == Basis::s1 && p < 2) throw UsageError("s1 basis needs p >= 2");
}

struct CoeffsArgs {
    std::int64_t p = 0;
    std::string method = "recurrence";
    std::string format = "text";
};

std::string cmd_coeffs(const CoeffsArgs& a) {
    const Format fmt = require_format(a.format);
    if (a.p < 1) throw UsageError("coeffs needs p >= 1, got " + std::to_string(a.p));
    if (a.method == "closed-form") return render(explicit_center_polynomial(a.p).center_coeffs(), fmt);
    const auto m = parse_method(a.method);
    if (!m) throw UsageError("unknown method '" + a.method + "'");
    if (!method_applies(*m, a.p)) {
        throw UsageError("method '" + a.method + "' needs odd p >= 3, got " + std::to_string(a.p));
    }
    return render(compute_coeffs(a.p, *m), fmt);
}

struct PolyArgs {
    std::int64_t p = 0;
    std::string basis = "center";
    std::string format = "text";
};

std::string cmd_poly(const PolyArgs& a) {
    const Format fmt = require_format(a.format);
    const Basis b = require_basis(a.basis);
    check_basis_for_p(b, a.p);
    return render(make_form(a.p, b), fmt);
}

struct ConvertArgs {
    std::int64_t p = 0;
    std::string from = "center";
    std::string to;
    std::string coefficients;
    std::string constant;
    std::string format = "text";
};

std::string cmd_convert(const ConvertArgs& a) {
    const Format fmt = require_format(a.format);
    const Basis from = require_basis(a.from);
    const Basis to = require_basis(a.to);
    check_basis_for_p(from, a.p);
    check_basis_for_p(to, a.p);
    if (from == Basis::power && a.p < 1) throw UsageError("conversion from power needs p >= 1");
    PolyForm src;
    if (a.coefficients.empty()) {
        if (!a.constant.empty()) throw UsageError("--constant requires --coefficients");
        src = make_form(a.p, from);
    } else {
        src.p = a.p;
        src.basis = from;
        for (const auto& s : split_list(a.coefficients)) src.coefficients.push_back(Rational::parse(s));
        if (!a.constant.empty()) src.constant = Rational::parse(a.constant);
        if (from == Basis::center) (void)src.center_coeffs();  // shape check
    }
    return render(convert(src, to), fmt);
}

struct EvalArgs {
    std::int64_t p = 0;
    std::string n;
    std::string basis = "center";
    std::string format = "text";
};

std::string cmd_eval(const EvalArgs& a) {
    const Format fmt = require_format(a.format);
    const Basis b = require_basis(a.basis);
    check_basis_for_p(b, a.p);
    const Rational n = Rational::parse(a.n);
    const Rational value = evaluate(make_form(a.p, b), n);
    switch (fmt) {
        case Format::text: return value.to_string() + "\n";
        case Format::latex: return latex_rational(value) + "\n";
        case Format::json: {
            Json j;
            j["p"] = a.p;
            j["basis"] = to_string(b);
            j["n"] = n.to_string();
            j["value"] = value.to_string();
            return dump(j);
        }
    }
    return {};
}

struct VerifyArgs {
    std::int64_t p_max = 11;
    std::int64_t n_max = 50;
    std::int64_t k_max = 5;
    std::string format = "text";
};

std::pair<std::string, int> cmd_verify(const VerifyArgs& a, const VerifyOptions& opts) {
    const Format fmt = require_format(a.format);
    if (a.p_max < 1 || a.n_max < 1 || a.k_max < 1) {
        throw UsageError("verify ranges must be >= 1");
    }
    const VerifyReport r = run_verification(a.p_max, a.n_max, a.k_max, opts);
    const std::string text = fmt == Format::json ? dump(to_json(r)) : render_text(r);
    return {text, r.passed() ? kExitOk : kExitVerifyFailed};
}

struct BenchArgs {
    std::int64_t k_max = 0;
    std::string methods;
    std::string format = "text";
};

std::pair<std::string, int> cmd_bench(const BenchArgs& a) {
    const Format fmt = require_format(a.format);
    if (fmt == Format::latex) throw UsageError("bench supports text or json output");
    if (a.k_max < 1) throw UsageError("bench needs --k-max >= 1");
    std::vector<Method> methods;
    if (a.methods.empty()) {
        methods = default_bench_methods();
    } else {
        for (const auto& name : split_list(a.methods)) {
            const auto m = parse_method(name);
            if (!m) throw UsageError("unknown method '" + name + "'");
            methods.push_back(*m);
        }
        if (methods.empty()) throw UsageError("--methods is empty");
    }
    const BenchResult r = run_bench(a.k_max, methods);
    const std::string text = fmt == Format::json ? dump(to_json(r)) : render_text(r);
    return {text, r.consistent() ? kExitOk : kExitVerifyFailed};
}

void add_format(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "Output format: text, json or latex")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks) {
    CLI::App app{"Exact power-sum polynomials S_p(n) in power, centered and S_1 bases", "faulhaber"};
    app.require_subcommand(1, 1);

    CoeffsArgs coeffs;
    auto* c_cmd = app.add_subcommand("coeffs", "Centered coefficients f_m of S_p by one method");
    c_cmd->add_option("--p", coeffs.p, "Power p >= 1")->required();
    c_cmd->add_option("--method", coeffs.method,
                      "recurrence, determinant, witmer, explicit, derivative or closed-form")
        ->capture_default_str();
    add_format(c_cmd, coeffs.format);

    PolyArgs poly;
    auto* p_cmd = app.add_subcommand("poly", "Full polynomial S_p(n) in one basis");
    p_cmd->add_option("--p", poly.p, "Power p")->required();
    p_cmd->add_option("--basis", poly.basis, "power, center or s1")->capture_default_str();
    add_format(p_cmd, poly.format);

    ConvertArgs conv;
    auto* v_cmd = app.add_subcommand("convert", "Convert S_p between bases");
    v_cmd->add_option("--p", conv.p, "Power p")->required();
    v_cmd->add_option("--from", conv.from, "Source basis")->capture_default_str();
    v_cmd->add_option("--to", conv.to, "Target basis")->required();
    v_cmd->add_option("--coefficients", conv.coefficients,
                      "Comma-separated source coefficients (default: computed)");
    v_cmd->add_option("--constant", conv.constant, "Source constant term (center basis, odd p)");
    add_format(v_cmd, conv.format);

    EvalArgs ev;
    auto* e_cmd = app.add_subcommand("eval", "Evaluate S_p at a rational n");
    e_cmd->add_option("--p", ev.p, "Power p")->required();
    e_cmd->add_option("--n", ev.n, "Integer or a/b")->required();
    e_cmd->add_option("--basis", ev.basis, "power, center or s1")->capture_default_str();
    add_format(e_cmd, ev.format);

    VerifyArgs ver;
    auto* r_cmd = app.add_subcommand("verify", "Cross-check every method against brute force");
    r_cmd->add_option("--p-max", ver.p_max, "Largest power")->capture_default_str();
    r_cmd->add_option("--n-max", ver.n_max, "Largest evaluation point")->capture_default_str();
    r_cmd->add_option("--k-max", ver.k_max, "Largest k for determinant identities")->capture_default_str();
    add_format(r_cmd, ver.format);

    BenchArgs bench;
    auto* b_cmd = app.add_subcommand("bench", "Time the coefficient methods for k = 1..k_max");
    b_cmd->add_option("--k-max", bench.k_max, "Largest k")->required();
    b_cmd->add_option("--methods", bench.methods, "Comma-separated method list");
    add_format(b_cmd, bench.format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        std::string text;
        int status = kExitOk;
        if (*c_cmd) text = cmd_coeffs(coeffs);
        else if (*p_cmd) text = cmd_poly(poly);
        else if (*v_cmd) text = cmd_convert(conv);
        else if (*e_cmd) text = cmd_eval(ev);
        else if (*r_cmd) std::tie(text, status) = cmd_verify(ver, hooks.verify);
        else if (*b_cmd) std::tie(text, status) = cmd_bench(bench);
        out << text;
        return status;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ZeroDenominatorError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace faulhaber
