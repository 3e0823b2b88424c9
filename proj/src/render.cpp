#include "faulhaber/render.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace faulhaber {

namespace {

struct Term {
    Rational coef;
    std::string monomial;  // empty for a constant
};

Json rational_array(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& r : v) arr.push_back(r.to_string());
    return arr;
}

std::string text_coef(const Rational& abs_coef) { return abs_coef.to_string(); }

// Joins terms as "a x - b y + c"; a unit coefficient in front of a monomial is dropped.
template <typename CoefFn>
std::string join_terms(const std::vector<Term>& terms, CoefFn coef_fn, const char* sep) {
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (t.coef.is_zero()) continue;
        const bool neg = t.coef.sign() < 0;
        const Rational mag = neg ? -t.coef : t.coef;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        if (t.monomial.empty()) {
            out += coef_fn(mag);
        } else if (mag == Rational(1)) {
            out += t.monomial;
        } else {
            out += coef_fn(mag);
            out += sep;
            out += t.monomial;
        }
    }
    return first ? "0" : out;
}

std::string power_of(const std::string& var, std::int64_t e, bool latex) {
    if (e == 0) return "";
    if (e == 1) return var;
    const std::string es = std::to_string(e);
    if (latex && es.size() > 1) return var + "^{" + es + "}";
    return var + "^" + es;
}

std::vector<Term> descending_terms(const PolyForm& pf, bool latex) {
    std::vector<Term> terms;
    if (pf.basis == Basis::power) {
        for (std::size_t i = pf.coefficients.size(); i-- > 0;) {
            terms.push_back({pf.coefficients[i], power_of("n", static_cast<std::int64_t>(i) + 1, latex)});
        }
    } else {
        const std::int64_t offset = pf.p % 2 == 0 ? 1 : 2;
        for (std::size_t m = pf.coefficients.size(); m-- > 0;) {
            terms.push_back({pf.coefficients[m], power_of("N", 2 * static_cast<std::int64_t>(m) + offset, latex)});
        }
        if (pf.constant) terms.push_back({*pf.constant, ""});
    }
    return terms;
}

std::vector<Term> s1_terms(const PolyForm& pf, bool latex) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < pf.coefficients.size(); ++j) {
        std::string mono;
        if (j == 1) mono = "S_1(n)";
        else if (j > 1) mono = latex ? "\\big( S_1(n) \\big)^" + std::to_string(j) : "S_1(n)^" + std::to_string(j);
        terms.push_back({pf.coefficients[j], mono});
    }
    return terms;
}

std::string lhs(std::int64_t p, bool latex) {
    const std::string ps = std::to_string(p);
    if (latex && ps.size() > 1) return "S_{" + ps + "}(n) = ";
    return "S_" + ps + "(n) = ";
}

}  // namespace

const char* to_string(Format f) {
    switch (f) {
        case Format::text: return "text";
        case Format::json: return "json";
        case Format::latex: return "latex";
    }
    return "?";
}

std::optional<Format> parse_format(std::string_view name) {
    for (Format f : {Format::text, Format::json, Format::latex}) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.to_string();
    const bool neg = r.sign() < 0;
    const Rational mag = neg ? -r : r;
    return std::string(neg ? "-" : "") + "\\frac{" + mag.numerator().to_string() + "}{" +
           mag.denominator().to_string() + "}";
}

Json to_json(const FaulhaberCoeffs& c) {
    Json j;
    j["p"] = c.p;
    j["k"] = c.k;
    j["parity"] = to_string(c.parity);
    j["f"] = rational_array(c.f);
    if (c.constant) j["constant"] = c.constant->to_string();
    return j;
}

Json to_json(const PolyForm& pf) {
    Json j;
    j["p"] = pf.p;
    j["basis"] = to_string(pf.basis);
    j["coefficients"] = rational_array(pf.coefficients);
    if (pf.constant) j["constant"] = pf.constant->to_string();
    return j;
}

std::string render_text(const FaulhaberCoeffs& c) {
    std::ostringstream os;
    os << "p = " << c.p << " (" << to_string(c.parity) << ", k = " << c.k << ")\n";
    for (std::size_t m = c.f.size(); m-- > 0;) os << "f_" << m << " = " << c.f[m] << "\n";
    if (c.constant) os << "c_" << c.p << " = " << *c.constant << "\n";
    return os.str();
}

std::string render_latex(const FaulhaberCoeffs& c) {
    std::ostringstream os;
    for (std::size_t m = c.f.size(); m-- > 0;) {
        os << "f_{" << m << "}^{(" << c.p << ")} = " << latex_rational(c.f[m]) << " \\\\\n";
    }
    if (c.constant) os << "c_{" << c.p << "} = " << latex_rational(*c.constant) << " \\\\\n";
    return os.str();
}

std::string render_text(const PolyForm& pf) {
    const auto coef = [](const Rational& r) { return text_coef(r); };
    std::string body;
    if (pf.basis == Basis::s1) {
        const std::string prefix = pf.p % 2 == 0 ? "S_2(n) * " : "S_1(n)^2 * ";
        body = prefix + "[" + join_terms(s1_terms(pf, false), coef, " ") + "]";
    } else {
        body = join_terms(descending_terms(pf, false), coef, " ");
    }
    return lhs(pf.p, false) + body + "\n";
}

std::string render_latex(const PolyForm& pf) {
    const auto coef = [](const Rational& r) { return latex_rational(r); };
    std::string body;
    if (pf.basis == Basis::s1) {
        const std::string prefix = pf.p % 2 == 0 ? "S_2(n) " : "\\big( S_1(n) \\big)^2 ";
        body = prefix + "\\left[ " + join_terms(s1_terms(pf, true), coef, " ") + " \\right]";
    } else {
        body = join_terms(descending_terms(pf, true), coef, "");
    }
    return lhs(pf.p, true) + body + "\n";
}

}  // namespace faulhaber
