#pragma once

// Text, LaTeX and JSON emitters. Text and LaTeX list center and power terms
// by descending exponent; the s1 bracket is listed by ascending power of
// S_1(n). JSON always stores coefficient vectors in ascending index order
// with rationals as "num/den" strings.

#include <string>

#include "json.hpp"

#include "faulhaber/coeffs.hpp"
#include "faulhaber/polyforms.hpp"

namespace faulhaber {

using Json = nlohmann::ordered_json;

enum class Format { text, json, latex };

const char* to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

Json to_json(const FaulhaberCoeffs& c);
Json to_json(const PolyForm& pf);

std::string render_text(const FaulhaberCoeffs& c);
std::string render_latex(const FaulhaberCoeffs& c);

std::string render_text(const PolyForm& pf);
std::string render_latex(const PolyForm& pf);

/// "\frac{a}{b}" with the sign in front, or a bare integer.
std::string latex_rational(const Rational& r);

}  // namespace faulhaber
