// Copyright 2026 The duflo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "duflo/io/format.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <utility>

namespace duflo {
namespace {

struct Term {
  GaussRat coeff;
  std::string monomial;  // empty for the constant term
};

// Joins signed terms: "a x - b y + c". Complex coefficients with two nonzero
// parts are parenthesised.
std::string join_terms(const std::vector<Term>& terms,
                       const std::function<std::string(const Rational&)>& rational,
                       const std::string& imag_unit, const std::string& separator) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const GaussRat mag = negative ? -c : c;
    std::string coeff;
    if (mag.is_real()) {
      coeff = (mag.re() == 1 && !mono.empty()) ? "" : rational(mag.re());
    } else if (sgn(mag.re()) == 0) {
      coeff = mag.im() == 1 ? imag_unit : rational(mag.im()) + separator + imag_unit;
    } else {
      const bool im_neg = sgn(mag.im()) < 0;
      const Rational im_abs = im_neg ? Rational(-mag.im()) : mag.im();
      coeff = "(" + rational(mag.re()) + (im_neg ? " - " : " + ") +
              (im_abs == 1 ? imag_unit : rational(im_abs) + separator + imag_unit) + ")";
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += separator;
    out += mono;
  }
  return out;
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  const bool neg = sgn(r) < 0;
  Integer num = neg ? Integer(-r.get_num()) : r.get_num();
  return std::string(neg ? "-" : "") + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string text_rational(const Rational& r) { return to_display(r); }

// Terms grouped by descending total degree, lexicographically descending
// inside a degree.
template <typename Poly>
std::vector<std::pair<Exponent, GaussRat>> display_order(const Poly& p) {
  std::vector<std::pair<Exponent, GaussRat>> v(p.terms().begin(), p.terms().end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    const unsigned da = degree(a.first);
    const unsigned db = degree(b.first);
    return da != db ? da > db : a.first > b.first;
  });
  return v;
}

template <typename Poly>
std::string render(const Poly& p, const std::string& symbol, bool latex) {
  std::vector<Term> terms;
  for (const auto& [e, c] : display_order(p)) {
    std::string mono;
    for (std::size_t i = 0; i < kRank; ++i) {
      if (e[i] == 0) continue;
      std::string factor;
      if (latex) {
        factor = symbol + "_" + std::to_string(i + 1);
        if (e[i] > 1) factor += "^{" + std::to_string(e[i]) + "}";
      } else {
        factor = symbol + std::to_string(i + 1);
        if (e[i] > 1) factor += "^" + std::to_string(e[i]);
      }
      if (!mono.empty() && !latex) mono += " ";
      mono += factor;
    }
    terms.push_back({c, mono});
  }
  return latex ? join_terms(terms, latex_rational, "i", " ")
               : join_terms(terms, text_rational, "i", " ");
}

std::string render_casimir(const std::vector<GaussRat>& coeffs, bool latex) {
  std::vector<Term> terms;
  for (std::size_t m = coeffs.size(); m-- > 0;) {
    if (coeffs[m].is_zero()) continue;
    std::string mono;
    if (m > 0) {
      mono = latex ? "\\Delta" : "Δ";
      if (m > 1) mono += latex ? "^{" + std::to_string(m) + "}" : "^" + std::to_string(m);
    }
    terms.push_back({coeffs[m], mono});
  }
  return latex ? join_terms(terms, latex_rational, "i", " ")
               : join_terms(terms, text_rational, "i", " ");
}

}  // namespace

std::string to_text(const SymPoly& p) { return render(p, "E", false); }
std::string to_latex(const SymPoly& p) { return render(p, "E", true); }
std::string to_text(const UEAElem& x) { return render(x, "Ê", false); }
std::string to_latex(const UEAElem& x) { return render(x, "\\hat{E}", true); }

std::string casimir_polynomial_text(const std::vector<GaussRat>& coeffs) {
  return render_casimir(coeffs, false);
}

std::string casimir_polynomial_latex(const std::vector<GaussRat>& coeffs) {
  return render_casimir(coeffs, true);
}

std::string to_text(const Series& s) {
  std::vector<Term> terms;
  for (std::size_t n = 0; n < s.order(); ++n) {
    if (s[n].is_zero()) continue;
    std::string mono = n == 0 ? "" : (n == 1 ? "u" : "u^" + std::to_string(n));
    terms.push_back({s[n], mono});
  }
  std::string body = join_terms(terms, text_rational, "i", " ");
  return body + " + O(u^" + std::to_string(s.order()) + ")";
}

std::string to_latex(const Series& s) {
  std::vector<Term> terms;
  for (std::size_t n = 0; n < s.order(); ++n) {
    if (s[n].is_zero()) continue;
    std::string mono = n == 0 ? "" : (n == 1 ? "u" : "u^{" + std::to_string(n) + "}");
    terms.push_back({s[n], mono});
  }
  std::string body = join_terms(terms, latex_rational, "i", " ");
  return body + " + O(u^{" + std::to_string(s.order()) + "})";
}

std::string to_text(const Mat2& m) {
  return "[[" + to_display(m(0, 0)) + ", " + to_display(m(0, 1)) + "], [" +
         to_display(m(1, 0)) + ", " + to_display(m(1, 1)) + "]]";
}

std::string to_latex(const Mat2& m) {
  auto cell = [&](std::size_t r, std::size_t c) {
    return join_terms({{m(r, c), ""}}, latex_rational, "i", " ");
  };
  return "\\begin{pmatrix} " + cell(0, 0) + " & " + cell(0, 1) + " \\\\ " + cell(1, 0) +
         " & " + cell(1, 1) + " \\end{pmatrix}";
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << to_text(s); }
std::ostream& operator<<(std::ostream& os, const SymPoly& p) { return os << to_text(p); }
std::ostream& operator<<(std::ostream& os, const UEAElem& x) { return os << to_text(x); }
std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << to_text(m); }

}  // namespace duflo
