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

#include "duflo/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "duflo/error.hpp"
#include "duflo/expmap/intertwiner.hpp"
#include "duflo/expmap/quantized.hpp"
#include "duflo/expmap/skein.hpp"
#include "duflo/io/expr.hpp"
#include "duflo/io/format.hpp"
#include "duflo/io/json.hpp"
#include "duflo/numeric/bernoulli.hpp"
#include "duflo/quantmaps/quantize.hpp"
#include "duflo/rep/spin_half.hpp"
#include "duflo/uea/pbw.hpp"
#include "duflo/verify/acceptance.hpp"

namespace duflo::cli {
namespace {

enum class Format { Text, Latex, Json };

Format parse_format(const std::string& name) {
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  return Format::Text;
}

std::vector<std::string> map_names() {
  std::vector<std::string> out;
  for (MapKind k : kAllMapKinds) out.emplace_back(to_string(k));
  return out;
}

const std::vector<std::string> kFormatNames{"text", "latex", "json"};

std::optional<std::vector<GaussRat>> casimir_coefficients(const UEAElem& x) {
  try {
    return center_decompose(x);
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct QuantizeArgs {
  std::string map;
  std::string expr;
  std::string rep;
  std::string format = "text";
};

void run_quantize(const QuantizeArgs& a, std::ostream& out) {
  const Expr tree = parse_expr(a.expr);
  const SymPoly input = lower(tree);
  const MapKind map = parse_map_kind(a.map);
  const UEAElem image = q_extended(map, input);
  const auto casimir = casimir_coefficients(image);
  std::optional<Mat2> rep;
  if (a.rep == "half") rep = rep_half(image);

  switch (parse_format(a.format)) {
    case Format::Json: {
      Json j;
      j["map"] = a.map;
      j["expr"] = print_expr(tree);
      j["input"] = to_json(input);
      j["image"] = to_json(image);
      if (casimir) {
        Json c = Json::array();
        for (const auto& z : *casimir) c.push_back(to_json(z));
        j["casimir"] = c;
      } else {
        j["casimir"] = nullptr;
      }
      if (rep) j["rep_half"] = to_json(*rep);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Latex:
      out << to_latex(image) << '\n';
      if (casimir) out << casimir_polynomial_latex(*casimir) << '\n';
      if (rep) out << to_latex(*rep) << '\n';
      break;
    case Format::Text:
      out << to_text(image) << '\n';
      if (casimir) out << casimir_polynomial_text(*casimir) << '\n';
      if (rep) out << to_text(*rep) << '\n';
      break;
  }
}

struct ExpmapArgs {
  std::string map;
  std::size_t order = 0;
  std::string basis;
  std::string format = "json";
};

void run_expmap(const ExpmapArgs& a, std::ostream& out) {
  const Mat4Series m = quantized_exp(parse_map_kind(a.map), a.order);
  std::string first = "c1";
  std::string second = "c2";
  std::pair<Series, Series> coeffs;
  if (a.basis == "pauli") {
    const PauliDecomposition d = decompose_pauli(m);
    coeffs = {d.alpha, d.beta};
    first = "alpha";
    second = "beta";
  } else {
    coeffs = to_intertwiner(m, parse_intertwiner_basis(a.basis));
  }

  switch (parse_format(a.format)) {
    case Format::Json: {
      Json j;
      j["map"] = a.map;
      j["order"] = a.order;
      j["basis"] = a.basis;
      j[first] = to_json(coeffs.first);
      j[second] = to_json(coeffs.second);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Latex:
      out << first << " = " << to_latex(coeffs.first) << '\n';
      out << second << " = " << to_latex(coeffs.second) << '\n';
      break;
    case Format::Text:
      out << first << " = " << to_text(coeffs.first) << '\n';
      out << second << " = " << to_text(coeffs.second) << '\n';
      break;
  }
}

void run_skein(MapKind map, std::size_t order, Format format, std::ostream& out) {
  const SkeinReport r = kauffman_check(map, order);
  switch (format) {
    case Format::Json:
      out << to_json(r).dump(2) << '\n';
      break;
    case Format::Latex:
    case Format::Text: {
      auto show = [&](const Series& s) { return format == Format::Text ? to_text(s) : to_latex(s); };
      out << "c1 = " << show(r.c1) << '\n';
      out << "c2 = " << show(r.c2) << '\n';
      out << "c1 c2 = " << show(r.product_check) << '\n';
      out << "kauffman: " << (r.passes_kauffman ? "pass" : "fail") << '\n';
      if (r.a_series) out << "A = " << show(*r.a_series) << '\n';
      break;
    }
  }
}

int run_verify(const std::string& suite, std::ostream& out) {
  const auto results = run_suite(parse_suite(suite));
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.title << "  [" << r.detail << "]\n";
  }
  out << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Duflo-map engine for su(2)", "duflo"};
  app.require_subcommand(1);
  const auto kinds = map_names();

  QuantizeArgs qa;
  auto* quantize = app.add_subcommand("quantize", "Quantize a polynomial in S(su(2))");
  quantize->add_option("--map", qa.map, "Quantization map")->required()->check(CLI::IsMember(kinds));
  quantize->add_option("--expr", qa.expr, "Polynomial in E1, E2, E3 and norm2")->required();
  quantize->add_option("--rep", qa.rep, "Also evaluate in a representation")->check(CLI::IsMember({"half"}));
  quantize->add_option("--format", qa.format, "Output format")->check(CLI::IsMember(kFormatNames));

  ExpmapArgs ea;
  auto* expmap = app.add_subcommand("expmap", "Quantized exponential in spin 1/2 x spin 1/2");
  expmap->add_option("--map", ea.map, "Quantization map")->required()->check(CLI::IsMember(kinds));
  expmap->add_option("--order", ea.order, "Number of series coefficients")->required()->check(CLI::Range(1, 64));
  expmap->add_option("--basis", ea.basis, "Decomposition basis")
      ->required()
      ->check(CLI::IsMember({"pauli", "epsilon", "swap"}));
  expmap->add_option("--format", ea.format, "Output format")->check(CLI::IsMember(kFormatNames));

  std::string skein_map;
  std::size_t skein_order = 0;
  std::string skein_format = "json";
  auto* skein = app.add_subcommand("skein", "Kauffman bracket skein check");
  skein->add_option("--map", skein_map, "Quantization map")->required()->check(CLI::IsMember(kinds));
  skein->add_option("--order", skein_order, "Number of series coefficients")->required()->check(CLI::Range(4, 64));
  skein->add_option("--format", skein_format, "Output format")->check(CLI::IsMember(kFormatNames));

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the exact acceptance checks");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"symmetrization", "duflo", "expmap", "parser", "all"}));

  unsigned bernoulli_n = 0;
  std::string bernoulli_kind = "first";
  auto* bern = app.add_subcommand("bernoulli", "Print the Bernoulli number B_N");
  bern->add_option("N", bernoulli_n, "Index")->required();
  bern->add_option("--kind", bernoulli_kind, "B_1 convention")->check(CLI::IsMember({"first", "second"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*quantize) {
      run_quantize(qa, out);
    } else if (*expmap) {
      run_expmap(ea, out);
    } else if (*skein) {
      run_skein(parse_map_kind(skein_map), skein_order, parse_format(skein_format), out);
    } else if (*verify) {
      return run_verify(suite, out);
    } else if (*bern) {
      const auto kind = bernoulli_kind == "second" ? BernoulliKind::Second : BernoulliKind::First;
      out << to_display(bernoulli(bernoulli_n, kind)) << '\n';
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace duflo::cli
