#include "poslab/cli.hpp"

#include "poslab/error.hpp"
#include "poslab/json_io.hpp"
#include "poslab/mehler.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace poslab::cli {

int float_digits() {
  const char* env = std::getenv("POSLAB_PRECISION");
  if (env == nullptr || *env == '\0') return 17;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 50) {
    throw InvalidArgument("POSLAB_PRECISION must be an integer in [1, 50], got '" + std::string(env) + "'");
  }
  return static_cast<int>(v);
}

namespace {

struct Options {
  std::string seq;
  std::vector<std::string> inputs;
  std::string out_path;
  std::string rho = "1/2";
  std::string grid;
  int order = -1;
  bool json = false;
  bool text = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path, std::string("invalid JSON: ") + e.what());
  }
}

// Parses a file with one of the JSON readers; errors name the file, then the JSON path.
template <typename Reader>
auto read_document(const std::string& file, Reader reader) {
  const Json j = read_json_file(file);
  try {
    return reader(j, "$");
  } catch (const SchemaError& e) {
    throw SchemaError(file, e.what());
  }
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(parse_rational(item));
  if (grid.empty()) throw InvalidArgument("empty grid");
  return grid;
}

void require_order(const Options& opt, const char* command) {
  if (opt.order < 0) throw InvalidArgument(std::string(command) + " needs --order");
}

MomentSequence input_sequence(const Options& opt, std::size_t length) {
  if (!opt.seq.empty() && !opt.inputs.empty()) throw InvalidArgument("give either --seq or --in, not both");
  if (!opt.seq.empty()) return builtin(opt.seq, length);
  if (opt.inputs.size() != 1) throw InvalidArgument("expected --seq or a single --in file");
  return read_document(opt.inputs.front(), moment_sequence_from_json);
}

std::string join(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + format_rational(values[i]);
  return s;
}

void write_pm_text(std::ostream& os, const PmReport& r) {
  os << "hankel determinants: " << join(r.hankel_dets) << "\n";
  os << "shifted determinants: " << join(r.shifted_dets) << "\n";
  os << "pm to order: " << r.pm_order << " of " << r.max_order << "\n";
  os << "strictly positive: " << (r.strictly_positive ? "yes" : "no") << "\n";
  os << "support in [0,inf): " << (r.nonneg_support ? "consistent" : "no") << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
}

// A command produces its exit code plus both renderings of its report.
struct Outcome {
  int code = kSuccess;
  Json json;
  std::string text;
};

Outcome check_pm(const Options& opt) {
  require_order(opt, "check-pm");
  const MomentSequence m = input_sequence(opt, 2 * static_cast<std::size_t>(opt.order) + 2);
  const PmReport r = is_pm(m, opt.order);
  std::ostringstream os;
  os << "sequence: " << (m.label().empty() ? "(unnamed)" : m.label()) << "\n";
  write_pm_text(os, r);
  Json j = to_json(r);
  j["sequence"] = to_json(m);
  return {r.is_pm() ? kSuccess : kRefuted, std::move(j), os.str()};
}

Outcome build_basis(const Options& opt) {
  require_order(opt, "build-basis");
  const MomentSequence m = input_sequence(opt, 2 * static_cast<std::size_t>(opt.order) + 1);
  const OrthoBasis b = opoly_from_moments(m, opt.order);
  std::ostringstream os;
  for (int n = 0; n <= b.order(); ++n) {
    os << "p_" << n << " = " << b.poly(n).str() << "    norm " << format_rational(b.norms()[static_cast<std::size_t>(n)])
       << "\n";
  }
  for (std::size_t n = 0; n < b.recurrence().size(); ++n) {
    const auto& t = b.recurrence()[n];
    os << "(A,B,C)_" << n << " = (" << t.a << ", " << t.b << ", " << t.c << ")\n";
  }
  if (!b.status().empty()) os << "status: " << b.status() << "\n";
  return {kSuccess, to_json(b), os.str()};
}

Outcome connect(const Options& opt) {
  if (opt.inputs.size() != 2) throw InvalidArgument("connect needs --in FROM --in TO");
  const OrthoBasis from = read_document(opt.inputs[0], ortho_basis_from_json);
  const OrthoBasis to = read_document(opt.inputs[1], ortho_basis_from_json);
  const ConnectionMatrix c = connection(from, to);
  std::ostringstream os;
  for (int n = 0; n <= c.order(); ++n) {
    os << "gamma[" << n << "] =";
    for (int j = 0; j <= n; ++j) os << " " << c.gamma(n, j);
    os << "\n";
  }
  return {kSuccess, to_json(c), os.str()};
}

Outcome certify(const Options& opt, int digits) {
  require_order(opt, "certify");
  if (opt.inputs.size() != 1) throw InvalidArgument("certify needs a single --in series file");
  const SeriesSpec spec = read_document(opt.inputs.front(), series_spec_from_json);
  const PositivityCertificate cert = certify_positive(spec, opt.order);
  std::ostringstream os;
  os << "verdict: " << to_string(cert.verdict) << " at order " << cert.verdict_order << "\n";
  os << "recovered moments: " << join(cert.recovered_moments.values()) << "\n";
  write_pm_text(os, cert.pm_report);
  if (!cert.rm_partials.empty()) os << "RM partial sum: " << format_real(cert.rm_partials.back(), digits) << "\n";
  for (const auto& n : cert.notes) os << "note: " << n << "\n";
  return {cert.verdict == Verdict::refuted ? kRefuted : kSuccess, to_json(cert, digits), os.str()};
}

Outcome lancaster(const Options& opt, int digits) {
  require_order(opt, "lancaster");
  if (opt.inputs.size() != 1) throw InvalidArgument("lancaster needs a single --in problem file");
  LancasterInput input = read_document(opt.inputs.front(), lancaster_input_from_json);
  if (!opt.grid.empty()) input.grid_a = input.grid_b = parse_grid(opt.grid);
  const LancasterReport r = lancaster_check(input.problem, input.grid_a, input.grid_b, opt.order);
  std::ostringstream os;
  os << "verdict: " << to_string(r.verdict) << " (tested order " << r.tested_order << ")\n";
  for (std::size_t n = 0; n < r.moment_polys.ma.size() && n <= 4; ++n) {
    os << "m" << n << "^(a)(y) = " << r.moment_polys.ma[n].rational().str("y") << "\n";
  }
  auto side = [&](const char* name, const std::vector<GridVerdict>& grid) {
    for (const auto& g : grid) {
      os << name << " at " << format_rational(g.point) << ": dets " << join(g.pm.hankel_dets) << "\n";
    }
  };
  side("m^(a)", r.grid_a);
  side("m^(b)", r.grid_b);
  os << "sum c_n^2 through n=" << r.corollary.sum_c2_partials.size() - 1 << ": "
     << format_rational(r.corollary.sum_c2_partials.back()) << "\n";
  if (r.corollary.origin_sum.applicable) {
    os << "origin sum: " << format_real(r.corollary.origin_sum.value, digits) << "\n";
  }
  for (const auto& n : r.corollary.notes) os << "note: " << n << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return {r.verdict == Verdict::refuted ? kRefuted : kSuccess, to_json(r, digits), os.str()};
}

Outcome mehler_demo(const Options& opt) {
  const int order = opt.order < 0 ? 10 : opt.order;
  const auto results = run_mehler_battery(parse_rational(opt.rho), order);
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
  }
  return {all ? kSuccess : kRefuted, to_json(results), os.str()};
}

Outcome list_catalog(const Options& opt) {
  const std::size_t length = opt.order < 0 ? 6 : static_cast<std::size_t>(opt.order) + 1;
  Json j = Json::array();
  std::ostringstream os;
  for (const auto& e : catalog()) {
    const std::string example = e.parameter.empty() ? e.key : e.key + (e.key == "geometric" ? ":2" : ":1");
    const MomentSequence m = builtin(example, length);
    os << e.key << (e.parameter.empty() ? "" : "(" + e.parameter + ")") << ": " << e.formula << "\n    " << example
       << ": " << join(m.values()) << "\n";
    j.push_back(Json{{"key", e.key}, {"formula", e.formula}, {"parameter", e.parameter},
                     {"example", to_json(m)}});
  }
  return {kSuccess, std::move(j), os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact positivity tests for orthogonal series and Lancaster expansions", "poslab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--out", opt.out_path, "Write the report to this file");
  app.add_flag("--json", opt.json, "Report as JSON");
  app.add_flag("--text", opt.text, "Report as text");

  auto add_order = [&](CLI::App* sub, const char* help) { sub->add_option("--order", opt.order, help); };
  auto add_in = [&](CLI::App* sub, const char* help) { sub->add_option("--in", opt.inputs, help); };

  auto* pm = app.add_subcommand("check-pm", "Hankel positivity test of a moment sequence");
  pm->add_option("--seq", opt.seq, "Catalog sequence, e.g. catalan or geometric:2");
  add_in(pm, "Moment sequence JSON file");
  add_order(pm, "Highest Hankel order tested");

  auto* bb = app.add_subcommand("build-basis", "Monic orthogonal polynomials from moments");
  bb->add_option("--seq", opt.seq, "Catalog sequence");
  add_in(bb, "Moment sequence JSON file");
  add_order(bb, "Highest polynomial degree");

  auto* cn = app.add_subcommand("connect", "Connection coefficients between two bases");
  add_in(cn, "Basis JSON files: --in FROM --in TO");

  auto* ce = app.add_subcommand("certify", "Positivity certificate for sum c_n p_n");
  add_in(ce, "Series JSON file {basis, coeffs}");
  add_order(ce, "Hankel order tested on the recovered moments");

  auto* la = app.add_subcommand("lancaster", "Positivity of a bivariate Lancaster expansion");
  add_in(la, "Problem JSON file");
  add_order(la, "Hankel order tested at each grid point");
  la->add_option("--grid", opt.grid, "Comma-separated rational grid used on both sides");

  auto* md = app.add_subcommand("mehler-demo", "Hermite/Mehler reference battery");
  md->add_option("--rho", opt.rho, "Correlation as p/q");
  add_order(md, "Highest order used by the identities");

  auto* ca = app.add_subcommand("catalog", "List builtin moment sequences");
  add_order(ca, "Highest index shown");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const int digits = float_digits();
    Outcome outcome;
    if (*pm) outcome = check_pm(opt);
    else if (*bb) outcome = build_basis(opt);
    else if (*cn) outcome = connect(opt);
    else if (*ce) outcome = certify(opt, digits);
    else if (*la) outcome = lancaster(opt, digits);
    else if (*md) outcome = mehler_demo(opt);
    else outcome = list_catalog(opt);

    const bool as_json = opt.json || (!opt.out_path.empty() && !opt.text);
    const std::string body = as_json ? outcome.json.dump(2) + "\n" : outcome.text;
    if (opt.out_path.empty()) {
      out << body;
    } else {
      std::ofstream file(opt.out_path);
      if (!file) throw SchemaError(opt.out_path, "cannot write output file");
      file << body;
    }
    return outcome.code;
  } catch (const InsufficientMoments& e) {
    err << "error: " << e.what() << "\n";
    return kInsufficientOrder;
  } catch (const DegenerateMeasure& e) {
    err << "refuted: " << e.what() << "\n";
    return kRefuted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace poslab::cli
