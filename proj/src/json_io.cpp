#include "poslab/json_io.hpp"

#include "poslab/error.hpp"

namespace poslab {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

bool bool_or(const Json& j, const std::string& key, bool fallback, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw SchemaError(path + "." + key, "expected a boolean");
  return it->get<bool>();
}

Json reals_to_json(const std::vector<Real>& values, int digits) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(format_real(v, digits));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(format_rational(v));
  return out;
}

Json polynomial_to_json(const Polynomial& p) { return rationals_to_json(p.coeffs()); }

}  // namespace

Json to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw SchemaError(path, "expected an exact rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw SchemaError(path, e.what());
  }
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// ---------------------------------------------------------------------------

Json to_json(const MomentSequence& m) { return Json{{"label", m.label()}, {"values", rationals_to_json(m.values())}}; }

MomentSequence moment_sequence_from_json(const Json& j, const std::string& path) {
  auto values = rationals_from_json(field(j, "values", path), path + ".values");
  if (values.empty()) throw SchemaError(path + ".values", "must not be empty");
  std::string label;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw SchemaError(path + ".label", "expected a string");
    label = it->get<std::string>();
  }
  return MomentSequence(std::move(values), std::move(label));
}

Json to_json(const PmReport& r) {
  return Json{{"max_order", r.max_order},
              {"hankel_dets", rationals_to_json(r.hankel_dets)},
              {"shifted_dets", rationals_to_json(r.shifted_dets)},
              {"is_pm_to_order", r.pm_order},
              {"strictly_positive", r.strictly_positive},
              {"nonneg_support", r.nonneg_support},
              {"notes", r.notes}};
}

// ---------------------------------------------------------------------------

Json to_json(const OrthoBasis& b) {
  Json pi = Json::array();
  for (int n = 0; n <= b.order(); ++n) {
    Json row = Json::array();
    for (int j = 0; j <= n; ++j) row.push_back(format_rational(b.pi()(n, j)));
    pi.push_back(std::move(row));
  }
  Json rec = Json::array();
  for (const auto& t : b.recurrence()) {
    rec.push_back(Json::array({format_rational(t.a), format_rational(t.b), format_rational(t.c)}));
  }
  Json out{{"moments", to_json(b.source_moments())},
           {"pi", std::move(pi)},
           {"norms", rationals_to_json(b.norms())},
           {"recurrence", std::move(rec)}};
  if (!b.status().empty()) out["status"] = b.status();
  return out;
}

namespace {

// Inside a basis the moments may also be given as a bare list.
MomentSequence basis_moments(const Json& j, const std::string& path) {
  if (j.is_array()) {
    auto values = rationals_from_json(j, path);
    if (values.empty()) throw SchemaError(path, "needs at least one moment");
    return MomentSequence(std::move(values));
  }
  return moment_sequence_from_json(j, path);
}

}  // namespace

OrthoBasis ortho_basis_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  try {
    if (j.contains("family")) {
      const Json& fam = j["family"];
      if (!fam.is_string() || fam.get<std::string>() != "hermite") {
        throw SchemaError(path + ".family", "only \"hermite\" is a builtin family");
      }
      return hermite(int_from_json(field(j, "order", path), path + ".order"));
    }
    if (!j.contains("pi")) {
      const int order = int_from_json(field(j, "order", path), path + ".order");
      if (order < 0) throw SchemaError(path + ".order", "must be nonnegative");
      if (j.contains("seq")) {
        if (!j["seq"].is_string()) throw SchemaError(path + ".seq", "expected a catalog key");
        return opoly_from_moments(builtin(j["seq"].get<std::string>(), 2 * static_cast<std::size_t>(order) + 1), order);
      }
      return opoly_from_moments(basis_moments(field(j, "moments", path), path + ".moments"), order);
    }
  } catch (const InvalidArgument& e) {
    throw SchemaError(path, e.what());
  }

  MomentSequence moments = basis_moments(field(j, "moments", path), path + ".moments");
  const Json& pi = array_at(field(j, "pi", path), path + ".pi");
  std::vector<Polynomial> polys;
  for (std::size_t n = 0; n < pi.size(); ++n) {
    const std::string row_path = path + ".pi[" + std::to_string(n) + "]";
    auto row = rationals_from_json(pi[n], row_path);
    if (row.size() != n + 1) throw SchemaError(row_path, "row " + std::to_string(n) + " needs " + std::to_string(n + 1) + " entries");
    if (row.back() == 0) throw SchemaError(row_path, "leading coefficient must be nonzero");
    polys.emplace_back(std::move(row));
    for (std::size_t k = 0; k < n && n + k <= static_cast<std::size_t>(moments.max_index()); ++k) {
      if (moment_inner(polys[n], polys[k], moments) != 0) {
        throw SchemaError(row_path, "not orthogonal to row " + std::to_string(k) + " under the moments");
      }
    }
  }
  auto norms_given = rationals_from_json(field(j, "norms", path), path + ".norms");
  if (norms_given.size() != polys.size()) throw SchemaError(path + ".norms", "needs one entry per row of pi");

  std::optional<OrthoBasis> basis;
  try {
    basis.emplace(std::move(polys), norms_given, std::move(moments));
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
  // Norms must agree with the moments wherever the moments reach.
  for (int n = 0; n <= basis->order(); ++n) {
    const auto& p = basis->poly(n);
    if (2 * n + 1 > static_cast<int>(basis->source_moments().size())) break;
    if (moment_inner(p, p, basis->source_moments()) != basis->norms()[static_cast<std::size_t>(n)]) {
      throw SchemaError(path + ".norms[" + std::to_string(n) + "]", "disagrees with the moment bilinear form");
    }
  }
  if (auto it = j.find("recurrence"); it != j.end()) {
    const Json& rec = array_at(*it, path + ".recurrence");
    if (rec.size() != basis->recurrence().size()) {
      throw SchemaError(path + ".recurrence", "expected " + std::to_string(basis->recurrence().size()) + " triples");
    }
    for (std::size_t n = 0; n < rec.size(); ++n) {
      const std::string tp = path + ".recurrence[" + std::to_string(n) + "]";
      auto t = rationals_from_json(rec[n], tp);
      if (t.size() != 3) throw SchemaError(tp, "expected [A, B, C]");
      if (RecurrenceTriple{t[0], t[1], t[2]} != basis->recurrence()[n]) {
        throw SchemaError(tp, "does not match the polynomials");
      }
    }
  }
  return std::move(*basis);
}

Json to_json(const ConnectionMatrix& c) {
  Json gamma = Json::array();
  Json gamma0 = Json::array();
  for (int n = 0; n <= c.order(); ++n) {
    Json row = Json::array();
    for (int j = 0; j <= n; ++j) row.push_back(format_rational(c.gamma(n, j)));
    gamma.push_back(std::move(row));
    gamma0.push_back(format_rational(c.gamma0(n)));
  }
  return Json{{"from", c.from_label}, {"to", c.to_label}, {"gamma", std::move(gamma)}, {"gamma0", std::move(gamma0)}};
}

// ---------------------------------------------------------------------------

SeriesSpec series_spec_from_json(const Json& j, const std::string& path) {
  OrthoBasis basis = ortho_basis_from_json(field(j, "basis", path), path + ".basis");
  auto coeffs = rationals_from_json(field(j, "coeffs", path), path + ".coeffs");
  if (coeffs.empty()) throw SchemaError(path + ".coeffs", "must not be empty");
  if (static_cast<int>(coeffs.size()) > basis.order() + 1) {
    throw SchemaError(path + ".coeffs", "more coefficients than basis orders (" + std::to_string(basis.order() + 1) + ")");
  }
  return SeriesSpec(std::move(basis), std::move(coeffs));
}

Json to_json(const PositivityCertificate& c, int digits) {
  return Json{{"verdict", to_string(c.verdict)},
              {"verdict_order", c.verdict_order},
              {"recovered_moments", to_json(c.recovered_moments)},
              {"pm_report", to_json(c.pm_report)},
              {"rm_partials", reals_to_json(c.rm_partials, digits)},
              {"notes", c.notes}};
}

// ---------------------------------------------------------------------------

LancasterInput lancaster_input_from_json(const Json& j, const std::string& path) {
  OrthoBasis alpha = ortho_basis_from_json(field(j, "alpha", path), path + ".alpha");
  OrthoBasis beta = ortho_basis_from_json(field(j, "beta", path), path + ".beta");
  auto coeffs = rationals_from_json(field(j, "coeffs", path), path + ".coeffs");
  if (coeffs.empty()) throw SchemaError(path + ".coeffs", "must not be empty");
  const int needed = static_cast<int>(coeffs.size()) - 1;
  if (alpha.order() < needed) throw SchemaError(path + ".alpha", "basis order below coefficient count");
  if (beta.order() < needed) throw SchemaError(path + ".beta", "basis order below coefficient count");

  SupportFlags flags;
  if (auto it = j.find("support_flags"); it != j.end()) {
    const std::string fp = path + ".support_flags";
    if (!it->is_object()) throw SchemaError(fp, "expected an object");
    flags.zero_in_supp_mu = bool_or(*it, "zero_in_supp_mu", false, fp);
    flags.mu_unbounded = bool_or(*it, "mu_unbounded", false, fp);
    flags.nu_unbounded = bool_or(*it, "nu_unbounded", false, fp);
    flags.same_marginals = bool_or(*it, "same_marginals", false, fp);
  }
  auto grid = [&](const char* key) {
    auto it = j.find(key);
    return it == j.end() ? default_grid() : rationals_from_json(*it, path + "." + key);
  };
  auto grid_a = grid("grid_a");
  auto grid_b = grid("grid_b");
  return LancasterInput{LancasterProblem(std::move(alpha), std::move(beta), std::move(coeffs), flags),
                        std::move(grid_a), std::move(grid_b)};
}

Json to_json(const LancasterProblem& p, const std::vector<Rational>& grid_a, const std::vector<Rational>& grid_b) {
  return Json{{"alpha", to_json(p.alpha)},
              {"beta", to_json(p.beta)},
              {"coeffs", rationals_to_json(p.coeffs)},
              {"grid_a", rationals_to_json(grid_a)},
              {"grid_b", rationals_to_json(grid_b)},
              {"support_flags",
               {{"zero_in_supp_mu", p.support.zero_in_supp_mu},
                {"mu_unbounded", p.support.mu_unbounded},
                {"nu_unbounded", p.support.nu_unbounded},
                {"same_marginals", p.support.same_marginals}}}};
}

Json to_json(const CorollaryChecks& c, int digits) {
  Json out{{"sum_c2_partials", rationals_to_json(c.sum_c2_partials)}, {"notes", c.notes}};
  if (c.origin_sum.applicable) {
    Json b{{"value", format_real(c.origin_sum.value, digits)}, {"sign", c.origin_sum.sign}};
    if (c.origin_sum.exact) b["exact"] = format_rational(*c.origin_sum.exact);
    out["origin_sum"] = std::move(b);
  }
  if (c.c_ratio_pm) out["c_ratio_pm"] = to_json(*c.c_ratio_pm);
  if (c.c_pm) out["c_pm"] = to_json(*c.c_pm);
  return out;
}

namespace {

Json surd_to_json(const SurdPolynomial& p) {
  if (p.is_rational()) return polynomial_to_json(p.rational());
  Json terms = Json::array();
  for (const auto& [tag, part] : p.terms()) {
    terms.push_back(Json{{"sqrt", format_rational(tag)}, {"coeffs", polynomial_to_json(part)}});
  }
  return terms;
}

Json grid_to_json(const std::vector<GridVerdict>& grid) {
  Json out = Json::array();
  for (const auto& g : grid) {
    out.push_back(Json{{"point", format_rational(g.point)}, {"moments", rationals_to_json(g.moments.values())},
                       {"pm", to_json(g.pm)}});
  }
  return out;
}

}  // namespace

Json to_json(const LancasterReport& r, int digits) {
  Json ma = Json::array();
  Json mb = Json::array();
  for (const auto& p : r.moment_polys.ma) ma.push_back(surd_to_json(p));
  for (const auto& p : r.moment_polys.mb) mb.push_back(surd_to_json(p));
  Json pc = Json::array();
  for (const auto& f : r.pc_check) pc.push_back(Json{{"n", f.n}, {"full_order", f.full_order}, {"diagonal", f.diagonal}});
  return Json{{"verdict", to_string(r.verdict)},
              {"tested_order", r.tested_order},
              {"moment_polys", {{"ma", std::move(ma)}, {"mb", std::move(mb)}}},
              {"grid_a", grid_to_json(r.grid_a)},
              {"grid_b", grid_to_json(r.grid_b)},
              {"corollary", to_json(r.corollary, digits)},
              {"pc_check", std::move(pc)},
              {"notes", r.notes}};
}

Json to_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

}  // namespace poslab
