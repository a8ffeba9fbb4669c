#ifndef POSLAB_JSON_IO_HPP
#define POSLAB_JSON_IO_HPP

// JSON documents for every value type. Exact quantities are written as
// "numerator/denominator" strings; approximate diagnostics as decimal
// strings with a caller-chosen number of significant digits. Readers throw
// SchemaError naming the JSON path of the first offending field.

#include "poslab/lancaster.hpp"
#include "poslab/mehler.hpp"
#include "poslab/momentlab.hpp"
#include "poslab/orthopoly.hpp"
#include "poslab/positivity.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace poslab {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);
std::vector<Rational> rationals_from_json(const Json& j, const std::string& path);

Json to_json(const MomentSequence& m);
MomentSequence moment_sequence_from_json(const Json& j, const std::string& path = "$");

Json to_json(const PmReport& r);

Json to_json(const OrthoBasis& b);
/// Accepts the full layout {"moments", "pi", "norms", "recurrence"} or one
/// of the shorthands {"family": "hermite", "order": N},
/// {"seq": "<catalog key>", "order": N}, {"moments": ..., "order": N}.
OrthoBasis ortho_basis_from_json(const Json& j, const std::string& path = "$");

Json to_json(const ConnectionMatrix& c);

/// {"basis": <basis>, "coeffs": [...]}
SeriesSpec series_spec_from_json(const Json& j, const std::string& path = "$");
Json to_json(const PositivityCertificate& c, int digits);

struct LancasterInput {
  LancasterProblem problem;
  std::vector<Rational> grid_a;
  std::vector<Rational> grid_b;
};

/// Missing grids default to default_grid().
LancasterInput lancaster_input_from_json(const Json& j, const std::string& path = "$");
Json to_json(const LancasterProblem& p, const std::vector<Rational>& grid_a, const std::vector<Rational>& grid_b);
Json to_json(const CorollaryChecks& c, int digits);
Json to_json(const LancasterReport& r, int digits);

Json to_json(const std::vector<CheckResult>& checks);

}  // namespace poslab

#endif  // POSLAB_JSON_IO_HPP
