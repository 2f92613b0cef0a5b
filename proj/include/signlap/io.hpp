#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "signlap/heat.hpp"
#include "signlap/motif.hpp"
#include "signlap/symmetry.hpp"

namespace signlap::io {

using nlohmann::json;

/// Malformed document: bad JSON, missing fields, wrong types.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph document:
//   {"vertices": ["a", ...], "edges": [{"u": "a", "v": "b", "weight": 1.0, "sign": -1}, ...]}
// "vertices" is optional; without it vertices are ordered by id.
SignedGraph graph_from_json(const json& doc);
SignedGraph read_graph(const std::string& path);
json graph_to_json(const SignedGraph& g);

/// {"eigenvalues": [...], "lambda_min", "lambda_max", "symmetric", "tol"}
json spectrum_to_json(const Spectrum& s, double tol);

/// {"theta": {"a": 1, ...}, "perm": {"a": "c", ...}}
json certificate_to_json(const SignedGraph& g, const SymmetryCertificate& cert);
SymmetryCertificate certificate_from_json(const SignedGraph& g, const json& doc);

json switching_to_json(const SignedGraph& g, const SwitchingFunction& theta);

/// Either an array in vertex order or an object keyed by vertex id (missing
/// ids are zero).
Vector vector_from_json(const SignedGraph& g, const json& doc);
json vector_to_json(const SignedGraph& g, const Vector& v);

json periodic_to_json(const SignedGraph& g, const PeriodicSolution& sol);
json motif_report_to_json(const MotifReport& r);

/// Header `step,<ids>`; one row per state, 17 significant digits.
void write_trajectory_csv(std::ostream& out, const SignedGraph& g, const HeatTrajectory& t);
json trajectory_to_json(const SignedGraph& g, const HeatTrajectory& t);

/// printf("%.17g"), which round-trips every double.
std::string format_double(double x);

}  // namespace signlap::io
