#include "signlap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace signlap::io {

namespace {

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string as_id(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string vertex id");
  return j.get<std::string>();
}

double as_number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

int as_sign(const json& j) {
  const double s = as_number(j, "sign");
  if (s != 1.0 && s != -1.0) throw InputError("sign must be exactly 1 or -1");
  return static_cast<int>(s);
}

}  // namespace

SignedGraph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  const json& edges = field(doc, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array");

  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const json& e : edges) {
    if (!e.is_object()) throw InputError("each edge must be an object");
    EdgeSpec s;
    s.u = as_id(field(e, "u"), "u");
    s.v = as_id(field(e, "v"), "v");
    s.weight = e.contains("weight") ? as_number(e["weight"], "weight") : 1.0;
    s.sign = e.contains("sign") ? as_sign(e["sign"]) : 1;
    specs.push_back(std::move(s));
  }

  if (!doc.contains("vertices")) return SignedGraph::build(specs);
  const json& vs = doc["vertices"];
  if (!vs.is_array()) throw InputError("\"vertices\" must be an array");
  std::vector<VertexId> ids;
  for (const json& v : vs) ids.push_back(as_id(v, "vertex"));
  return SignedGraph::build(std::move(ids), specs);
}

SignedGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return graph_from_json(doc);
}

json graph_to_json(const SignedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edge_specs()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}, {"sign", e.sign}});
  }
  return {{"vertices", g.vertex_ids()}, {"edges", std::move(edges)}};
}

json spectrum_to_json(const Spectrum& s, double tol) {
  return {{"eigenvalues", s.eigenvalues},
          {"lambda_min", s.min()},
          {"lambda_max", s.max()},
          {"symmetric", is_spectrum_symmetric(s, tol)},
          {"tol", tol}};
}

json switching_to_json(const SignedGraph& g, const SwitchingFunction& theta) {
  json out = json::object();
  for (const auto& [id, s] : theta.to_map(g)) out[id] = s;
  return out;
}

json certificate_to_json(const SignedGraph& g, const SymmetryCertificate& cert) {
  json perm = json::object();
  for (const auto& [x, y] : cert.perm.to_map(g, g)) perm[x] = y;
  return {{"theta", switching_to_json(g, cert.theta)}, {"perm", std::move(perm)}};
}

SymmetryCertificate certificate_from_json(const SignedGraph& g, const json& doc) {
  if (!doc.is_object()) throw InputError("certificate must be a JSON object");
  const json& th = field(doc, "theta");
  const json& pm = field(doc, "perm");
  if (!th.is_object() || !pm.is_object()) throw InputError("\"theta\" and \"perm\" must be objects");
  std::map<VertexId, int> labels;
  for (const auto& [id, s] : th.items()) labels[id] = as_sign(s);
  std::map<VertexId, VertexId> mapping;
  for (const auto& [id, y] : pm.items()) mapping[id] = as_id(y, "perm image");
  return {SwitchingFunction::from_map(g, labels), VertexBijection::from_map(g, g, mapping)};
}

Vector vector_from_json(const SignedGraph& g, const json& doc) {
  Vector out(g.size(), 0.0);
  if (doc.is_array()) {
    if (doc.size() != g.size()) throw InputError("vector length does not match the vertex count");
    for (std::size_t i = 0; i < doc.size(); ++i) out[i] = as_number(doc[i], "vector entry");
  } else if (doc.is_object()) {
    for (const auto& [id, x] : doc.items()) out[g.index_of(id)] = as_number(x, "vector entry");
  } else {
    throw InputError("vector must be a JSON array or object");
  }
  for (double x : out)
    if (!std::isfinite(x)) throw InputError("vector entries must be finite");
  return out;
}

json vector_to_json(const SignedGraph& g, const Vector& v) {
  json out = json::object();
  for (std::size_t x = 0; x < v.size(); ++x) out[g.id(x)] = v[x];
  return out;
}

json periodic_to_json(const SignedGraph& g, const PeriodicSolution& sol) {
  return {{"lambda", sol.lambda}, {"u", vector_to_json(g, sol.u)}, {"v", vector_to_json(g, sol.v)}};
}

json motif_report_to_json(const MotifReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"eigenvalue", c.eigenvalue}, {"spectrum_distance", c.spectrum_distance}, {"residual", c.residual}});
  }
  return {{"passed", r.passed},
          {"tol", r.tol},
          {"dirichlet", std::move(checks)},
          {"replicated_eigenvalues", r.replicated_spectrum.eigenvalues}};
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const SignedGraph& g, const HeatTrajectory& t) {
  out << "step";
  for (const auto& id : g.vertex_ids()) out << ',' << id;
  out << '\n';
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    out << k;
    for (double x : t.states[k]) out << ',' << format_double(x);
    out << '\n';
  }
}

json trajectory_to_json(const SignedGraph& g, const HeatTrajectory& t) {
  return {{"vertices", g.vertex_ids()}, {"states", t.states}};
}

}  // namespace signlap::io
