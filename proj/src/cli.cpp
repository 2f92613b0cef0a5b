#include "signlap/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "signlap/io.hpp"

namespace signlap::cli {

namespace {

using io::json;

struct RunConfig {
  std::string input;
  double tol = kSpectrumTol;
  std::size_t steps = 10;
  SearchBudget budget;
  std::string format;  // empty: subcommand default
  std::string init;
  std::string omega;
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void require_json_format(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "json") {
    throw io::InputError("--format " + cfg.format + " is only available for the heat subcommand");
  }
}

json parse_json_arg(const std::string& text, const char* flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io::InputError(std::string(flag) + ": " + e.what());
  }
}

// A vertex id selects its indicator vector; anything else is read as JSON.
Vector initial_vector(const SignedGraph& g, const std::string& spec) {
  if (auto x = g.find(spec)) {
    Vector v(g.size(), 0.0);
    v[*x] = 1.0;
    return v;
  }
  return io::vector_from_json(g, parse_json_arg(spec, "--init"));
}

Motif motif_arg(const SignedGraph& g, const std::string& spec) {
  if (spec.empty()) throw io::InputError("--omega is required");
  json doc = parse_json_arg(spec, "--omega");
  if (!doc.is_array()) throw io::InputError("--omega must be a JSON list of vertex ids");
  std::vector<VertexId> ids;
  for (const json& v : doc) {
    if (!v.is_string()) throw io::InputError("--omega entries must be vertex id strings");
    ids.push_back(v.get<std::string>());
  }
  return Motif(g, ids);
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  emit(out, io::spectrum_to_json(spectrum(io::read_graph(cfg.input)), cfg.tol));
  return kOk;
}

int cmd_balance(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const SignedGraph g = io::read_graph(cfg.input);
  const BalanceClassification c = classify_balance(g);
  const char* label = c.balanced() && c.antibalanced() ? "balanced_and_antibalanced"
                      : c.balanced()                   ? "balanced"
                      : c.antibalanced()               ? "antibalanced"
                                                       : "neither";
  json doc = {{"balanced", c.balanced()},
              {"antibalanced", c.antibalanced()},
              {"classification", label},
              {"balancing_theta", nullptr},
              {"antibalancing_theta", nullptr}};
  if (c.balancing) doc["balancing_theta"] = io::switching_to_json(g, *c.balancing);
  if (c.antibalancing) doc["antibalancing_theta"] = io::switching_to_json(g, *c.antibalancing);
  emit(out, doc);
  return kOk;
}

int cmd_bipartite(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const SignedGraph g = io::read_graph(cfg.input);
  auto parts = is_bipartite(g);
  if (!parts) {
    emit(out, {{"bipartite", false}});
    return kNegative;
  }
  auto ids = [&](const std::vector<std::size_t>& xs) {
    std::vector<VertexId> v;
    for (std::size_t x : xs) v.push_back(g.id(x));
    return v;
  };
  emit(out, {{"bipartite", true},
             {"parts", json::array({ids(parts->first), ids(parts->second)})},
             {"theta", io::switching_to_json(g, *find_bipartite_switching(g))}});
  return kOk;
}

int cmd_certificate(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const SignedGraph g = io::read_graph(cfg.input);
  const CertificateSearch r = find_symmetry_certificate(g, cfg.budget);
  switch (r.status) {
    case SearchStatus::Found:
      emit(out, io::certificate_to_json(g, *r.certificate));
      return kOk;
    case SearchStatus::Absent:
      emit(out, {{"certificate", nullptr}, {"status", "absent"}});
      return kNegative;
    case SearchStatus::BudgetExceeded:
      emit(out, {{"certificate", nullptr},
                 {"status", "budget_exceeded"},
                 {"vertices", g.size()},
                 {"budget_vertices", cfg.budget.max_vertices}});
      return kBudgetExceeded;
  }
  return kInputError;
}

int cmd_heat(const RunConfig& cfg, std::ostream& out) {
  const SignedGraph g = io::read_graph(cfg.input);
  if (cfg.init.empty()) throw io::InputError("--init is required");
  const HeatTrajectory t = heat_simulate(g, initial_vector(g, cfg.init), cfg.steps);
  if (cfg.format.empty() || cfg.format == "csv") {
    io::write_trajectory_csv(out, g, t);
  } else {
    emit(out, io::trajectory_to_json(g, t));
  }
  return kOk;
}

int cmd_periodic(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const SignedGraph g = io::read_graph(cfg.input);
  if (!cfg.init.empty()) {
    auto sol = detect_periodic(g, initial_vector(g, cfg.init), cfg.tol);
    if (!sol) {
      emit(out, {{"periodic", false}});
      return kNegative;
    }
    json doc = io::periodic_to_json(g, *sol);
    doc["periodic"] = true;
    emit(out, doc);
    return kOk;
  }
  json solutions = json::array();
  Vector rates = symmetric_eigenvalue_pairs(spectrum(g), cfg.tol);
  for (const auto& sol : periodic_solutions(g, cfg.tol)) solutions.push_back(io::periodic_to_json(g, sol));
  emit(out, {{"decay_rates", rates}, {"solutions", std::move(solutions)}, {"tol", cfg.tol}});
  return rates.empty() ? kNegative : kOk;
}

int cmd_replicate(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const SignedGraph g = io::read_graph(cfg.input);
  emit(out, io::graph_to_json(replicate(g, motif_arg(g, cfg.omega))));
  return kOk;
}

int cmd_dirichlet(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const SignedGraph g = io::read_graph(cfg.input);
  const Motif omega = motif_arg(g, cfg.omega);
  emit(out, {{"omega", omega.ids()},
             {"matrix", dirichlet_laplacian(g, omega).rows()},
             {"eigenvalues", dirichlet_eigh(g, omega).eigenvalues}});
  return kOk;
}

int cmd_verify_motif(const RunConfig& cfg, std::ostream& out) {
  require_json_format(cfg);
  const SignedGraph g = io::read_graph(cfg.input);
  const MotifReport r = verify_motif_inclusion(g, motif_arg(g, cfg.omega), cfg.tol);
  emit(out, io::motif_report_to_json(r));
  return r.passed ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral analysis of signed weighted graphs", "signlap"};
  app.require_subcommand(1);

  RunConfig cfg;
  using Handler = int (*)(const RunConfig&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", cfg.input, "Graph JSON file")->required();
    sub->add_option("--tol", cfg.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    commands.emplace_back(sub, h);
    return sub;
  };

  add("spectrum", "Eigenvalues of the normalized signed Laplacian", cmd_spectrum);
  add("balance", "Balanced / antibalanced classification", cmd_balance);
  add("bipartite", "Bipartition and the switching with Γ^θ = -Γ", cmd_bipartite);
  auto* cert = add("certificate", "Search for a switching plus isomorphism Γ^θ ≅ -Γ", cmd_certificate);
  cert->add_option("--budget-vertices", cfg.budget.max_vertices, "Largest graph order to search");
  cert->add_option("--workers", cfg.budget.workers, "Search threads")->check(CLI::PositiveNumber);
  auto* heat = add("heat", "Simulate f_{n+1} = P f_n", cmd_heat);
  heat->add_option("--init", cfg.init, "Vertex id (indicator) or JSON vector");
  heat->add_option("--steps", cfg.steps, "Number of steps");
  auto* periodic = add("periodic", "Damped 2-periodic solutions", cmd_periodic);
  periodic->add_option("--init", cfg.init, "Candidate u: vertex id or JSON vector");
  for (const char* name : {"replicate", "dirichlet", "verify-motif"}) {
    Handler h = std::string(name) == "replicate"   ? cmd_replicate
                : std::string(name) == "dirichlet" ? cmd_dirichlet
                                                   : cmd_verify_motif;
    add(name, "Motif replication / Dirichlet Laplacian", h)
        ->add_option("--omega", cfg.omega, "JSON list of vertex ids");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    for (auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(cfg, out);
    }
  } catch (const std::invalid_argument& e) {  // GraphError, InputError, bad vectors
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace signlap::cli
