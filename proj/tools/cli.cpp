#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "drg/error.hpp"
#include "drg/families.hpp"
#include "drg/generators.hpp"
#include "oracle.hpp"

namespace drg::cli {
namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Witness: return "witness";
    case Status::Error: return "error";
  }
  return "error";
}

CommandResult error_result(const std::string& message, const char* code = "Error") {
  CommandResult r;
  r.status = Status::Error;
  r.payload["code"] = code;
  r.payload["message"] = message;
  r.diagnostics.push_back(message);
  return r;
}

CommandResult witness_result(const NonRegularityWitness& w, const std::string& source) {
  CommandResult r;
  r.status = Status::Witness;
  r.payload["source"] = source;
  r.payload["witness"] = to_json(w);
  r.diagnostics.push_back(std::string("graph is not distance-regular: ") +
                          (w.kind == WitnessKind::NotRegular ? "NotRegular" : "NotDistanceRegular"));
  return r;
}

// Maps library exceptions onto error results.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_result(e.what(), std::string(to_string(e.code())).c_str());
  } catch (const std::exception& e) {
    return error_result(e.what());
  }
}

struct Resolved {
  IntersectionSequence is;
  std::optional<Graph> graph;
};

// Either a sequence or a ready-made result (witness) to return.
std::variant<Resolved, CommandResult> resolve(const SequenceSource& source) {
  if (source.array) return Resolved{parse_array(*source.array), std::nullopt};
  if (!source.graph) throw Error(ErrorCode::InvalidArgument, "need a graph source or --array");
  auto g = generators::load_source(*source.graph);
  auto cert = certify_distance_regular(g);
  if (auto* w = std::get_if<NonRegularityWitness>(&cert)) return witness_result(*w, *source.graph);
  return Resolved{std::get<IntersectionSequence>(std::move(cert)), std::move(g)};
}

std::uint64_t parse_count(const std::string& token, const std::string& whole) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size() || token.front() == '-') {
    throw Error(ErrorCode::InvalidArgument, "bad --array value '" + whole + "'");
  }
  return v;
}

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

void run_checks(const Graph& g, const IntersectionSequence& is, std::vector<Check>& checks) {
  const std::size_t n = g.vertex_count();
  const std::size_t d = is.diameter();
  auto add = [&](std::string name, const std::function<std::string()>& fn) {
    Check c{std::move(name), true, {}};
    try {
      c.detail = fn();
      c.passed = c.detail.empty();
    } catch (const Error& e) {
      c.passed = false;
      c.detail = e.what();
    }
    checks.push_back(std::move(c));
  };

  add("recurrence", [&]() -> std::string {
    const auto r = verify_recurrence(g, is);
    if (r.holds) return {};
    const auto& m = *r.mismatch;
    return "k=" + std::to_string(m.k) + " entry (" + std::to_string(m.i) + "," + std::to_string(m.j) +
           "): expected " + std::to_string(m.expected) + ", got " + std::to_string(m.actual);
  });
  add("recurrence_dense", [&]() -> std::string {
    return oracle::recurrence_holds(g, is) ? "" : "dense integer products disagree";
  });
  add("degree_isoscycle", [&]() -> std::string {
    const auto deg = degree_sequence(is);
    const auto iso = isoscycle_numbers(is);
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t k = 0; k <= d; ++k) {
        if (degree_k(g, v, k) != deg[k])
          return "deg_" + std::to_string(k) + " differs at vertex " + std::to_string(v);
        if (isoscycle_count(g, v, k) != iso[k])
          return "isosc_" + std::to_string(k) + " differs at vertex " + std::to_string(v);
      }
    return {};
  });
  add("basis_identity", [&]() -> std::string {
    oracle::first_kind_matrices(g, is, canonical_tau(is));
    return {};
  });
  add("minimal_polynomial", [&]() -> std::string {
    const double tau_star = canonical_tau(is);
    const double at_star = oracle::max_abs(oracle::matrix_poly_firstkind(g, is, tau_star));
    if (!(at_star < 1e-8)) return "max |P_{n+1}(A)| = " + std::to_string(at_star);
    const auto shifted = oracle::matrix_poly_firstkind(g, is, tau_star + 1.0);
    const auto top = oracle::normalized_distance_matrices(g).at(d);
    double diff = 0.0;
    for (std::size_t e = 0; e < shifted.data.size(); ++e)
      diff = std::max(diff, std::abs(shifted.data[e] + top.data[e]));
    if (!(diff < 1e-8)) return "P^(tau*+1)_{n+1}(A) + normalised A_n has max entry " + std::to_string(diff);
    return {};
  });
  add("spectrum_agreement", [&]() -> std::string {
    const auto mu = spectral_measure(is, n);
    const auto es = oracle::dense_symmetric_eigen(oracle::to_dense(oracle::dense_adjacency(g)));
    if (es.clusters.size() != mu.atoms.size()) {
      return "dense solver found " + std::to_string(es.clusters.size()) + " distinct eigenvalues, Jacobi " +
             std::to_string(mu.atoms.size());
    }
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
      if (!(std::abs(es.clusters[i].value - mu.atoms[i].lambda) < 1e-7) ||
          es.clusters[i].multiplicity != mu.atoms[i].multiplicity) {
        return "eigenvalue " + std::to_string(i) + " disagrees with the dense solver";
      }
    }
    return {};
  });
  add("weight_consistency", [&]() -> std::string {
    const double tau = canonical_tau(is);
    for (double lambda : eigenvalues(build_jacobi(is, tau))) atom_weight(is, tau, lambda);
    return {};
  });
  add("norm_bound", [&]() -> std::string {
    const auto deg = degree_sequence(is);
    const auto shells = oracle::dense_distance_matrices(g);
    for (std::size_t k = 0; k <= d; ++k) {
      const double norm = oracle::operator_norm(oracle::to_dense(shells[k]));
      const double bound = static_cast<double>(deg[k]);
      if (norm > bound * (1 + 1e-9) || std::abs(norm - bound) > 1e-6 * bound)
        return "|A_" + std::to_string(k) + "| = " + std::to_string(norm) + " vs deg " + std::to_string(deg[k]);
    }
    return {};
  });
}

Json flatten_pretty(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_pretty(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_pretty(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
  return j;
}

}  // namespace

Json CommandResult::to_json() const {
  Json j;
  j["status"] = status_name(status);
  j["payload"] = payload;
  j["diagnostics"] = diagnostics;
  return j;
}

int CommandResult::exit_code() const noexcept {
  switch (status) {
    case Status::Ok: return 0;
    case Status::Witness: return 2;
    case Status::Error: return 1;
  }
  return 1;
}

IntersectionSequence parse_array(const std::string& text) {
  std::vector<std::uint64_t> a, b;
  std::stringstream pairs(text);
  std::string item;
  while (std::getline(pairs, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::InvalidArgument, "bad --array pair '" + item + "'");
    a.push_back(parse_count(item.substr(0, comma), text));
    b.push_back(parse_count(item.substr(comma + 1), text));
  }
  return IntersectionSequence::from_arrays(std::move(a), std::move(b));
}

CommandResult cmd_certify(const std::string& source) {
  return guarded([&] {
    const auto g = generators::load_source(source);
    const auto cert = certify_distance_regular(g);
    if (const auto* w = std::get_if<NonRegularityWitness>(&cert)) return witness_result(*w, source);
    CommandResult r;
    r.payload = to_json(std::get<IntersectionSequence>(cert));
    r.payload["isosc_k"] = isoscycle_numbers(std::get<IntersectionSequence>(cert));
    r.payload["vertex_count"] = g.vertex_count();
    return r;
  });
}

CommandResult cmd_spectrum(const SequenceSource& source, TauChoice choice, std::optional<double> tol) {
  return guarded([&] {
    auto resolved = resolve(source);
    if (auto* r = std::get_if<CommandResult>(&resolved)) return *r;
    const auto& [is, graph] = std::get<Resolved>(resolved);
    const double tau_star = canonical_tau(is);
    const double tau = choice.tau.value_or(tau_star);
    const auto J = build_jacobi(is, tau);
    const double abs_tol =
        tol ? *tol * std::max(1.0, 0.5 * (gershgorin(J).hi - gershgorin(J).lo)) : default_tolerance(J);
    const auto values = eigenvalues(J, abs_tol);
    Json weights = Json::array();
    for (double lambda : values) weights.push_back(atom_weight(is, tau, lambda));

    CommandResult r;
    r.payload["tau"] = tau;
    r.payload["canonical"] = tau == tau_star;
    r.payload["eigenvalues"] = values;
    r.payload["weights"] = std::move(weights);
    if (graph && tau == tau_star) {
      Json mult = Json::array();
      for (const auto& atom : spectral_measure(is, graph->vertex_count()).atoms) mult.push_back(*atom.multiplicity);
      r.payload["multiplicities"] = std::move(mult);
    }
    return r;
  });
}

CommandResult cmd_verify(const std::string& source) {
  return guarded([&] {
    const auto g = generators::load_source(source);
    const auto cert = certify_distance_regular(g);
    if (const auto* w = std::get_if<NonRegularityWitness>(&cert)) {
      auto r = witness_result(*w, source);
      r.payload["stage"] = "certification";
      return r;
    }
    const auto& is = std::get<IntersectionSequence>(cert);
    std::vector<Check> checks;
    run_checks(g, is, checks);
    CommandResult r;
    r.payload["source"] = source;
    r.payload["sequence"] = to_json(is);
    Json list = Json::array();
    for (const auto& c : checks) {
      Json entry;
      entry["name"] = c.name;
      entry["passed"] = c.passed;
      if (!c.passed) {
        entry["detail"] = c.detail;
        r.status = Status::Witness;
        r.diagnostics.push_back(c.name + ": " + c.detail);
      }
      list.push_back(std::move(entry));
    }
    r.payload["checks"] = std::move(list);
    return r;
  });
}

CommandResult cmd_verify_batch(const std::vector<std::string>& sources, int jobs) {
  if (sources.size() == 1) return cmd_verify(sources.front());
  std::vector<CommandResult> results(sources.size());
  const auto count = static_cast<std::ptrdiff_t>(sources.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] = cmd_verify(sources[static_cast<std::size_t>(i)]);
  }
  CommandResult batch;
  Json inputs = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    Json entry;
    entry["source"] = sources[i];
    entry["result"] = results[i].to_json();
    inputs.push_back(std::move(entry));
    if (results[i].exit_code() == 1) batch.status = Status::Error;
    else if (results[i].exit_code() == 2 && batch.status == Status::Ok) batch.status = Status::Witness;
    for (const auto& d : results[i].diagnostics) batch.diagnostics.push_back(sources[i] + ": " + d);
  }
  batch.payload["inputs"] = std::move(inputs);
  return batch;
}

CommandResult cmd_moments(const std::string& family, std::size_t order, double quad_tol) {
  return guarded([&] {
    const auto gen = parse_family(family);
    CommandResult r;
    r.payload["family"] = gen.description();
    r.payload["order"] = order;
    std::vector<std::uint64_t> exact;
    for (std::size_t k = 0; k <= order; ++k) exact.push_back(moment(gen, k));
    r.payload["moments"] = exact;
    if (family.starts_with("tree:")) {
      Json quad = Json::array(), diff = Json::array();
      for (std::size_t k = 0; k <= order; ++k) {
        const double q = density_moment(gen.degree(), k, quad_tol);
        quad.push_back(q);
        diff.push_back(std::abs(q - static_cast<double>(exact[k])));
      }
      r.payload["quadrature"] = std::move(quad);
      r.payload["abs_diff"] = std::move(diff);
    }
    return r;
  });
}

CommandResult cmd_measure(const std::string& source, const std::optional<std::string>& plot_path) {
  return guarded([&] {
    const auto g = generators::load_source(source);
    const auto cert = certify_distance_regular(g);
    if (const auto* w = std::get_if<NonRegularityWitness>(&cert)) return witness_result(*w, source);
    const auto mu = spectral_measure(std::get<IntersectionSequence>(cert), g.vertex_count());
    CommandResult r;
    r.payload = to_json(mu);
    r.payload["weight_sum"] = mu.total_weight();
    if (plot_path) {
      std::ofstream out(*plot_path);
      if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write plot data to '" + *plot_path + "'");
      out << plot_table(mu);
      r.payload["plot_data"] = *plot_path;
    }
    return r;
  });
}

CommandResult cmd_interlace(const SequenceSource& source, double tau1, double tau2, double tol) {
  return guarded([&] {
    auto resolved = resolve(source);
    if (auto* r = std::get_if<CommandResult>(&resolved)) return *r;
    const auto& is = std::get<Resolved>(resolved).is;
    const bool ok = check_interlacing(is, tau1, tau2, tol);
    CommandResult r;
    r.payload["tau1"] = tau1;
    r.payload["tau2"] = tau2;
    r.payload["eigenvalues1"] = eigenvalues(build_jacobi(is, tau1));
    r.payload["eigenvalues2"] = eigenvalues(build_jacobi(is, tau2));
    r.payload["interlaced"] = ok;
    if (!ok) {
      r.status = Status::Witness;
      r.diagnostics.push_back("spectra are not strictly interlaced");
    }
    return r;
  });
}

CommandResult cmd_jacobi(const SequenceSource& source, TauChoice choice) {
  return guarded([&] {
    auto resolved = resolve(source);
    if (auto* r = std::get_if<CommandResult>(&resolved)) return *r;
    const auto& is = std::get<Resolved>(resolved).is;
    CommandResult r;
    r.payload = to_json(build_jacobi(is, choice.tau.value_or(canonical_tau(is))));
    return r;
  });
}

CommandResult cmd_jacobi_family(const std::string& family, std::size_t size) {
  return guarded([&] {
    CommandResult r;
    r.payload = to_json(truncated_jacobi(parse_family(family), size));
    return r;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-regular graph certification and Jacobi spectra"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  std::string source;
  std::optional<std::string> array;
  std::optional<double> tau;
  std::optional<double> tol;
  bool canonical = false;

  auto* certify = app.add_subcommand("certify", "Certify distance-regularity");
  certify->add_option("source", source, "Builtin graph name or edge-list file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and weights of J_tau");
  spectrum->add_option("source", source, "Builtin graph name or edge-list file");
  spectrum->add_option("--array", array, "Intersection pairs a1,b1;a2,b2;...");
  auto* tau_opt = spectrum->add_option("--tau", tau, "Boundary parameter");
  spectrum->add_flag("--canonical", canonical, "Use tau* = degree - a_d (default)")->excludes(tau_opt);
  spectrum->add_option("--tol", tol, "Bisection tolerance relative to the Gershgorin radius");

  std::vector<std::string> verify_sources;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run the invariant battery against the dense oracle");
  verify->add_option("sources", verify_sources, "Graph sources")->required();
  verify->add_option("--jobs", jobs, "Parallel workers for several sources")->check(CLI::PositiveNumber);

  std::string family;
  std::size_t order = 0;
  double quad_tol = 1e-8;
  auto* moments = app.add_subcommand("moments", "Exact moments of an infinite family");
  moments->add_option("--family", family, "tree:n or custom:a1,b1;...;period=p")->required();
  moments->add_option("--order", order, "Highest moment order")->required();
  moments->add_option("--quad-tol", quad_tol, "Quadrature tolerance for tree families");

  std::optional<std::string> plot_path;
  auto* measure = app.add_subcommand("measure", "Spectral measure of a distance-regular graph");
  measure->add_option("source", source, "Builtin graph name or edge-list file")->required();
  measure->add_option("--plot-data", plot_path, "Write a 'lambda weight' table to this path");

  std::vector<double> taus;
  double gap_tol = 1e-9;
  auto* interlace = app.add_subcommand("interlace", "Check interlacing of two extensions");
  interlace->add_option("source", source, "Builtin graph name or edge-list file");
  interlace->add_option("--array", array, "Intersection pairs a1,b1;a2,b2;...");
  interlace->add_option("--tau", taus, "Two boundary parameters")->required()->expected(2);
  interlace->add_option("--gap", gap_tol, "Minimum separation between the spectra");

  std::size_t size = 0;
  auto* jacobi = app.add_subcommand("jacobi", "Dump the Jacobi matrix");
  jacobi->add_option("source", source, "Builtin graph name or edge-list file");
  jacobi->add_option("--array", array, "Intersection pairs a1,b1;a2,b2;...");
  auto* jtau = jacobi->add_option("--tau", tau, "Boundary parameter");
  jacobi->add_flag("--canonical", canonical, "Use tau* (default)")->excludes(jtau);
  jacobi->add_option("--family", family, "Infinite family; dumps the corner truncation");
  jacobi->add_option("--size", size, "Truncation size for --family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const auto r = error_result(e.what(), "UsageError");
    out << r.to_json().dump() << "\n";
    err << e.what() << "\n";
    return 1;
  }

  auto sequence_source = [&]() {
    SequenceSource s;
    if (!source.empty()) s.graph = source;
    s.array = array;
    return s;
  };

  CommandResult result;
  if (certify->parsed()) result = cmd_certify(source);
  else if (spectrum->parsed()) result = cmd_spectrum(sequence_source(), {tau}, tol);
  else if (verify->parsed()) result = cmd_verify_batch(verify_sources, jobs);
  else if (moments->parsed()) result = cmd_moments(family, order, quad_tol);
  else if (measure->parsed()) result = cmd_measure(source, plot_path);
  else if (interlace->parsed()) result = cmd_interlace(sequence_source(), taus.at(0), taus.at(1), gap_tol);
  else if (jacobi->parsed()) {
    result = family.empty() ? cmd_jacobi(sequence_source(), {tau}) : cmd_jacobi_family(family, size);
  }

  if (pretty) {
    std::ostringstream os;
    os << "status: " << status_name(result.status) << "\n";
    flatten_pretty(result.payload, "", os);
    for (const auto& d : result.diagnostics) os << "note: " << d << "\n";
    out << os.str();
  } else {
    out << result.to_json().dump() << "\n";
  }
  for (const auto& d : result.diagnostics) err << d << "\n";
  return result.exit_code();
}

}  // namespace drg::cli
