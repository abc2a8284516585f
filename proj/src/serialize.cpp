#include "drg/serialize.hpp"

#include <cstdio>

#include "drg/error.hpp"

namespace drg {
namespace {

const char* witness_kind_name(WitnessKind k) {
  return k == WitnessKind::NotRegular ? "NotRegular" : "NotDistanceRegular";
}

}  // namespace

Json to_json(const IntersectionSequence& is) {
  Json alpha = Json::array();
  for (std::size_t k = 0; k <= is.diameter(); ++k) alpha.push_back(is.alpha(k));
  Json j;
  j["d"] = is.diameter();
  j["a"] = is.a;
  j["b"] = is.b;
  j["degree"] = is.degree;
  j["alpha"] = std::move(alpha);
  j["deg_k"] = degree_sequence(is);
  return j;
}

Json to_json(const NonRegularityWitness& w) {
  Json j;
  j["kind"] = witness_kind_name(w.kind);
  j["count"] = w.count == CountKind::A ? "a" : "b";
  j["distance"] = w.distance;
  j["pairs"] = Json::array({Json::array({w.first.i, w.first.j}), Json::array({w.second.i, w.second.j})});
  j["counts"] = Json::array({w.first_count, w.second_count});
  return j;
}

Json to_json(const JacobiOperator& J) {
  Json j;
  j["size"] = J.size();
  j["diag"] = J.diag;
  j["offdiag"] = J.offdiag;
  j["tau"] = J.tau ? Json(*J.tau) : Json(nullptr);
  return j;
}

Json to_json(const SpectralMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms) {
    Json atom;
    atom["lambda"] = a.lambda;
    atom["weight"] = a.weight;
    if (a.multiplicity) atom["multiplicity"] = *a.multiplicity;
    atoms.push_back(std::move(atom));
  }
  Json j;
  j["tau"] = mu.tau;
  j["atoms"] = std::move(atoms);
  return j;
}

IntersectionSequence intersection_sequence_from_json(const Json& j) {
  try {
    return IntersectionSequence::from_arrays(j.at("a").get<std::vector<std::uint64_t>>(),
                                             j.at("b").get<std::vector<std::uint64_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad intersection sequence JSON: ") + e.what());
  }
}

std::string plot_table(const SpectralMeasure& mu) {
  std::string out = "# lambda weight\n";
  char line[96];
  for (const auto& a : mu.atoms) {
    std::snprintf(line, sizeof line, "%.17g %.17g\n", a.lambda, a.weight);
    out += line;
  }
  return out;
}

}  // namespace drg
