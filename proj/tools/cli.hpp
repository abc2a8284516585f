#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "drg/serialize.hpp"

namespace drg::cli {

enum class Status { Ok, Witness, Error };

struct CommandResult {
  Status status = Status::Ok;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;

  Json to_json() const;
  int exit_code() const noexcept;  // 0 ok, 2 witness, 1 error
};

/// Where an intersection sequence comes from: a graph (builtin name or edge
/// list file) or a literal "a1,b1;a2,b2;..." array.
struct SequenceSource {
  std::optional<std::string> graph;
  std::optional<std::string> array;
};

struct TauChoice {
  std::optional<double> tau;  // unset means canonical
};

CommandResult cmd_certify(const std::string& source);
CommandResult cmd_spectrum(const SequenceSource& source, TauChoice tau, std::optional<double> tol);
CommandResult cmd_verify(const std::string& source);
CommandResult cmd_verify_batch(const std::vector<std::string>& sources, int jobs);
CommandResult cmd_moments(const std::string& family, std::size_t order, double quad_tol);
CommandResult cmd_measure(const std::string& source, const std::optional<std::string>& plot_path);
CommandResult cmd_interlace(const SequenceSource& source, double tau1, double tau2, double tol);
CommandResult cmd_jacobi(const SequenceSource& source, TauChoice tau);
CommandResult cmd_jacobi_family(const std::string& family, std::size_t size);

/// Parses "a1,b1;a2,b2;..." into a validated sequence.
IntersectionSequence parse_array(const std::string& text);

/// Full command line entry point; writes the result document to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drg::cli
