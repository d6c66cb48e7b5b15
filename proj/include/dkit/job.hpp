#pragma once

#include "dkit/determinacy.hpp"
#include "dkit/orbit.hpp"
#include "dkit/ring.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dkit {

/// Schema violation in a job document; field() is a path such as
/// "matrix[0][1]" or "options.param_cap".
class JobError : public std::invalid_argument {
public:
  JobError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

enum class Command { TangentImage, Codim, Predeterm, Determ, OrbitEquations, Stabilizer, OrbitCodim, Separability };

std::string_view command_name(Command c);
std::optional<Command> command_from_name(std::string_view s);

struct JobOptions {
  std::optional<int> jet_level;
  std::optional<OrbitMethod> orbit_method;
  std::optional<std::size_t> param_cap;
};

struct Job {
  std::uint64_t characteristic = 0;
  std::vector<std::string> vars;
  /// group as written: right, left, rightside, leftright or contact
  std::string group_text;
  std::optional<Command> command;
  JobOptions options;

  RingPtr ring;  // local degree ordering
  MatrixSeries matrix;
  GroupKind group = GroupKind::RightR;
};

/// Parses either the line format
///
///   characteristic: 2
///   vars: [x, y]
///   matrix: [[x^2 + y^3]]
///   group: contact
///   command: separability
///   jet_level: 3
///   orbit_method: stabilizer
///   param_cap: 64
///
/// or a JSON object with the same keys (options nested under "options").
/// Blank lines and lines starting with '#' are skipped.
Job parse_job(std::string_view text);

/// Canonical line format; entries rendered in the polynomial grammar.
std::string serialize_job(const Job& job);
nlohmann::ordered_json job_to_json(const Job& job);

struct RunOptions {
  bool verify = false;
  /// Overrides the job's command when set.
  std::optional<Command> command;
  std::optional<int> jet_level;
  std::optional<OrbitMethod> orbit_method;
};

struct JobResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int invalid = 2;
inline constexpr int infinite = 3;
}  // namespace exit_code

/// Runs the job; never throws for library errors, which become an "error"
/// object {kind, message[, field]} with the matching exit code.
JobResult run_job(const Job& job, const RunOptions& opts = {});

/// parse_job followed by run_job, with parse failures reported the same way.
JobResult run_job_text(std::string_view text, const RunOptions& opts = {});

/// Indented "key: value" text; lists one item per line.
std::string format_text(const nlohmann::ordered_json& report);
std::string format_structured(const nlohmann::ordered_json& report);

}  // namespace dkit
