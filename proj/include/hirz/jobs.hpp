#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hirz/errors.hpp"

// One computation request, shared by the CLI flags, batch NDJSON lines and
// the Python bindings.
namespace hirz {

enum class Command { Seshadri, Enumerate, Hzero, Bound, Verify };
enum class OutputFormat { Json, Csv, Human };

constexpr int kSchemaVersion = 1;

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 2;
constexpr int hypothesis = 3;
constexpr int unsupported = 4;
constexpr int invariant = 5;
}  // namespace exit_code

int exit_code_for(ErrorKind kind);

const char* to_string(Command c);
Command parse_command(const std::string& name);
OutputFormat parse_format(const std::string& name);

struct JobSpec {
  Command command = Command::Seshadri;
  OutputFormat format = OutputFormat::Json;

  std::optional<std::int64_t> e;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> beta;
  std::optional<std::vector<std::int64_t>> mu;
  std::optional<std::int64_t> target;
  std::optional<std::int64_t> ruled_case;   // 1..6
  std::optional<std::int64_t> point_index;  // one-based
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<std::vector<std::int64_t>> m;
  bool very_general = true;
  bool ample_asserted = true;

  // verify
  std::optional<std::int64_t> criterion;
  std::optional<std::int64_t> seed;
  bool quick = false;
};

/// Parses one NDJSON line. Throws StructuralError naming the offending field.
JobSpec parse_job_json(const std::string& line);

/// Checks that the fields the command needs are present and well formed.
/// Throws StructuralError naming the offending field.
void validate(const JobSpec& spec);

struct JobOutput {
  int exit_code = exit_code::ok;
  std::string out;  // formatted result, newline terminated
  std::string err;  // diagnostic, empty on success
};

/// Validates and runs the job; domain errors become exit codes. `compact`
/// renders JSON on one line (batch mode).
JobOutput run_job(const JobSpec& spec, bool compact = false);

/// Runs each nonblank line as a job. Results are written in input order;
/// the exit status is that of the first failing job, or 0.
int run_batch(std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hirz
