#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affvoa/rational.hpp"

namespace affvoa {

/// Parameters shared by every subcommand. Unused fields are ignored by the runner and
/// left out of the manifest.
struct RunRequest {
  std::string command;
  int n = 3;
  std::optional<int> m;
  std::optional<int> q;
  std::optional<int> depth;
  std::vector<int> weight;
  std::uint64_t seed = 0;
  std::string slice = "minimal";
  int cap = 6;
  long max_columns = 60000;
};

/// Bad or missing parameters. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunResult {
  std::string statement;  // what a certified run establishes
  bool certified = false;
  nlohmann::json payload;
};

/// k = -n + (n-1)/q, with q = 2m+1 when only m is given (n = 3).
Rational resolve_level(const RunRequest& request);

/// Size of the linear system behind a singular-vector solve, from the character of V^k.
struct SolveEstimate {
  long long columns = 0;  // dimension of the (depth, weight) space
  long long rows = 0;     // total dimension of the target spaces of e_i(0) and f_theta(1)
  bool feasible = true;
};
SolveEstimate estimate_singular_solve(int n, int depth, const std::vector<int>& weight, long max_columns);

RunResult run_singular(const RunRequest& request);
RunResult run_variety(const RunRequest& request);
RunResult run_slice(const RunRequest& request);
RunResult run_character(const RunRequest& request);
RunResult run_zhu(const RunRequest& request);
RunResult run_selftest(const RunRequest& request);
/// Dispatches on request.command; throws UsageError for an unknown command.
RunResult run_command(const RunRequest& request);

/// Lowercase hex SHA-256 of the canonical dump of `value`.
std::string sha256_hex(const nlohmann::json& value);

/// The reproducible part of a report: command, parameters, statement, verdict and payload.
/// Equal requests give byte-identical dumps of this document.
nlohmann::json result_document(const RunRequest& request, const RunResult& result);

/// Full report: result_document plus a manifest carrying the library version, the wall
/// time and the digest of the result document.
nlohmann::json full_report(const RunRequest& request, const RunResult& result, double wall_seconds);

std::string library_version();

}  // namespace affvoa
