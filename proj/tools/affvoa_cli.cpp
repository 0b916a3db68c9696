#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "affvoa/reports.hpp"

namespace {

constexpr int kCertified = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

std::vector<int> parse_weight(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) throw affvoa::UsageError("--weight expects integers like 2,1");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the vacuum vertex algebra of sl_n at non-admissible levels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", affvoa::library_version());

  affvoa::RunRequest request;
  std::string weight_text, out_path;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Seed for every random choice")->required();
    sub->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  };
  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--n", request.n, "Rank parameter of sl_n")->check(CLI::Range(2, 8));
    sub->add_option("--m", request.m, "Level k = -3 + 2/(2m+1) (n = 3)");
    sub->add_option("--q", request.q, "Level k = -n + (n-1)/q");
  };

  auto* singular = app.add_subcommand("singular", "Solve for singular vectors in one (depth, weight) space");
  add_level(singular);
  singular->add_option("--depth", request.depth, "Conformal depth")->required();
  singular->add_option("--weight", weight_text, "Weight in simple-root coordinates, e.g. 2,1")->required();
  singular->add_option("--max-columns", request.max_columns, "Refuse systems with more unknowns than this");
  add_common(singular);

  auto* variety = app.add_subcommand("variety", "Certify the associated variety class by class (n = 3)");
  add_level(variety);
  add_common(variety);

  auto* slice = app.add_subcommand("slice", "Intersect a Slodowy slice with the mixed sheet closure (n = 3)");
  slice->add_option("--slice", request.slice, "minimal or regular")->check(CLI::IsMember({"minimal", "regular"}));
  add_common(slice);

  auto* character = app.add_subcommand("character", "Compare the character formula with a reference table (n = 3)");
  add_level(character);
  character->add_option("--depth", request.depth, "Highest depth compared");
  add_common(character);

  auto* zhu = app.add_subcommand("zhu", "Harish-Chandra test of the conjectured weight families (n = 3)");
  add_level(zhu);
  zhu->add_option("--cap", request.cap, "Degree cap for weight-zero elements");
  add_common(zhu);

  auto* selftest = app.add_subcommand("selftest", "Quick internal consistency checks");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kCertified : kUsageError;
  }

  request.command = app.get_subcommands().front()->get_name();
  request.seed = *seed;
  auto start = std::chrono::steady_clock::now();
  nlohmann::json report;
  int status = kCheckFailed;
  try {
    if (!weight_text.empty()) request.weight = parse_weight(weight_text);
    affvoa::RunResult result = affvoa::run_command(request);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report = affvoa::full_report(request, result, wall);
    status = result.certified ? kCertified : kCheckFailed;
  } catch (const affvoa::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::length_error& e) {
    affvoa::RunResult refused;
    refused.statement = "refused";
    refused.payload["refused"] = e.what();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report = affvoa::full_report(request, refused, wall);
    std::cerr << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }

  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kCheckFailed;
    }
    out << text;
  }
  return status;
}
