// whipcheck: majority-rule aggregation and "none to be whipped" checks.
//
// Exit codes
//   analyze   0 none whipped, 1 separable outcome, 2 input error
//   check     0 a sufficient condition holds, 3 none holds, 2 input error
//   enumerate 0 no violations, 1 violations found, 2 bad scope
//   simulate  0 ok, 2 bad configuration

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "whipcheck/analysis.hpp"
#include "whipcheck/oracle.hpp"
#include "whipcheck/profile_io.hpp"
#include "whipcheck/report.hpp"

namespace {

using namespace whipcheck;

constexpr int kInputError = 2;

struct OutputFlags {
  bool json = false;
  bool pretty = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  auto* json = cmd->add_flag("--json", flags.json, "Emit single-line JSON");
  auto* pretty = cmd->add_flag("--pretty", flags.pretty, "Emit indented JSON");
  json->excludes(pretty);
}

template <class Text>
void emit(const OutputFlags& flags, const Json& doc, Text&& text) {
  if (flags.pretty) {
    std::cout << doc.dump(2) << "\n";
  } else if (flags.json) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << text();
  }
}

int run_analyze(const std::string& path, const OutputFlags& flags) {
  const auto report = analyze(read_profile_file(path));
  emit(flags, to_json(report), [&] { return render_text(report); });
  return report.verdict.none_whipped ? 0 : 1;
}

int run_check(const std::string& path, const OutputFlags& flags) {
  const auto profile = read_profile_file(path);
  const auto conditions = full_condition_report(profile);
  emit(flags, to_json(conditions, profile.roster()),
       [&] { return render_text(conditions, profile.roster()); });
  return conditions.any_sufficient() ? 0 : 3;
}

int run_enumerate(std::size_t m, std::size_t n, unsigned threads, const OutputFlags& flags) {
  const auto report = verify_implications({m, n}, threads);
  emit(flags, to_json(report), [&] { return render_text(report); });
  return report.total_violations() == 0 ? 0 : 1;
}

int run_simulate(const std::vector<std::size_t>& ms, const std::vector<std::size_t>& ns,
                 std::uint64_t trials, std::uint64_t seed, Culture culture, const std::string& csv_path,
                 const OutputFlags& flags) {
  Json estimates = Json::array();
  std::string text;
  std::string csv = csv_header();
  for (auto m : ms) {
    for (auto n : ns) {
      const SimulationConfig config{m, n, trials, seed, culture};
      const auto estimate = estimate_none_whipped_probability(config);
      estimates.push_back(to_json(config, estimate));
      text += render_text(config, estimate);
      csv += csv_row(config, estimate);
    }
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw InputError("WriteError", 0, "cannot write '" + csv_path + "'");
    out << csv;
  }
  emit(flags, Json{{"estimates", std::move(estimates)}}, [&] { return text; });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majority-rule aggregation of ordinal rankings and Rank-and-Yank checks"};
  app.require_subcommand(1);

  OutputFlags flags;
  std::string path;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a profile file");
  analyze_cmd->add_option("file", path, "Profile file")->required();
  add_output_flags(analyze_cmd, flags);

  auto* check_cmd = app.add_subcommand("check", "Sufficient-condition flags for a profile file");
  check_cmd->add_option("file", path, "Profile file")->required();
  add_output_flags(check_cmd, flags);

  std::size_t enum_m = 3;
  std::size_t enum_n = 2;
  unsigned threads = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Audit every profile of a small scope");
  enumerate_cmd->add_option("--m", enum_m, "Alternatives (2-5)")->required();
  enumerate_cmd->add_option("--n", enum_n, "Criteria")->required();
  enumerate_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
  add_output_flags(enumerate_cmd, flags);

  std::vector<std::size_t> sim_m;
  std::vector<std::size_t> sim_n;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  std::string culture_name = "weak";
  std::string csv_path;
  const std::map<std::string, Culture> cultures{{"weak", Culture::UniformWeakOrders},
                                                {"strict", Culture::UniformStrictOrders}};
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of P(none whipped)");
  simulate_cmd->add_option("--m", sim_m, "Alternatives (one or more values)")->required();
  simulate_cmd->add_option("--n", sim_n, "Criteria (one or more values)")->required();
  simulate_cmd->add_option("--trials", trials, "Profiles drawn per (m, n)");
  simulate_cmd->add_option("--seed", seed, "Seed for std::mt19937_64");
  simulate_cmd->add_option("--culture", culture_name, "weak or strict")
      ->check(CLI::IsMember({"weak", "strict"}));
  simulate_cmd->add_option("--csv", csv_path, "Also write estimates as CSV");
  add_output_flags(simulate_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(path, flags);
    if (check_cmd->parsed()) return run_check(path, flags);
    if (enumerate_cmd->parsed()) return run_enumerate(enum_m, enum_n, threads, flags);
    if (simulate_cmd->parsed()) {
      return run_simulate(sim_m, sim_n, trials, seed, cultures.at(culture_name), csv_path, flags);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ScopeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
