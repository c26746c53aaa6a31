// chern: Hilbert coefficients of parameter ideals from the command line.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chern/commands.hpp"

namespace {

std::vector<std::int64_t> parse_lengths(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = std::stoll(item, &used);
    if (used != item.size() || v < 0) throw chern::Error("--h expects nonnegative integers, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Samuel coefficients, Chern numbers and Cohen-Macaulay verdicts for parameter ideals"};
  std::string command, file, h_text, unmixed_text, param;
  chern::CommandOptions options;
  bool as_json = false;

  app.set_help_flag("--help", "print this help message and exit");
  std::string commands = "paper-examples";
  for (const auto& c : chern::session_commands()) commands += ", " + c;
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("-f,--file", file, "session file (.ch)");
  app.add_option("--nmax", options.nmax, "largest n in the initial Hilbert-Samuel table")->check(CLI::Range(1u, 40u));
  app.add_option("--seed", options.seed, "seed for random linear forms");
  app.add_option("--trials", options.trials, "depth probe restarts")->check(CLI::Range(1u, 1000u));
  app.add_option("--h", h_text, "lengths of H^i_m(R), i = 0..d-1, e.g. 0,1");
  app.add_option("--unmixed", unmixed_text, "assert that R is unmixed")->check(CLI::IsMember({"true", "false"}));
  app.add_option("--param", param, "parameter system name (default: first declared)");
  app.add_flag("--json", as_json, "emit JSON");
  CLI11_PARSE(app, argc, argv);

  try {
    chern::Report report;
    if (command == "paper-examples") {
      report = chern::example_suites_report(options.seed);
    } else {
      const auto& known = chern::session_commands();
      if (std::find(known.begin(), known.end(), command) == known.end())
        throw chern::Error("unknown command '" + command + "' (expected " + commands + ")");
      if (file.empty()) throw chern::Error("command '" + command + "' needs a session file: -f <file>");
      std::ifstream in(file);
      if (!in) throw chern::Error("cannot open '" + file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string text = buf.str();
      if (!h_text.empty()) options.h = parse_lengths(h_text);
      if (!unmixed_text.empty()) options.unmixed = unmixed_text == "true";
      if (!param.empty()) options.param = param;
      auto spec = chern::parse_session(text);
      report = chern::run_command(spec, command, options, text);
    }

    if (as_json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << report.text;
      if (!report.checks.empty() && command != "paper-examples") {
        std::cout << "checks:\n";
        for (const auto& c : report.checks)
          std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": ")
                    << c.detail << "\n";
      }
    }
    if (command == "paper-examples" && !report.all_passed()) return 1;
    return 0;
  } catch (const chern::InvariantViolation& e) {
    std::cerr << "chern: internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const chern::ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "chern: " << e.what() << "\n";
    return 1;
  }
}
