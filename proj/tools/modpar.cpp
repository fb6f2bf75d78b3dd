// modpar: command-line front end.
//
//   modpar gb ideal.txt --cores 4 --seed 7
//   modpar assprimes ideal.txt --json

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modpar/engine.hpp"
#include "modpar/io.hpp"
#include "modpar/report.hpp"
#include "modpar/zerodim.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kAlgorithmFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular Groebner bases and zero-dimensional primary decomposition over Q"};
  std::string command;
  std::string path;
  modpar::ModStdConfig config;
  config.cores = modpar::default_cores();
  bool no_verify = false;
  bool json = false;
  std::string ordering;

  app.add_option("command", command, "gb | radical | assprimes | primary | factor")
      ->required()
      ->check(CLI::IsMember({"gb", "radical", "assprimes", "primary", "factor"}));
  app.add_option("file", path, "ideal file")->required();
  app.add_option("--cores", config.cores, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "random seed");
  app.add_option("--batch", config.batch_size, "primes per round")->check(CLI::PositiveNumber);
  app.add_flag("--no-verify", no_verify, "skip the final verification over Q");
  app.add_option("--max-rounds", config.max_rounds, "give up after this many rounds")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "print a JSON document");
  app.add_option("--ordering", ordering, "override the file's ordering (dp or lp)")
      ->check(CLI::IsMember({"dp", "lp"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  config.verify = !no_verify;

  modpar::Ideal ideal;
  try {
    ideal = modpar::parse_ideal_file(read_file(path));
    if (!ordering.empty()) ideal = modpar::with_order(ideal, modpar::parse_order_name(ordering));
  } catch (const modpar::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const modpar::CommandResult result = modpar::run_command(command, ideal, config);
    if (json) {
      std::cout << result.document.dump(2) << "\n";
    } else {
      for (const auto& line : result.lines) std::cout << line << "\n";
      std::cerr << "time: " << result.document["timings"]["total"].get<double>() << " s\n";
    }
  } catch (const modpar::MaxRoundsExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAlgorithmFailure;
  } catch (const modpar::PositiveDimensional& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAlgorithmFailure;
  }
  return 0;
}
