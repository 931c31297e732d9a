#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rootforge_cli/run.hpp"

namespace {

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using rootforge::cli::JobSpec;
  CLI::App app{"Certified root isolation, curve topology and bivariate solving"};
  app.require_subcommand(1);

  JobSpec job;
  std::vector<std::string> polys;
  std::string file;
  std::optional<uint64_t> seed;
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("polynomial", polys, "Polynomial text; read from --file or stdin when absent");
    sub->add_option("-f,--file", file, "File with one polynomial per line");
    sub->add_option("--b-max", job.b_max, "Precision cap for the b-doubling loop");
    sub->add_option("--seed", seed, "Seed (falls back to ROOTFORGE_SEED)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--stats", job.stats, "Report oracle telemetry");
  };
  CLI::App* iso = app.add_subcommand("isolate", "Isolate the distinct complex roots");
  CLI::App* ref = app.add_subcommand("refine", "Isolate, then shrink disks below 2^-kappa");
  CLI::App* top = app.add_subcommand("topology", "Topology graph of a real plane curve");
  CLI::App* sol = app.add_subcommand("solve2", "Isolating boxes for g = h = 0");
  for (CLI::App* s : {iso, ref, top, sol}) common(s);
  for (CLI::App* s : {iso, ref}) s->add_option("--k", job.k, "Number of distinct roots");
  ref->add_option("--kappa", job.kappa, "Target radius exponent")->required();
  for (CLI::App* s : {top, sol}) {
    s->add_option("--shear", job.shear, "Shear tried first");
    s->add_option("--prime", job.prime, "Prime tried first in the counting gate");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : rootforge::cli::kParseError;
  }

  if (iso->parsed()) job.command = JobSpec::Command::isolate;
  if (ref->parsed()) job.command = JobSpec::Command::refine;
  if (top->parsed()) job.command = JobSpec::Command::topology;
  if (sol->parsed()) job.command = JobSpec::Command::solve2;
  job.format = format == "text" ? JobSpec::Format::text : JobSpec::Format::json;

  if (seed) {
    job.seed = *seed;
  } else if (const char* env = std::getenv("ROOTFORGE_SEED")) {
    job.seed = std::strtoull(env, nullptr, 10);
  }

  if (!polys.empty()) {
    job.inputs = polys;
  } else if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open " << file << "\n";
      return rootforge::cli::kParseError;
    }
    job.inputs = read_lines(in);
  } else {
    job.inputs = read_lines(std::cin);
  }
  return rootforge::cli::run(job, std::cout, std::cerr);
}
