// focalis command-line front end. Talks to the engine exclusively through
// the C API in focalis.h; argument handling via CLI11.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "focalis.h"

namespace {

struct CommandSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> options;  // key, help
};

const std::vector<CommandSpec> kCommands = {
    {"evolute",
     {{"curve", "plane curve as a tuple, e.g. (t, i*t + t^3)"},
      {"params", "parameter list, e.g. [t]"}}},
    {"rotfocal",
     {{"profile", "profile curve (r(s), z(s)) as a tuple"},
      {"params", "parameter list, e.g. [s]"}}},
    {"implicitize",
     {{"coords", "parametrization tuple"},
      {"params", "parameter list, e.g. [t] or [s, u]"}}},
    {"imgdeg",
     {{"coords", "parametrization tuple"}, {"params", "parameter list"}}},
    {"degree",
     {{"kind", "curve | surface-ci | surface-data"},
      {"m", "ambient projective dimension"},
      {"d", "degree"},
      {"g", "genus (curve)"},
      {"degrees", "complete-intersection degrees, e.g. [2]"},
      {"hk", "H.K (surface-data)"},
      {"c1sq", "c1^2 (surface-data)"},
      {"c2", "c2 (surface-data)"},
      {"chi", "chi(O_S) (surface-data)"},
      {"sectgenus", "sectional genus (surface-data)"}}},
    {"inverse",
     {{"mode", "standard | asymptotic | isotropic"},
      {"o", "Sigma parametrization tuple (homogeneous lift for asymptotic/isotropic)"},
      {"r", "radius-squared function r(s)"},
      {"params", "parameter list, e.g. [s]"}}},
    {"isocurve", {{"f0", "first generator"}, {"f1", "second generator"}}},
    {"devel", {{"f0", "first generator"}, {"f1", "second generator"}}},
    {"check-t4",
     {{"surface", "ruled surface tuple (ruling = last parameter)"},
      {"f", "implicit hypersurface equation"},
      {"witness", "witness ruling tuple"},
      {"params", "parameter list, e.g. [s, u]"}}},
    {"check-t5",
     {{"o", "Sigma parametrization tuple"},
      {"r", "radius-squared function"},
      {"params", "parameter list"}}},
    {"product",
     {{"vars1", "first factor variables, e.g. [x, y]"},
      {"eqs1", "first factor equations, e.g. [x^2 + y^2 - 1]"},
      {"vars2", "second factor variables"},
      {"eqs2", "second factor equations"}}},
    {"sphere-fiber",
     {{"f", "hypersurface equation"},
      {"vars", "ambient variables (optional; defaults to x, y, z)"},
      {"center", "sphere centre tuple"},
      {"direction", "direction at infinity tuple"},
      {"witness", "witness subvariety tuple"},
      {"params", "witness parameter list"}}},
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    if (!out.good()) return false;
  }
  return std::rename(tmp.c_str(), path.c_str()) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"focalis: exact focal loci of algebraic varieties"};
  app.require_subcommand(0, 1);
  bool print_version = false;
  app.add_flag("--version", print_version, "print version and exit");

  struct Invocation {
    std::string command;
    std::map<std::string, std::string> values;
    std::string job_file, gram_file, out_file, format = "csv";
    long long seed = 0;
    bool seed_set = false;
    int samples = 0, precision = 12;
  };
  auto inv = std::make_shared<Invocation>();

  for (const auto& spec : kCommands) {
    CLI::App* sub = app.add_subcommand(spec.name, "run the " + spec.name +
                                                      " command");
    for (const auto& [key, help] : spec.options) {
      sub->add_option_function<std::string>(
          "--" + key,
          [inv, key = key](const std::string& v) { inv->values[key] = v; },
          help);
    }
    sub->add_option("--job", inv->job_file, "job file (schema 1)");
    sub->add_option("--gram", inv->gram_file, "gram matrix file");
    sub->add_option_function<long long>(
        "--seed",
        [inv](long long s) {
          inv->seed = s;
          inv->seed_set = true;
        },
        "deterministic seed");
    sub->add_option("--samples", inv->samples, "emit N sample points");
    sub->add_option("--format", inv->format, "samples format: csv | json");
    sub->add_option("--precision", inv->precision,
                    "decimal digits for samples (display only)");
    sub->add_option("--out", inv->out_file, "write output atomically to FILE");
    sub->callback([inv, name = spec.name]() { inv->command = name; });
  }

  CLI11_PARSE(app, argc, argv);
  if (print_version) {
    std::cout << "focalis " << focalis_version() << "\n";
    return 0;
  }
  if (inv->command.empty()) {
    std::cerr << app.help();
    return 2;
  }

  std::string job_text;
  try {
    if (!inv->job_file.empty()) {
      job_text = read_file(inv->job_file);
    } else {
      std::ostringstream os;
      os << "schema: 1\n";
      os << "command: " << inv->command << "\n";
      for (const auto& [k, v] : inv->values) os << k << ": " << v << "\n";
      if (!inv->gram_file.empty()) {
        std::string gram = read_file(inv->gram_file);
        std::string flat;
        for (char c : gram)
          flat += (c == '\n' || c == '\r') ? ' ' : c;
        os << "gram: " << flat << "\n";
      }
      if (inv->seed_set) os << "seed: " << inv->seed << "\n";
      job_text = os.str();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  focalis_result* result = nullptr;
  focalis_status status = focalis_run_job(job_text.c_str(), &result);
  std::string output = focalis_result_document(result);
  if (status == FOCALIS_OK && inv->samples > 0) {
    const char* samples = focalis_result_samples(
        result, inv->samples, inv->format.c_str(), inv->precision);
    if (!samples) {
      std::cerr << "error: NO_SAMPLES: result has no parametrized component\n";
      focalis_result_free(result);
      return 3;
    }
    output = samples;
  }
  int exit_code = focalis_result_status(result);
  if (exit_code != 0) {
    const char* code = focalis_result_error_code(result);
    const char* msg = focalis_result_error_message(result);
    std::cerr << "error: " << (code ? code : "INTERNAL") << ": "
              << (msg ? msg : "") << "\n";
  }
  focalis_result_free(result);
  if (!inv->out_file.empty()) {
    if (!write_atomic(inv->out_file, output)) {
      std::cerr << "error: cannot write " << inv->out_file << "\n";
      return 4;
    }
  } else {
    std::cout << output;
  }
  return exit_code;
}
