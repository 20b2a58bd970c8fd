#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "focalis/expr.hpp"
#include "focalis/focal.hpp"

namespace focalis {

// Deterministic plain-text job (schema 1): "key: value" lines, '#' comments.
struct Job {
  int schema = 1;
  std::string command;
  std::vector<std::pair<std::string, std::string>> entries;  // echo order
  long long seed = 0;
  std::optional<Mat<GaussianRational>> gram;

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  std::string render() const;  // canonical job text; parse(render(j)) == j
};

Job parse_job(const std::string& text);

struct SampleSource {
  std::string label;
  ParametricVariety variety;
};

struct ResultDocument {
  nlohmann::ordered_json doc;
  int exit_code = 0;
  std::vector<SampleSource> sample_sources;

  std::string to_string() const { return doc.dump(2) + "\n"; }
};

ResultDocument run_job(const Job& job);

// count exact parameter values rendered as decimals (display only).
std::string emit_samples(const ResultDocument& result, int count,
                         const std::string& format, int precision = 12);

}  // namespace focalis
