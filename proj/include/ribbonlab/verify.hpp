#pragma once

// Property suites behind `ribbonlab verify`.

#include "ribbonlab/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ribbonlab {

struct VerifyOptions {
  std::string suite = "all";  // rnc | conormal | xg | fitting | families | all
  int gmax = 5;
  int dmax = 4;
  std::uint64_t seed = 1;
};

struct PropertyResult {
  std::string name;
  Json params = Json::object();
  bool pass = false;
  bool informational = false;  // reported, not counted towards the verdict
  Json details = Json::object();
  Json counterexample = nullptr;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<PropertyResult> properties;
  bool all_pass = true;
};

const std::vector<std::string>& verify_suites();
VerifyReport run_verify(const VerifyOptions& options);
Json to_json(const VerifyReport& report);

/// Worker count: RIBBONLAB_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_cap();
/// Runs task(i) for i in [0, n) on up to thread_cap() threads; results keep
/// index order.
std::vector<PropertyResult> run_tasks(const std::vector<std::function<PropertyResult()>>& tasks);

}  // namespace ribbonlab
