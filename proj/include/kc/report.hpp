#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kc {

struct RelationId {
  std::string tag;  // e.g. "cartan", "sub1_yc", "ki_form"
  int n = 0;
  int i = -1;  // -1 when not applicable
  std::string str() const;
};

// Per-relation verification record. pass holds iff the residual operator (or
// polynomial) is exactly zero.
struct VerifyReport {
  RelationId id;
  bool pass = false;
  long residual_terms = 0;
  double elapsed_ms = 0.0;
  // which outcome occurred, or failure diagnostics
  std::string detail;
  // fitted coefficient table (basis label -> coefficient), present when a fit ran
  std::vector<std::pair<std::string, std::string>> fitted;

  std::string line() const;  // one-line human-readable form
};

std::string reports_to_json(const std::vector<VerifyReport>& reports);
bool all_pass(const std::vector<VerifyReport>& reports);

// simple wall-clock helper
class Stopwatch {
 public:
  Stopwatch();
  double ms() const;

 private:
  long long start_ns_;
};

}  // namespace kc
