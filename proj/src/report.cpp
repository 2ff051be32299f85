#include "kc/report.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <sstream>

namespace kc {

std::string RelationId::str() const {
  std::ostringstream os;
  os << tag << "[n=" << n;
  if (i >= 0) os << ",i=" << i;
  os << "]";
  return os.str();
}

std::string VerifyReport::line() const {
  std::ostringstream os;
  os << (pass ? "pass" : "FAIL") << "  " << id.str();
  if (!pass) os << "  residual_terms=" << residual_terms;
  if (!detail.empty()) os << "  (" << detail << ")";
  return os.str();
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["id"] = r.id.tag;
    j["n"] = r.id.n;
    if (r.id.i >= 0)
      j["i"] = r.id.i;
    else
      j["i"] = nullptr;
    j["status"] = r.pass ? "pass" : "fail";
    j["residual_terms"] = r.residual_terms;
    j["elapsed_ms"] = r.elapsed_ms;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.fitted.empty()) {
      nlohmann::json fit = nlohmann::json::array();
      for (const auto& [basis, coeff] : r.fitted) fit.push_back({{"basis", basis}, {"coeff", coeff}});
      j["fitted_coefficients"] = fit;
    }
    arr.push_back(j);
  }
  return arr.dump(2);
}

bool all_pass(const std::vector<VerifyReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::ms() const {
  auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                 std::chrono::steady_clock::now().time_since_epoch())
                 .count();
  return static_cast<double>(now - start_ns_) / 1e6;
}

}  // namespace kc
