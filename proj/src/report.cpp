#include <cmath>
#include <sstream>

#include "hadamard/experiments.hpp"

namespace hadamard {

bool ExperimentReport::passed() const {
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return true;
}

void ExperimentReport::check_le(int criterion, std::string description, double observed, double threshold,
                                double tolerance) {
  const bool ok = std::isfinite(observed) && observed <= threshold + tolerance;
  assertions.push_back({criterion, std::move(description), observed, threshold, tolerance, ok});
}

void ExperimentReport::check_near(int criterion, std::string description, double observed, double expected,
                                  double tolerance) {
  const bool ok = std::isfinite(observed) && std::abs(observed - expected) <= tolerance;
  assertions.push_back({criterion, std::move(description), observed, expected, tolerance, ok});
}

void ExperimentReport::check_ge(int criterion, std::string description, double observed, double threshold,
                                double tolerance) {
  const bool ok = std::isfinite(observed) && observed >= threshold - tolerance;
  assertions.push_back({criterion, std::move(description), observed, threshold, tolerance, ok});
}

std::string ExperimentReport::to_jsonl() const {
  std::ostringstream os;
  nlohmann::json header = {{"type", "report"},
                           {"name", name},
                           {"parameters", parameters},
                           {"columns", columns},
                           {"rows", rows.size()},
                           {"assertions", assertions.size()},
                           {"passed", passed()}};
  os << header.dump() << '\n';
  for (const auto& row : rows) {
    nlohmann::json j = {{"type", "row"}, {"label", row.label}, {"values", row.values}};
    os << j.dump() << '\n';
  }
  for (const auto& a : assertions) {
    nlohmann::json j = {{"type", "assertion"},    {"criterion", a.criterion}, {"description", a.description},
                        {"observed", a.observed}, {"threshold", a.threshold}, {"tolerance", a.tolerance},
                        {"passed", a.passed}};
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "label";
  for (const auto& c : columns) os << ',' << c;
  os << '\n';
  for (const auto& row : rows) {
    os << row.label;
    for (double v : row.values) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace hadamard
