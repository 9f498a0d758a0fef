#pragma once

#include <string>
#include <vector>

namespace rpgeo {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Number of acceptance criteria.
constexpr int kCriteria = 10;

/// Runs one criterion (1-based). Exceptions become failures with the message
/// as detail.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace rpgeo
