// The named invariant suite: every structural fact the library promises,
// runnable against any finite input system.

#ifndef COXALT_VERIFY_HPP
#define COXALT_VERIFY_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "coxalt/altgrp.hpp"

namespace coxalt {

struct VerifyOptions {
  int root_cap = 10000;
  int element_cap = 100000;
};

struct CheckResult {
  std::string name;
  enum class Status { Pass, Fail, Skip } status;
  std::string detail;  // failure witness or skip reason
};

// The fixed list of check names, in execution order.
std::vector<std::string> verify_check_names();

// Run the whole suite for one system.
std::vector<CheckResult> run_verify(const CoxeterSystem& sys,
                                    const VerifyOptions& opts = {});

struct ExperimentResult {
  std::string question;
  std::vector<std::string> findings;
};

// The open-question experiments: report, never assert.
ExperimentResult run_experiment(const CoxeterSystem& sys, const std::string& question,
                                const VerifyOptions& opts = {});

}  // namespace coxalt

#endif
