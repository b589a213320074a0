#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nhm/json_io.hpp"
#include "nhm/kernel.hpp"

namespace nhm {

struct DemoStep {
  std::string label;
  std::optional<Space> space;
  std::optional<Certificate> certificate;
  /// Free text for steps that compute values rather than certificates.
  std::string note;
};

struct DemoReport {
  std::string name;
  /// `demo NAME`, plus `--space X` when a variant was requested.
  std::string command;
  std::vector<std::string> citations;
  std::vector<DemoStep> steps;
  std::string verdict;
  /// 0 on success, 3 when the scenario ends in an expected failure.
  int exit_code = 0;
};

const std::vector<std::string>& demo_names();

/// Runs a scripted scenario. `variant` selects the space for `theorem2`
/// (line, doubled, feather). Throws PreconditionError for unknown names.
DemoReport run_demo(std::string_view name, std::string_view variant = "");

/// `{command, verdict, certificate, citations}` where certificate lists the
/// steps, each re-verified.
Json report_json(const DemoReport& r);
std::string report_text(const DemoReport& r);

}  // namespace nhm
