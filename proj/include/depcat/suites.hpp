#pragma once

// The law-suite runner over structure documents: suite applicability,
// deterministic text/JSON report emission, and targeted single-entry
// mutations that guard the checkers against vacuity.

#include <string>
#include <vector>

#include "depcat/instances.hpp"

namespace depcat {

inline constexpr std::size_t kDefaultBudget = 2;

// Fixed suite order: category, fam, cofam, sigma, dep, depsigma, transport,
// elsigma, exdo2, counting, weak.
std::vector<std::string> suite_order();
std::vector<std::string> applicable_suites(const StructureDocument& doc);

// Runs the requested suites (all applicable when empty). Throws LayerMissing
// or NoTerminalObject when an inapplicable suite is requested explicitly.
std::vector<LawReport> run_suites(const StructureDocument& doc,
                                  const std::vector<std::string>& suites,
                                  std::size_t budget = kDefaultBudget);

bool all_passed(const std::vector<LawReport>& reports);
std::string report_text(const std::vector<LawReport>& reports);
std::string report_json(const std::vector<LawReport>& reports);

struct MutationOutcome {
  std::string description;  // what single entry was flipped
  std::string suite;        // the suite expected to fail
  StructureDocument doc;
};

// Laws for which a document-level single-entry mutation is available.
std::vector<std::string> mutable_laws(const StructureDocument& doc);
// Flips one table entry so that the named law's checker must report a failure;
// throws InvalidSpec when the document does not support that law.
MutationOutcome mutate_for_law(const StructureDocument& doc, const std::string& law);

}  // namespace depcat
