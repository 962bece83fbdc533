#pragma once

#include <string>
#include <vector>

#include "oclam/ast.hpp"
#include "oclam/gen.hpp"

namespace oclam {

struct PropConfig {
  uint64_t seed = 1;
  int n = 100;            // samples
  int size = 24;          // generator node budget
  int type_depth = 2;
  SemiringId semiring = SemiringId::Nat;
  uint64_t fuel = 100000;
  int obs_depth = 2;      // adequacy / linearity context depth
  int body_budget = 6;
};

struct PropResult {
  std::string name;
  int runs = 0;     // checked samples (give-ups excluded)
  int passes = 0;
  int failures = 0;
  int giveups = 0;  // generator gave up
  int skipped = 0;  // undecidable/unsupported samples
  uint64_t max_steps = 0; // termination: longest observed reduction
  std::vector<std::string> failure_notes; // first few witnesses

  bool ok() const { return failures == 0; }
  std::string summary() const;
};

// The fixed hand-built corpus: 30 terms jointly containing a redex for
// every rewrite rule; all result types have decidable equality.
struct CorpusEntry {
  TermPtr term;
  Context intuit;
  Context linear;
};
std::vector<CorpusEntry> soundness_corpus();

PropResult prop_subject_reduction(const PropConfig& cfg);
PropResult prop_confluence(const PropConfig& cfg);
PropResult prop_introduction(const PropConfig& cfg);
PropResult prop_termination(const PropConfig& cfg);
PropResult prop_linearity(const PropConfig& cfg);
PropResult prop_soundness(const PropConfig& cfg);
PropResult prop_adequacy(const PropConfig& cfg);
PropResult prop_semimodule(const PropConfig& cfg);
PropResult prop_encoding_agreement(const PropConfig& cfg);
PropResult prop_matrix_application(const PropConfig& cfg);
PropResult prop_matrix_roundtrip(const PropConfig& cfg);

const std::vector<std::string>& prop_names();
// Runs a property by name; throws std::invalid_argument for unknown names.
PropResult run_prop(const std::string& name, const PropConfig& cfg);

} // namespace oclam
