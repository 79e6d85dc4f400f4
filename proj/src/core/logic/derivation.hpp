#pragma once

#include <string>
#include <vector>

#include "axioms.hpp"
#include "formula.hpp"

namespace kcw::logic {

// One node of a derivation tree. Justifications: "axiom:<id>", "rule:<id>"
// or "hyp" (the sequent must then appear among the declared hypotheses,
// which is how derived-rule derivations carry their premises).
struct DerivNode {
  Sequent seq;
  std::string just;
  std::vector<DerivNode> premises;
};

struct NodeIssue {
  std::string path;  // root, root.1, root.1.2, ...
  std::string message;
};

struct ProofCheck {
  bool ok = false;
  int nodes = 0;
  std::vector<NodeIssue> issues;
};

ProofCheck check_derivation(const DerivNode& root, const System& system,
                            const std::vector<Sequent>& hypotheses = {});

}  // namespace kcw::logic
