#pragma once

#include <string>
#include <vector>

#include "context.hpp"
#include "kripke.hpp"
#include "logic/derivation.hpp"

namespace kcw::fixtures {

// The three worked contexts: the water-life subcontext, the disease/symptom
// context, and the small bisimulation-motivated context with its relations.
Context table1_context();
Context table2_context();
Context table3_context();
KripkeContext example32_kc();

struct ProofFixture {
  std::string name;           // appendix-1a, thm52-4b, prop51-r6, ...
  logic::DerivNode tree;
  std::vector<logic::Sequent> hypotheses;
};

// Stock derivation trees: the worked commutativity/associativity/absorption
// proofs, the derived-rule derivations, and one tree per derived sequent.
const std::vector<ProofFixture>& appendix_fixtures();   // the worked trees
const std::vector<ProofFixture>& derived_rule_fixtures();  // R6, R7 from R1/R1'/R2/R2'/R4
const std::vector<ProofFixture>& derived_sequent_fixtures();  // items 1a..8b
const ProofFixture* find_proof_fixture(const std::string& name);
std::vector<const ProofFixture*> all_proof_fixtures();

}  // namespace kcw::fixtures
