#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "formula.hpp"

namespace kcw::logic {

// Axiom schema over metavariables alpha, beta, gamma (schema variables match
// any subformula). Bidirectional schemas match either orientation.
struct AxiomSchema {
  std::string id;
  Sequent schema;
  bool bidirectional = false;
};

class System {
 public:
  static const System& cdbl();
  static const System& mcdbl();
  static const System& mcdbl4();
  // MCDBL extended with extra sequent schemas (each matched rigidly, its
  // variables acting as metavariables). Ids are sigma1, sigma2, ...
  static System mcdbl_sigma(const std::vector<Sequent>& sigma, std::string name = "MCDBLS");

  const std::string& name() const { return name_; }
  bool modal() const { return modal_; }
  const std::vector<AxiomSchema>& axioms() const { return axioms_; }
  const AxiomSchema* find_axiom(const std::string& id) const;
  bool allows_rule(const std::string& rule) const;

 private:
  friend struct SystemAccess;
  std::string name_;
  bool modal_ = false;
  std::vector<AxiomSchema> axioms_;
};

const System& system_by_name(const std::string& name);  // cdbl | mcdbl | mcdbl4

using Substitution = std::map<std::string, Formula>;

// First-order syntactic matching of the schema against the sequent; no
// associativity or commutativity is applied.
std::optional<Substitution> match_schema(const AxiomSchema& schema, const Sequent& seq);
std::optional<Substitution> match_axiom(const System& system, const std::string& axiom_id,
                                        const Sequent& seq);

Formula substitute(const Formula& schema, const Substitution& subst);

}  // namespace kcw::logic
