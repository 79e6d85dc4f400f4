#include "derivation.hpp"

namespace kcw::logic {

namespace {

bool is_kind(const Formula& f, FKind k) { return f.kind() == k; }

// Fixed premise shapes, matched syntactically.
bool rule_fits(const std::string& rule, const Sequent& conc, const std::vector<Sequent>& prem,
               std::string& why) {
  auto need = [&](size_t k) {
    if (prem.size() != k) {
      why = rule + " needs " + std::to_string(k) + " premises, got " + std::to_string(prem.size());
      return false;
    }
    return true;
  };
  auto mism = [&]() {
    why = "conclusion does not follow from the premises by " + rule;
    return false;
  };

  if (rule == "R1" || rule == "R1'" || rule == "R2" || rule == "R2'") {
    if (!need(1)) return false;
    FKind op = (rule == "R1" || rule == "R1'") ? FKind::Meet : FKind::Join;
    bool side_left = rule == "R1" || rule == "R2";  // premise formulas on the left of op
    if (!is_kind(conc.left, op) || !is_kind(conc.right, op)) return mism();
    const Formula& cl_a = side_left ? conc.left.left() : conc.left.right();
    const Formula& cl_g = side_left ? conc.left.right() : conc.left.left();
    const Formula& cr_b = side_left ? conc.right.left() : conc.right.right();
    const Formula& cr_g = side_left ? conc.right.right() : conc.right.left();
    if (cl_a != prem[0].left || cr_b != prem[0].right || cl_g != cr_g) return mism();
    return true;
  }
  if (rule == "R3" || rule == "R3'") {
    if (!need(1)) return false;
    FKind op = rule == "R3" ? FKind::Neg : FKind::Lneg;
    if (!is_kind(conc.left, op) || !is_kind(conc.right, op)) return mism();
    if (conc.left.left() != prem[0].right || conc.right.left() != prem[0].left) return mism();
    return true;
  }
  if (rule == "R4") {
    if (!need(2)) return false;
    if (prem[0].right != prem[1].left) return mism();
    if (conc.left != prem[0].left || conc.right != prem[1].right) return mism();
    return true;
  }
  if (rule == "R5") {
    if (!need(4)) return false;
    const Formula& a = conc.left;
    const Formula& b = conc.right;
    Sequent want[4] = {
        {Formula::meet(a, b), Formula::meet(a, a)},
        {Formula::meet(a, a), Formula::meet(a, b)},
        {Formula::join(a, b), Formula::join(b, b)},
        {Formula::join(b, b), Formula::join(a, b)},
    };
    for (int i = 0; i < 4; ++i)
      if (!(prem[static_cast<size_t>(i)] == want[i])) return mism();
    return true;
  }
  if (rule == "R6") {
    if (!need(2)) return false;
    if (prem[0].left != prem[1].left) return mism();
    const Formula& a = prem[0].left;
    if (!(conc.left == Formula::meet(a, a))) return mism();
    if (!(conc.right == Formula::meet(prem[0].right, prem[1].right))) return mism();
    return true;
  }
  if (rule == "R7") {
    if (!need(2)) return false;
    if (prem[0].right != prem[1].right) return mism();
    const Formula& a = prem[0].right;
    if (!(conc.right == Formula::join(a, a))) return mism();
    if (!(conc.left == Formula::join(prem[0].left, prem[1].left))) return mism();
    return true;
  }
  if (rule == "R8" || rule == "R9") {
    if (!need(1)) return false;
    FKind op = rule == "R8" ? FKind::Box : FKind::Bbox;
    if (!is_kind(conc.left, op) || !is_kind(conc.right, op)) return mism();
    if (conc.left.left() != prem[0].left || conc.right.left() != prem[0].right) return mism();
    return true;
  }
  why = "unknown rule " + rule;
  return false;
}

struct Checker {
  const System& system;
  const std::vector<Sequent>& hypotheses;
  ProofCheck result;

  void walk(const DerivNode& node, const std::string& path) {
    ++result.nodes;
    auto reject = [&](const std::string& msg) { result.issues.push_back({path, msg}); };

    if (node.just == "hyp") {
      if (!node.premises.empty()) reject("hypothesis node must not have premises");
      bool found = false;
      for (const auto& h : hypotheses)
        if (h == node.seq) found = true;
      if (!found) reject("sequent is not among the declared hypotheses");
      return;
    }
    if (node.just.rfind("axiom:", 0) == 0) {
      std::string id = node.just.substr(6);
      if (!node.premises.empty()) reject("axiom node must not have premises");
      const AxiomSchema* schema = system.find_axiom(id);
      if (!schema) {
        reject("axiom '" + id + "' is not part of " + system.name());
        return;
      }
      if (!match_schema(*schema, node.seq))
        reject("sequent is not an instance of axiom " + id);
      return;
    }
    if (node.just.rfind("rule:", 0) == 0) {
      std::string id = node.just.substr(5);
      if (!system.allows_rule(id)) {
        reject("rule '" + id + "' is not part of " + system.name());
        return;
      }
      std::vector<Sequent> prem;
      prem.reserve(node.premises.size());
      for (const auto& p : node.premises) prem.push_back(p.seq);
      std::string why;
      if (!rule_fits(id, node.seq, prem, why)) reject(why);
      int child = 1;
      for (const auto& p : node.premises) walk(p, path + "." + std::to_string(child++));
      return;
    }
    reject("unknown justification '" + node.just + "'");
  }
};

}  // namespace

ProofCheck check_derivation(const DerivNode& root, const System& system,
                            const std::vector<Sequent>& hypotheses) {
  Checker checker{system, hypotheses, {}};
  checker.walk(root, "root");
  checker.result.ok = checker.result.issues.empty();
  return checker.result;
}

}  // namespace kcw::logic
