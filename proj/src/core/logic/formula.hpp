#pragma once

#include <memory>
#include <string>
#include <vector>

#include "../error.hpp"

namespace kcw::logic {

enum class FKind { Var, Top, Bot, Meet, Join, Neg, Lneg, Box, Bbox };

// Immutable formula tree over the core connectives; the sugared connectives
// (vee, wedge, diamond, bdiamond) are expanded at construction.
class Formula {
 public:
  Formula() = default;

  static Formula var(std::string name);
  static Formula top();
  static Formula bot();
  static Formula meet(Formula a, Formula b);
  static Formula join(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula lneg(Formula a);
  static Formula box(Formula a);
  static Formula bbox(Formula a);
  static Formula vee(Formula a, Formula b);      // neg(neg a meet neg b)
  static Formula wedge(Formula a, Formula b);    // lneg(lneg a join lneg b)
  static Formula diamond(Formula a);             // neg box neg a
  static Formula bdiamond(Formula a);            // lneg bbox lneg a

  bool empty() const { return node_ == nullptr; }
  FKind kind() const;
  const std::string& name() const;  // Var only
  const Formula& left() const;      // unary: the operand
  const Formula& right() const;     // binary only

  bool is_modal() const;
  std::vector<std::string> variables() const;  // sorted, unique

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Formula make_formula_node(FKind kind, std::string name, Formula lhs, Formula rhs);
  std::shared_ptr<const Node> node_;
};

struct Sequent {
  Formula left, right;
  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.left == b.left && a.right == b.right;
  }
};

// Minimal-parenthesis rendering under the documented precedence.
std::string print(const Formula& f);
std::string print(const Sequent& s);

}  // namespace kcw::logic
