#include "formula.hpp"

#include <algorithm>

namespace kcw::logic {

struct Formula::Node {
  FKind kind;
  std::string name;
  Formula lhs, rhs;
};

Formula make_formula_node(FKind kind, std::string name, Formula lhs, Formula rhs);
namespace {
Formula make_node(FKind kind, std::string name, Formula lhs, Formula rhs) {
  return make_formula_node(kind, std::move(name), std::move(lhs), std::move(rhs));
}
}  // namespace

FKind Formula::kind() const {
  if (!node_) fail(ErrorCode::invalid_argument, "empty formula");
  return node_->kind;
}

const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::left() const { return node_->lhs; }
const Formula& Formula::right() const { return node_->rhs; }

Formula Formula::var(std::string name) { return make_node(FKind::Var, std::move(name), {}, {}); }
Formula Formula::top() { return make_node(FKind::Top, {}, {}, {}); }
Formula Formula::bot() { return make_node(FKind::Bot, {}, {}, {}); }
Formula Formula::meet(Formula a, Formula b) {
  return make_node(FKind::Meet, {}, std::move(a), std::move(b));
}
Formula Formula::join(Formula a, Formula b) {
  return make_node(FKind::Join, {}, std::move(a), std::move(b));
}
Formula Formula::neg(Formula a) { return make_node(FKind::Neg, {}, std::move(a), {}); }
Formula Formula::lneg(Formula a) { return make_node(FKind::Lneg, {}, std::move(a), {}); }
Formula Formula::box(Formula a) { return make_node(FKind::Box, {}, std::move(a), {}); }
Formula Formula::bbox(Formula a) { return make_node(FKind::Bbox, {}, std::move(a), {}); }

Formula Formula::vee(Formula a, Formula b) { return neg(meet(neg(a), neg(b))); }
Formula Formula::wedge(Formula a, Formula b) { return lneg(join(lneg(a), lneg(b))); }
Formula Formula::diamond(Formula a) { return neg(box(neg(a))); }
Formula Formula::bdiamond(Formula a) { return lneg(bbox(lneg(a))); }

Formula make_formula_node(FKind kind, std::string name, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::shared_ptr<const Formula::Node>(std::move(node)));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case FKind::Var: return a.node_->name == b.node_->name;
    case FKind::Top:
    case FKind::Bot: return true;
    case FKind::Neg:
    case FKind::Lneg:
    case FKind::Box:
    case FKind::Bbox: return a.node_->lhs == b.node_->lhs;
    case FKind::Meet:
    case FKind::Join: return a.node_->lhs == b.node_->lhs && a.node_->rhs == b.node_->rhs;
  }
  return false;
}

bool Formula::is_modal() const {
  if (!node_) return false;
  switch (node_->kind) {
    case FKind::Box:
    case FKind::Bbox: return true;
    case FKind::Var:
    case FKind::Top:
    case FKind::Bot: return false;
    case FKind::Neg:
    case FKind::Lneg: return node_->lhs.is_modal();
    case FKind::Meet:
    case FKind::Join: return node_->lhs.is_modal() || node_->rhs.is_modal();
  }
  return false;
}

namespace {
void collect_vars(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FKind::Var: out.push_back(f.name()); return;
    case FKind::Top:
    case FKind::Bot: return;
    case FKind::Neg:
    case FKind::Lneg:
    case FKind::Box:
    case FKind::Bbox: collect_vars(f.left(), out); return;
    case FKind::Meet:
    case FKind::Join:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      return;
  }
}
}  // namespace

std::vector<std::string> Formula::variables() const {
  std::vector<std::string> out;
  collect_vars(*this, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {
// binding strength: unary 3, meet 2, join 1
int strength(FKind k) {
  switch (k) {
    case FKind::Meet: return 2;
    case FKind::Join: return 1;
    default: return 3;
  }
}

void print_rec(const Formula& f, int parent_strength, std::string& out) {
  switch (f.kind()) {
    case FKind::Var: out += f.name(); return;
    case FKind::Top: out += "top"; return;
    case FKind::Bot: out += "bot"; return;
    case FKind::Neg:
    case FKind::Lneg:
    case FKind::Box:
    case FKind::Bbox: {
      out += f.kind() == FKind::Neg    ? "!"
             : f.kind() == FKind::Lneg ? "~"
             : f.kind() == FKind::Box  ? "#"
                                       : "$";
      print_rec(f.left(), 3, out);
      return;
    }
    case FKind::Meet:
    case FKind::Join: {
      int s = strength(f.kind());
      bool parens = s < parent_strength;
      if (parens) out += "(";
      print_rec(f.left(), s, out);
      out += f.kind() == FKind::Meet ? " & " : " | ";
      // left associative: the right child needs parentheses at equal strength
      print_rec(f.right(), s + 1, out);
      if (parens) out += ")";
      return;
    }
  }
}
}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

std::string print(const Sequent& s) { return print(s.left) + " |- " + print(s.right); }

}  // namespace kcw::logic
