#include "axioms.hpp"

#include "parser.hpp"

namespace kcw::logic {

namespace {

struct SchemaSpec {
  const char* id;
  const char* text;  // left |- right
  bool bidirectional;
};

constexpr SchemaSpec kCdblSchemas[] = {
    {"1", "alpha |- alpha", false},
    {"2a", "alpha & beta |- alpha", false},
    {"2b", "alpha |- alpha | beta", false},
    {"3a", "alpha & beta |- beta", false},
    {"3b", "beta |- alpha | beta", false},
    {"4a", "alpha & beta |- (alpha & beta) & (alpha & beta)", false},
    {"4b", "(alpha | beta) | (alpha | beta) |- alpha | beta", false},
    {"5a", "!(alpha & alpha) |- !alpha", false},
    {"5b", "~alpha |- ~(alpha | alpha)", false},
    {"6a", "alpha & !alpha |- bot", false},
    {"6b", "top |- alpha | ~alpha", false},
    {"7a", "!!(alpha & beta) |- alpha & beta", true},
    {"7b", "~~(alpha | beta) |- alpha | beta", true},
    {"8a", "alpha & alpha |- alpha & (alpha | beta)", false},
    {"8b", "alpha | (alpha & beta) |- alpha | alpha", false},
    {"9a", "alpha & alpha |- alpha & (alpha v beta)", false},
    {"9b", "alpha | (alpha ^ beta) |- alpha | alpha", false},
    {"10a", "alpha & (beta v gamma) |- (alpha & beta) v (alpha & gamma)", true},
    {"10b", "alpha | (beta ^ gamma) |- (alpha | beta) ^ (alpha | gamma)", true},
    {"11a", "bot |- alpha", false},
    {"11b", "alpha |- top", false},
    {"12a", "!top |- bot", false},
    {"12b", "top |- ~bot", false},
    {"13a", "!bot |- top & top", true},
    {"13b", "~top |- bot | bot", true},
    {"14", "(alpha | alpha) & (alpha | alpha) |- (alpha & alpha) | (alpha & alpha)", true},
};

constexpr SchemaSpec kMcdblSchemas[] = {
    {"15a", "#alpha & #beta |- #(alpha & beta)", true},
    {"15b", "$alpha | $beta |- $(alpha | beta)", true},
    {"16a", "#!bot |- !bot", true},
    {"16b", "$~top |- ~top", true},
    {"17a", "#(alpha & alpha) |- #alpha", true},
    {"17b", "$(alpha | alpha) |- $alpha", true},
};

constexpr SchemaSpec kMcdbl4Schemas[] = {
    {"18a", "#alpha |- alpha", false},
    {"18b", "alpha |- $alpha", false},
    {"19a", "##alpha |- #alpha", true},
    {"19b", "$$alpha |- $alpha", true},
};

std::vector<AxiomSchema> build(std::initializer_list<const SchemaSpec*> groups,
                               std::initializer_list<size_t> counts) {
  std::vector<AxiomSchema> out;
  auto count_it = counts.begin();
  for (const SchemaSpec* group : groups) {
    for (size_t i = 0; i < *count_it; ++i)
      out.push_back({group[i].id, parse_sequent(group[i].text), group[i].bidirectional});
    ++count_it;
  }
  return out;
}

System make_system(std::string name, bool modal, std::vector<AxiomSchema> axioms);

}  // namespace

struct SystemAccess {
  static System make(std::string name, bool modal, std::vector<AxiomSchema> axioms) {
    System s;
    s.name_ = std::move(name);
    s.modal_ = modal;
    s.axioms_ = std::move(axioms);
    return s;
  }
};

namespace {
System make_system(std::string name, bool modal, std::vector<AxiomSchema> axioms) {
  return SystemAccess::make(std::move(name), modal, std::move(axioms));
}
}  // namespace

const System& System::cdbl() {
  static const System sys =
      make_system("CDBL", false, build({kCdblSchemas}, {std::size(kCdblSchemas)}));
  return sys;
}

const System& System::mcdbl() {
  static const System sys = make_system(
      "MCDBL", true,
      build({kCdblSchemas, kMcdblSchemas}, {std::size(kCdblSchemas), std::size(kMcdblSchemas)}));
  return sys;
}

const System& System::mcdbl4() {
  static const System sys =
      make_system("MCDBL4", true,
                  build({kCdblSchemas, kMcdblSchemas, kMcdbl4Schemas},
                        {std::size(kCdblSchemas), std::size(kMcdblSchemas), std::size(kMcdbl4Schemas)}));
  return sys;
}

System System::mcdbl_sigma(const std::vector<Sequent>& sigma, std::string name) {
  std::vector<AxiomSchema> axioms = mcdbl().axioms();
  for (size_t i = 0; i < sigma.size(); ++i)
    axioms.push_back({"sigma" + std::to_string(i + 1), sigma[i], false});
  return make_system(std::move(name), true, std::move(axioms));
}

const AxiomSchema* System::find_axiom(const std::string& id) const {
  for (const auto& a : axioms_)
    if (a.id == id) return &a;
  return nullptr;
}

bool System::allows_rule(const std::string& rule) const {
  if (rule == "R1" || rule == "R1'" || rule == "R2" || rule == "R2'" || rule == "R3" ||
      rule == "R3'" || rule == "R4" || rule == "R5" || rule == "R6" || rule == "R7")
    return true;
  if (rule == "R8" || rule == "R9") return modal_;
  return false;
}

const System& system_by_name(const std::string& name) {
  if (name == "cdbl" || name == "CDBL") return System::cdbl();
  if (name == "mcdbl" || name == "MCDBL") return System::mcdbl();
  if (name == "mcdbl4" || name == "MCDBL4") return System::mcdbl4();
  fail(ErrorCode::invalid_argument, "unknown system: " + name);
}

namespace {
bool match_rec(const Formula& schema, const Formula& target, Substitution& subst) {
  if (schema.kind() == FKind::Var) {
    auto [it, inserted] = subst.emplace(schema.name(), target);
    return inserted || it->second == target;
  }
  if (schema.kind() != target.kind()) return false;
  switch (schema.kind()) {
    case FKind::Top:
    case FKind::Bot: return true;
    case FKind::Neg:
    case FKind::Lneg:
    case FKind::Box:
    case FKind::Bbox: return match_rec(schema.left(), target.left(), subst);
    case FKind::Meet:
    case FKind::Join:
      return match_rec(schema.left(), target.left(), subst) &&
             match_rec(schema.right(), target.right(), subst);
    case FKind::Var: break;
  }
  return false;
}
}  // namespace

std::optional<Substitution> match_schema(const AxiomSchema& schema, const Sequent& seq) {
  Substitution subst;
  if (match_rec(schema.schema.left, seq.left, subst) &&
      match_rec(schema.schema.right, seq.right, subst))
    return subst;
  if (schema.bidirectional) {
    subst.clear();
    if (match_rec(schema.schema.left, seq.right, subst) &&
        match_rec(schema.schema.right, seq.left, subst))
      return subst;
  }
  return std::nullopt;
}

std::optional<Substitution> match_axiom(const System& system, const std::string& axiom_id,
                                        const Sequent& seq) {
  const AxiomSchema* schema = system.find_axiom(axiom_id);
  if (!schema)
    fail(ErrorCode::invalid_argument, "unknown axiom '" + axiom_id + "' in " + system.name());
  return match_schema(*schema, seq);
}

Formula substitute(const Formula& schema, const Substitution& subst) {
  switch (schema.kind()) {
    case FKind::Var: {
      auto it = subst.find(schema.name());
      if (it == subst.end()) fail(ErrorCode::unbound_variable, "unbound metavariable " + schema.name());
      return it->second;
    }
    case FKind::Top: return Formula::top();
    case FKind::Bot: return Formula::bot();
    case FKind::Neg: return Formula::neg(substitute(schema.left(), subst));
    case FKind::Lneg: return Formula::lneg(substitute(schema.left(), subst));
    case FKind::Box: return Formula::box(substitute(schema.left(), subst));
    case FKind::Bbox: return Formula::bbox(substitute(schema.left(), subst));
    case FKind::Meet:
      return Formula::meet(substitute(schema.left(), subst), substitute(schema.right(), subst));
    case FKind::Join:
      return Formula::join(substitute(schema.left(), subst), substitute(schema.right(), subst));
  }
  fail(ErrorCode::invalid_argument, "bad schema");
}

}  // namespace kcw::logic
