#include "dba.hpp"

#include <algorithm>
#include <functional>

#include "kripke.hpp"

namespace kcw {

void Dba::validate_shape() const {
  if (n < 1 || n > 65535) fail(ErrorCode::malformed_input, "carrier size out of range");
  size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
  if (meet_t.size() != nn || join_t.size() != nn)
    fail(ErrorCode::malformed_input, "binary table has wrong size");
  if (neg_t.size() != static_cast<size_t>(n) || lneg_t.size() != static_cast<size_t>(n))
    fail(ErrorCode::malformed_input, "unary table has wrong size");
  if (i_t.empty() != c_t.empty())
    fail(ErrorCode::malformed_input, "operator tables must be given together");
  if (!i_t.empty() && (i_t.size() != static_cast<size_t>(n) || c_t.size() != static_cast<size_t>(n)))
    fail(ErrorCode::malformed_input, "operator table has wrong size");
  auto in_range = [&](Elem e) { return static_cast<int>(e) < n; };
  if (!in_range(top) || !in_range(bot)) fail(ErrorCode::malformed_input, "constant out of range");
  for (Elem e : meet_t)
    if (!in_range(e)) fail(ErrorCode::malformed_input, "meet table entry out of range");
  for (Elem e : join_t)
    if (!in_range(e)) fail(ErrorCode::malformed_input, "join table entry out of range");
  for (Elem e : neg_t)
    if (!in_range(e)) fail(ErrorCode::malformed_input, "negation table entry out of range");
  for (Elem e : lneg_t)
    if (!in_range(e)) fail(ErrorCode::malformed_input, "negation table entry out of range");
  for (Elem e : i_t)
    if (!in_range(e)) fail(ErrorCode::malformed_input, "I table entry out of range");
  for (Elem e : c_t)
    if (!in_range(e)) fail(ErrorCode::malformed_input, "C table entry out of range");
}

bool quasi_leq(const Dba& alg, int x, int y) {
  return alg.meet(x, y) == alg.meet(x, x) && alg.join(x, y) == alg.join(y, y);
}

Elem dual_i(const Dba& alg, int x) { return alg.neg(alg.op_i(alg.neg(x))); }
Elem dual_c(const Dba& alg, int x) { return alg.lneg(alg.op_c(alg.lneg(x))); }

Level parse_level(const std::string& name) {
  if (name == "dba") return Level::Dba;
  if (name == "contextual") return Level::Contextual;
  if (name == "pure") return Level::Pure;
  if (name == "dbao") return Level::Dbao;
  if (name == "topological") return Level::Topological;
  fail(ErrorCode::invalid_argument, "unknown level: " + name);
}

std::string level_name(Level level) {
  switch (level) {
    case Level::Dba: return "dba";
    case Level::Contextual: return "contextual";
    case Level::Pure: return "pure";
    case Level::Dbao: return "dbao";
    case Level::Topological: return "topological";
  }
  return "?";
}

const AxiomResult* AxiomReport::find(const std::string& id) const {
  for (const auto& a : axioms)
    if (a.id == id) return &a;
  return nullptr;
}

namespace {

struct AxiomDef {
  const char* id;
  int arity;  // 0..3
  bool (*holds)(const Dba&, int, int, int);
};

constexpr AxiomDef kDbaAxioms[] = {
    {"1a", 2, [](const Dba& d, int x, int y, int) { return d.meet(d.meet(x, x), y) == d.meet(x, y); }},
    {"1b", 2, [](const Dba& d, int x, int y, int) { return d.join(d.join(x, x), y) == d.join(x, y); }},
    {"2a", 2, [](const Dba& d, int x, int y, int) { return d.meet(x, y) == d.meet(y, x); }},
    {"2b", 2, [](const Dba& d, int x, int y, int) { return d.join(x, y) == d.join(y, x); }},
    {"3a", 3,
     [](const Dba& d, int x, int y, int z) { return d.meet(x, d.meet(y, z)) == d.meet(d.meet(x, y), z); }},
    {"3b", 3,
     [](const Dba& d, int x, int y, int z) { return d.join(x, d.join(y, z)) == d.join(d.join(x, y), z); }},
    {"4a", 1, [](const Dba& d, int x, int, int) { return d.neg(d.meet(x, x)) == d.neg(x); }},
    {"4b", 1, [](const Dba& d, int x, int, int) { return d.lneg(d.join(x, x)) == d.lneg(x); }},
    {"5a", 2, [](const Dba& d, int x, int y, int) { return d.meet(x, d.join(x, y)) == d.meet(x, x); }},
    {"5b", 2, [](const Dba& d, int x, int y, int) { return d.join(x, d.meet(x, y)) == d.join(x, x); }},
    {"6a", 3,
     [](const Dba& d, int x, int y, int z) {
       return d.meet(x, d.vee(y, z)) == d.vee(d.meet(x, y), d.meet(x, z));
     }},
    {"6b", 3,
     [](const Dba& d, int x, int y, int z) {
       return d.join(x, d.wedge(y, z)) == d.wedge(d.join(x, y), d.join(x, z));
     }},
    {"7a", 2, [](const Dba& d, int x, int y, int) { return d.meet(x, d.vee(x, y)) == d.meet(x, x); }},
    {"7b", 2, [](const Dba& d, int x, int y, int) { return d.join(x, d.wedge(x, y)) == d.join(x, x); }},
    {"8a", 2, [](const Dba& d, int x, int y, int) { return d.neg(d.neg(d.meet(x, y))) == d.meet(x, y); }},
    {"8b", 2,
     [](const Dba& d, int x, int y, int) { return d.lneg(d.lneg(d.join(x, y))) == d.join(x, y); }},
    {"9a", 1, [](const Dba& d, int x, int, int) { return d.meet(x, d.neg(x)) == d.bot; }},
    {"9b", 1, [](const Dba& d, int x, int, int) { return d.join(x, d.lneg(x)) == d.top; }},
    {"10a", 0, [](const Dba& d, int, int, int) { return d.neg(d.bot) == d.meet(d.top, d.top); }},
    {"10b", 0, [](const Dba& d, int, int, int) { return d.lneg(d.top) == d.join(d.bot, d.bot); }},
    {"11a", 0, [](const Dba& d, int, int, int) { return d.neg(d.top) == d.bot; }},
    {"11b", 0, [](const Dba& d, int, int, int) { return d.lneg(d.bot) == d.top; }},
    {"12", 1,
     [](const Dba& d, int x, int, int) {
       return d.join(d.meet(x, x), d.meet(x, x)) == d.meet(d.join(x, x), d.join(x, x));
     }},
};

constexpr AxiomDef kContextualAxiom = {
    "contextual", 2,
    [](const Dba& d, int x, int y, int) { return !(quasi_leq(d, x, y) && quasi_leq(d, y, x)) || x == y; }};

constexpr AxiomDef kPureAxiom = {
    "pure", 1, [](const Dba& d, int x, int, int) { return d.meet(x, x) == x || d.join(x, x) == x; }};

constexpr AxiomDef kDbaoAxioms[] = {
    {"O1a", 2,
     [](const Dba& d, int x, int y, int) { return d.op_i(d.meet(x, y)) == d.meet(d.op_i(x), d.op_i(y)); }},
    {"O1b", 2,
     [](const Dba& d, int x, int y, int) { return d.op_c(d.join(x, y)) == d.join(d.op_c(x), d.op_c(y)); }},
    {"O2a", 0, [](const Dba& d, int, int, int) { return d.op_i(d.neg(d.bot)) == d.neg(d.bot); }},
    {"O2b", 0, [](const Dba& d, int, int, int) { return d.op_c(d.lneg(d.top)) == d.lneg(d.top); }},
    {"O3a", 1, [](const Dba& d, int x, int, int) { return d.op_i(d.meet(x, x)) == d.op_i(x); }},
    {"O3b", 1, [](const Dba& d, int x, int, int) { return d.op_c(d.join(x, x)) == d.op_c(x); }},
    {"mono-I", 2,
     [](const Dba& d, int x, int y, int) { return !quasi_leq(d, x, y) || quasi_leq(d, d.op_i(x), d.op_i(y)); }},
    {"mono-C", 2,
     [](const Dba& d, int x, int y, int) { return !quasi_leq(d, x, y) || quasi_leq(d, d.op_c(x), d.op_c(y)); }},
};

constexpr AxiomDef kTopologicalAxioms[] = {
    {"T4a", 1, [](const Dba& d, int x, int, int) { return quasi_leq(d, d.op_i(x), x); }},
    {"T4b", 1, [](const Dba& d, int x, int, int) { return quasi_leq(d, x, d.op_c(x)); }},
    {"T5a", 1, [](const Dba& d, int x, int, int) { return d.op_i(d.op_i(x)) == d.op_i(x); }},
    {"T5b", 1, [](const Dba& d, int x, int, int) { return d.op_c(d.op_c(x)) == d.op_c(x); }},
};

AxiomResult run_axiom(const Dba& alg, const AxiomDef& def) {
  AxiomResult res;
  res.id = def.id;
  int n = alg.n;
  auto record = [&](int x, int y, int z) {
    res.pass = false;
    res.witness.assign({x, y, z});
    res.witness.resize(static_cast<size_t>(def.arity));
  };
  switch (def.arity) {
    case 0:
      if (!def.holds(alg, 0, 0, 0)) record(0, 0, 0);
      break;
    case 1:
      for (int x = 0; x < n; ++x)
        if (!def.holds(alg, x, 0, 0)) {
          record(x, 0, 0);
          return res;
        }
      break;
    case 2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!def.holds(alg, x, y, 0)) {
            record(x, y, 0);
            return res;
          }
      break;
    case 3:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (!def.holds(alg, x, y, z)) {
              record(x, y, z);
              return res;
            }
      break;
  }
  return res;
}

}  // namespace

AxiomReport check_axioms(const Dba& alg, Level level) {
  alg.validate_shape();
  bool needs_ops = level == Level::Dbao || level == Level::Topological;
  if (needs_ops && !alg.has_operators())
    fail(ErrorCode::malformed_input, "level requires operator tables");

  AxiomReport report;
  report.level = level;
  for (const auto& def : kDbaAxioms) report.axioms.push_back(run_axiom(alg, def));
  if (level == Level::Contextual) report.axioms.push_back(run_axiom(alg, kContextualAxiom));
  if (level == Level::Pure) report.axioms.push_back(run_axiom(alg, kPureAxiom));
  if (needs_ops)
    for (const auto& def : kDbaoAxioms) report.axioms.push_back(run_axiom(alg, def));
  if (level == Level::Topological)
    for (const auto& def : kTopologicalAxioms) report.axioms.push_back(run_axiom(alg, def));
  report.pass = std::all_of(report.axioms.begin(), report.axioms.end(),
                            [](const AxiomResult& r) { return r.pass; });
  return report;
}

StructureParts structure_parts(const Dba& alg) {
  AxiomReport base = check_axioms(alg, Level::Dba);
  if (!base.pass) fail(ErrorCode::invalid_argument, "algebra does not pass the dba level");

  StructureParts parts;
  std::vector<char> in_meet(static_cast<size_t>(alg.n), 0), in_join(static_cast<size_t>(alg.n), 0);
  for (int x = 0; x < alg.n; ++x) {
    if (alg.meet(x, x) == x) {
      parts.d_meet.push_back(x);
      in_meet[static_cast<size_t>(x)] = 1;
    }
    if (alg.join(x, x) == x) {
      parts.d_join.push_back(x);
      in_join[static_cast<size_t>(x)] = 1;
    }
  }
  auto pure = [&](int x) { return in_meet[static_cast<size_t>(x)] || in_join[static_cast<size_t>(x)]; };
  for (int x = 0; x < alg.n; ++x)
    if (pure(x)) parts.d_pure.push_back(x);

  parts.pure_closed = pure(alg.top) && pure(alg.bot);
  for (int x : parts.d_pure) {
    if (!pure(alg.neg(x)) || !pure(alg.lneg(x))) parts.pure_closed = false;
    if (alg.has_operators() && (!pure(alg.op_i(x)) || !pure(alg.op_c(x)))) parts.pure_closed = false;
    for (int y : parts.d_pure)
      if (!pure(alg.meet(x, y)) || !pure(alg.join(x, y))) parts.pure_closed = false;
  }

  // Boolean laws of (D_meet, meet, vee, neg, bot, neg bot).
  {
    bool ok = in_meet[alg.bot] && in_meet[alg.neg(alg.bot)];
    Elem one = alg.neg(alg.bot);
    for (int a : parts.d_meet) {
      if (!in_meet[alg.neg(a)]) ok = false;
      if (alg.meet(a, alg.neg(a)) != alg.bot || alg.vee(a, alg.neg(a)) != one) ok = false;
      if (alg.meet(a, one) != a || alg.vee(a, alg.bot) != a) ok = false;
      for (int b : parts.d_meet) {
        if (!in_meet[alg.meet(a, b)] || !in_meet[alg.vee(a, b)]) ok = false;
        if (alg.meet(a, b) != alg.meet(b, a) || alg.vee(a, b) != alg.vee(b, a)) ok = false;
        if (alg.meet(a, alg.vee(a, b)) != a || alg.vee(a, alg.meet(a, b)) != a) ok = false;
        for (int c : parts.d_meet) {
          if (alg.meet(a, alg.vee(b, c)) != alg.vee(alg.meet(a, b), alg.meet(a, c))) ok = false;
          if (alg.vee(a, alg.meet(b, c)) != alg.meet(alg.vee(a, b), alg.vee(a, c))) ok = false;
        }
      }
    }
    parts.meet_extract_boolean = ok;
    if (ok && alg.has_operators()) {
      bool bao = true;
      for (int a : parts.d_meet) {
        if (!in_meet[dual_i(alg, a)]) bao = false;
        for (int b : parts.d_meet)
          if (dual_i(alg, alg.vee(a, b)) != alg.vee(dual_i(alg, a), dual_i(alg, b))) bao = false;
      }
      if (dual_i(alg, alg.bot) != alg.bot) bao = false;
      parts.meet_extract_bao = bao;
    }
  }

  // Boolean laws of (D_join, join, wedge, lneg, top, lneg top).
  {
    bool ok = in_join[alg.top] && in_join[alg.lneg(alg.top)];
    Elem zero = alg.lneg(alg.top);
    for (int a : parts.d_join) {
      if (!in_join[alg.lneg(a)]) ok = false;
      if (alg.join(a, alg.lneg(a)) != alg.top || alg.wedge(a, alg.lneg(a)) != zero) ok = false;
      if (alg.join(a, zero) != a || alg.wedge(a, alg.top) != a) ok = false;
      for (int b : parts.d_join) {
        if (!in_join[alg.join(a, b)] || !in_join[alg.wedge(a, b)]) ok = false;
        if (alg.join(a, b) != alg.join(b, a) || alg.wedge(a, b) != alg.wedge(b, a)) ok = false;
        if (alg.join(a, alg.wedge(a, b)) != a || alg.wedge(a, alg.join(a, b)) != a) ok = false;
        for (int c : parts.d_join) {
          if (alg.join(a, alg.wedge(b, c)) != alg.wedge(alg.join(a, b), alg.join(a, c))) ok = false;
          if (alg.wedge(a, alg.join(b, c)) != alg.join(alg.wedge(a, b), alg.wedge(a, c))) ok = false;
        }
      }
    }
    parts.join_extract_boolean = ok;
    if (ok && alg.has_operators()) {
      bool bao = true;
      for (int a : parts.d_join) {
        if (!in_join[alg.op_c(a)]) bao = false;
        for (int b : parts.d_join)
          if (alg.op_c(alg.join(a, b)) != alg.join(alg.op_c(a), alg.op_c(b))) bao = false;
      }
      if (alg.op_c(alg.lneg(alg.top)) != alg.lneg(alg.top)) bao = false;
      parts.join_extract_bao = bao;
    }
  }
  return parts;
}

bool is_filter(const Dba& alg, Mask f) {
  if (!f) return false;
  for (int x : mask_indices(f)) {
    for (int y : mask_indices(f))
      if (!has_bit(f, alg.meet(x, y))) return false;
    for (int z = 0; z < alg.n; ++z)
      if (quasi_leq(alg, x, z) && !has_bit(f, z)) return false;
  }
  return true;
}

bool is_ideal(const Dba& alg, Mask f) {
  if (!f) return false;
  for (int x : mask_indices(f)) {
    for (int y : mask_indices(f))
      if (!has_bit(f, alg.join(x, y))) return false;
    for (int z = 0; z < alg.n; ++z)
      if (quasi_leq(alg, z, x) && !has_bit(f, z)) return false;
  }
  return true;
}

bool is_primary_filter(const Dba& alg, Mask f) {
  if (!is_filter(alg, f) || f == full_mask(alg.n)) return false;
  for (int x = 0; x < alg.n; ++x)
    if (!has_bit(f, x) && !has_bit(f, alg.neg(x))) return false;
  return true;
}

bool is_primary_ideal(const Dba& alg, Mask f) {
  if (!is_ideal(alg, f) || f == full_mask(alg.n)) return false;
  for (int x = 0; x < alg.n; ++x)
    if (!has_bit(f, x) && !has_bit(f, alg.lneg(x))) return false;
  return true;
}

namespace {

std::vector<int> part_members(const Dba& alg, bool meet_side) {
  std::vector<int> out;
  for (int x = 0; x < alg.n; ++x)
    if ((meet_side ? alg.meet(x, x) : alg.join(x, x)) == x) out.push_back(x);
  return out;
}

// Is f (a subset of D_meet) a prime filter of the Boolean meet part?
bool is_prime_part_filter(const Dba& alg, const std::vector<int>& d_meet, Mask f) {
  Mask part = 0;
  for (int x : d_meet) part = with_bit(part, x);
  if (!subset(f, part) || !f || f == part) return false;
  for (int x : mask_indices(f)) {
    for (int y : mask_indices(f))
      if (!has_bit(f, alg.meet(x, y))) return false;
    for (int z : d_meet)
      if (quasi_leq(alg, x, z) && !has_bit(f, z)) return false;
  }
  for (int x : d_meet)
    if (has_bit(f, x) == has_bit(f, alg.neg(x))) return false;
  return true;
}

bool is_prime_part_ideal(const Dba& alg, const std::vector<int>& d_join, Mask f) {
  Mask part = 0;
  for (int x : d_join) part = with_bit(part, x);
  if (!subset(f, part) || !f || f == part) return false;
  for (int x : mask_indices(f)) {
    for (int y : mask_indices(f))
      if (!has_bit(f, alg.join(x, y))) return false;
    for (int z : d_join)
      if (quasi_leq(alg, z, x) && !has_bit(f, z)) return false;
  }
  for (int x : d_join)
    if (has_bit(f, x) == has_bit(f, alg.lneg(x))) return false;
  return true;
}

}  // namespace

FiltersReport filters_ideals(const Dba& alg, const Budgets& budgets) {
  alg.validate_shape();
  if (alg.n > budgets.filter_scan_max || alg.n > 62)
    fail(ErrorCode::budget_exceeded, "filter enumeration budget exceeded");
  FiltersReport rep;
  std::vector<int> d_meet = part_members(alg, true);
  std::vector<int> d_join = part_members(alg, false);
  Mask meet_mask = 0, join_mask = 0;
  for (int x : d_meet) meet_mask = with_bit(meet_mask, x);
  for (int x : d_join) join_mask = with_bit(join_mask, x);

  std::vector<Mask> fp_class, ip_class;
  for (Mask f = 1; f <= full_mask(alg.n); ++f) {
    if (is_filter(alg, f)) {
      rep.filters.push_back(f);
      if (is_primary_filter(alg, f)) rep.primary_filters.push_back(f);
      if (is_prime_part_filter(alg, d_meet, f & meet_mask)) fp_class.push_back(f);
    }
    if (is_ideal(alg, f)) {
      rep.ideals.push_back(f);
      if (is_primary_ideal(alg, f)) rep.primary_ideals.push_back(f);
      if (is_prime_part_ideal(alg, d_join, f & join_mask)) ip_class.push_back(f);
    }
  }
  rep.fp_equals_fpr = fp_class == rep.primary_filters && ip_class == rep.primary_ideals;
  return rep;
}

Mask generated_filter(const Dba& alg, Mask f, int x) {
  if (!subset(f, full_mask(alg.n)) || x < 0 || x >= alg.n)
    fail(ErrorCode::invalid_argument, "filter seed out of range");
  Mask cur = with_bit(f, x);
  for (;;) {
    Mask next = cur;
    for (int a : mask_indices(cur))
      for (int b : mask_indices(cur)) next = with_bit(next, alg.meet(a, b));
    for (int a : mask_indices(cur))
      for (int z = 0; z < alg.n; ++z)
        if (quasi_leq(alg, a, z)) next = with_bit(next, z);
    if (next == cur) return cur;
    cur = next;
  }
}

Mask generated_filter_formula(const Dba& alg, Mask f, int x) {
  Mask out = 0;
  for (int a = 0; a < alg.n; ++a)
    for (int w : mask_indices(f))
      if (quasi_leq(alg, alg.meet(x, w), a)) {
        out = with_bit(out, a);
        break;
      }
  return out;
}

Mask generated_ideal(const Dba& alg, Mask f, int x) {
  if (!subset(f, full_mask(alg.n)) || x < 0 || x >= alg.n)
    fail(ErrorCode::invalid_argument, "ideal seed out of range");
  Mask cur = with_bit(f, x);
  for (;;) {
    Mask next = cur;
    for (int a : mask_indices(cur))
      for (int b : mask_indices(cur)) next = with_bit(next, alg.join(a, b));
    for (int a : mask_indices(cur))
      for (int z = 0; z < alg.n; ++z)
        if (quasi_leq(alg, z, a)) next = with_bit(next, z);
    if (next == cur) return cur;
    cur = next;
  }
}

Mask generated_ideal_formula(const Dba& alg, Mask f, int x) {
  Mask out = 0;
  for (int a = 0; a < alg.n; ++a)
    for (int w : mask_indices(f))
      if (quasi_leq(alg, a, alg.join(x, w))) {
        out = with_bit(out, a);
        break;
      }
  return out;
}

std::vector<Mask> primary_filters(const Dba& alg) {
  alg.validate_shape();
  if (alg.n > 62) fail(ErrorCode::budget_exceeded, "carrier too large for mask-based filters");
  std::vector<int> d_meet = part_members(alg, true);
  Elem bottom = alg.meet(alg.bot, alg.bot);
  std::vector<Mask> out;
  for (int a : d_meet) {
    if (a == bottom) continue;
    bool atom = true;
    for (int b : d_meet)
      if (b != a && b != bottom && quasi_leq(alg, b, a)) atom = false;
    if (!atom) continue;
    // Lift the prime filter above this atom: x belongs iff x meet x does.
    Mask f = 0;
    for (int x = 0; x < alg.n; ++x)
      if (quasi_leq(alg, a, alg.meet(x, x))) f = with_bit(f, x);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> primary_ideals(const Dba& alg) {
  alg.validate_shape();
  if (alg.n > 62) fail(ErrorCode::budget_exceeded, "carrier too large for mask-based ideals");
  std::vector<int> d_join = part_members(alg, false);
  Elem top = alg.join(alg.top, alg.top);
  std::vector<Mask> out;
  for (int a : d_join) {
    if (a == top) continue;
    bool coatom = true;
    for (int b : d_join)
      if (b != a && b != top && quasi_leq(alg, a, b)) coatom = false;
    if (!coatom) continue;
    Mask f = 0;
    for (int x = 0; x < alg.n; ++x)
      if (quasi_leq(alg, alg.join(x, x), a)) f = with_bit(f, x);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StandardContext standard_context(const Dba& alg) {
  std::vector<Mask> fp = primary_filters(alg);
  std::vector<Mask> ip = primary_ideals(alg);
  if (fp.size() > 64 || ip.size() > 64)
    fail(ErrorCode::budget_exceeded, "standard context exceeds 64 rows or columns");
  std::vector<std::string> objects, attributes;
  for (size_t i = 0; i < fp.size(); ++i) objects.push_back("F" + std::to_string(i));
  for (size_t i = 0; i < ip.size(); ++i) attributes.push_back("I" + std::to_string(i));
  // F delta I iff F and I intersect; the representation lemmas pin this
  // orientation (the disjointness variant breaks F_x' = I_{x meet-join}
  // already on the two-element Boolean algebra).
  std::vector<Mask> rows(fp.size(), 0);
  for (size_t i = 0; i < fp.size(); ++i)
    for (size_t j = 0; j < ip.size(); ++j)
      if ((fp[i] & ip[j]) != 0) rows[i] = with_bit(rows[i], static_cast<int>(j));

  StandardContext sc{Context(std::move(objects), std::move(attributes), std::move(rows)),
                     std::move(fp), std::move(ip), false};

  bool ok = true;
  for (int x = 0; x < alg.n; ++x) {
    Elem x_mj = alg.join(alg.meet(x, x), alg.meet(x, x));
    Elem x_jm = alg.meet(alg.join(x, x), alg.join(x, x));
    if (sc.ctx.derive_objects(filters_containing(sc, x)) != ideals_containing(sc, x_mj)) ok = false;
    if (sc.ctx.derive_attributes(ideals_containing(sc, x)) != filters_containing(sc, x_jm)) ok = false;
  }
  sc.derivation_lemma_ok = ok;
  return sc;
}

Mask filters_containing(const StandardContext& sc, int x) {
  Mask out = 0;
  for (size_t i = 0; i < sc.fp.size(); ++i)
    if (has_bit(sc.fp[i], x)) out = with_bit(out, static_cast<int>(i));
  return out;
}

Mask ideals_containing(const StandardContext& sc, int x) {
  Mask out = 0;
  for (size_t i = 0; i < sc.ip.size(); ++i)
    if (has_bit(sc.ip[i], x)) out = with_bit(out, static_cast<int>(i));
  return out;
}

CanonicalKc::CanonicalKc() = default;
CanonicalKc::CanonicalKc(CanonicalKc&&) noexcept = default;
CanonicalKc& CanonicalKc::operator=(CanonicalKc&&) noexcept = default;
CanonicalKc::~CanonicalKc() = default;

CanonicalKc canonical_kripke_context(const Dba& alg) {
  if (!alg.has_operators()) fail(ErrorCode::invalid_argument, "canonical Kripke context needs I and C");
  CanonicalKc out;
  out.sc = standard_context(alg);
  const auto& fp = out.sc.fp;
  const auto& ip = out.sc.ip;

  auto related_r = [&](Mask u, Mask u1) {
    for (int a : mask_indices(u1))
      if (!has_bit(u, dual_i(alg, a))) return false;
    return true;
  };
  auto related_s = [&](Mask v, Mask v1) {
    for (int a : mask_indices(v1))
      if (!has_bit(v, dual_c(alg, a))) return false;
    return true;
  };
  auto related_r_alt = [&](Mask u, Mask u1) {
    for (int a = 0; a < alg.n; ++a)
      if (has_bit(u, alg.op_i(a)) && !has_bit(u1, a)) return false;
    return true;
  };
  auto related_s_alt = [&](Mask v, Mask v1) {
    for (int a = 0; a < alg.n; ++a)
      if (has_bit(v, alg.op_c(a)) && !has_bit(v1, a)) return false;
    return true;
  };

  std::vector<Mask> r_rows(fp.size(), 0), s_rows(ip.size(), 0);
  bool alt_ok = true;
  for (size_t i = 0; i < fp.size(); ++i)
    for (size_t j = 0; j < fp.size(); ++j) {
      bool rel = related_r(fp[i], fp[j]);
      if (rel != related_r_alt(fp[i], fp[j])) alt_ok = false;
      if (rel) r_rows[i] = with_bit(r_rows[i], static_cast<int>(j));
    }
  for (size_t i = 0; i < ip.size(); ++i)
    for (size_t j = 0; j < ip.size(); ++j) {
      bool rel = related_s(ip[i], ip[j]);
      if (rel != related_s_alt(ip[i], ip[j])) alt_ok = false;
      if (rel) s_rows[i] = with_bit(s_rows[i], static_cast<int>(j));
    }
  out.alternate_characterisation_ok = alt_ok;

  out.kc = std::make_unique<KripkeContext>(out.sc.ctx, r_rows, s_rows);

  ApproxSpace r_space = ApproxSpace::make(static_cast<int>(fp.size()), r_rows);
  ApproxSpace s_space = ApproxSpace::make(static_cast<int>(ip.size()), s_rows);
  bool approx_ok = true;
  for (int a = 0; a < alg.n; ++a) {
    Mask fa = filters_containing(out.sc, a);
    Mask ia = ideals_containing(out.sc, a);
    if (approx_upper(r_space, fa) != filters_containing(out.sc, dual_i(alg, a))) approx_ok = false;
    if (approx_lower(r_space, fa) != filters_containing(out.sc, alg.op_i(a))) approx_ok = false;
    if (approx_upper(s_space, ia) != ideals_containing(out.sc, dual_c(alg, a))) approx_ok = false;
    if (approx_lower(s_space, ia) != ideals_containing(out.sc, alg.op_c(a))) approx_ok = false;
  }
  out.approximation_identities_ok = approx_ok;

  RelationReport rr = relation_report(r_space);
  RelationReport sr = relation_report(s_space);
  out.reflexive_transitive = rr.preorder() && sr.preorder();
  return out;
}

RepresentationReport representation(const Dba& alg, const Budgets& budgets) {
  RepresentationReport rep;
  rep.canonical = canonical_kripke_context(alg);
  const KripkeContext& kc = *rep.canonical.kc;
  const Context& ctx = kc.ctx;

  std::vector<Protoconcept> protos = enumerate(ctx, KindFilter::Protoconcepts, budgets);
  auto member = [&](const Protoconcept& x) {
    return std::binary_search(protos.begin(), protos.end(), x);
  };

  rep.h.reserve(static_cast<size_t>(alg.n));
  for (int x = 0; x < alg.n; ++x) {
    Protoconcept hx{ctx.id(), filters_containing(rep.canonical.sc, x),
                    ideals_containing(rep.canonical.sc, x)};
    if (!member(hx)) fail(ErrorCode::verify_failed, "h(x) is not a protoconcept of the standard context");
    rep.h.push_back(hx);
  }
  auto h = [&](int x) -> const Protoconcept& { return rep.h[static_cast<size_t>(x)]; };

  rep.preserves_meet = rep.preserves_join = true;
  for (int x = 0; x < alg.n; ++x)
    for (int y = 0; y < alg.n; ++y) {
      if (h(alg.meet(x, y)) != proto_meet(ctx, h(x), h(y))) rep.preserves_meet = false;
      if (h(alg.join(x, y)) != proto_join(ctx, h(x), h(y))) rep.preserves_join = false;
    }
  rep.preserves_neg = rep.preserves_lneg = rep.preserves_i = rep.preserves_c = true;
  for (int x = 0; x < alg.n; ++x) {
    if (h(alg.neg(x)) != proto_neg(ctx, h(x))) rep.preserves_neg = false;
    if (h(alg.lneg(x)) != proto_lneg(ctx, h(x))) rep.preserves_lneg = false;
    if (h(alg.op_i(x)) != f_r(kc, h(x))) rep.preserves_i = false;
    if (h(alg.op_c(x)) != f_s(kc, h(x))) rep.preserves_c = false;
  }
  rep.preserves_top = h(alg.top) == proto_top(ctx);
  rep.preserves_bot = h(alg.bot) == proto_bot(ctx);

  rep.quasi_injective = true;
  rep.injective = true;
  for (int x = 0; x < alg.n; ++x)
    for (int y = x + 1; y < alg.n; ++y)
      if (h(x) == h(y)) {
        rep.injective = false;
        if (alg.meet(x, x) != alg.meet(y, y) || alg.join(x, x) != alg.join(y, y))
          rep.quasi_injective = false;
      }

  rep.contextual_input = check_axioms(alg, Level::Contextual).pass;

  rep.pure_into_semiconcepts = true;
  rep.pure_injective = true;
  std::vector<int> pure;
  for (int x = 0; x < alg.n; ++x)
    if (alg.meet(x, x) == x || alg.join(x, x) == x) pure.push_back(x);
  for (size_t i = 0; i < pure.size(); ++i) {
    const Protoconcept& hx = h(pure[i]);
    if (!is_semiconcept(ctx, hx.extent, hx.intent)) rep.pure_into_semiconcepts = false;
    for (size_t j = i + 1; j < pure.size(); ++j)
      if (hx == h(pure[j])) rep.pure_injective = false;
  }

  rep.topological_input = check_axioms(alg, Level::Topological).pass;
  rep.canonical_reflexive_transitive = rep.canonical.reflexive_transitive;
  return rep;
}

void validate_bao(const Bao& bao) {
  int n = bao.n;
  if (n < 1 || n > 65535) fail(ErrorCode::malformed_input, "Bao carrier size out of range");
  size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
  if (bao.join_t.size() != nn || bao.meet_t.size() != nn || bao.neg_t.size() != static_cast<size_t>(n) ||
      bao.f_t.size() != static_cast<size_t>(n))
    fail(ErrorCode::malformed_input, "Bao table has wrong size");
  auto check = [&](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::malformed_input, std::string("input is not a Bao: ") + what);
  };
  for (int a = 0; a < n; ++a) {
    check(bao.meet(a, bao.neg(a)) == bao.bot, "complement law");
    check(bao.join(a, bao.neg(a)) == bao.top, "complement law");
    check(bao.meet(a, bao.top) == a, "identity law");
    check(bao.join(a, bao.bot) == a, "identity law");
    for (int b = 0; b < n; ++b) {
      check(bao.meet(a, b) == bao.meet(b, a), "commutativity");
      check(bao.join(a, b) == bao.join(b, a), "commutativity");
      check(bao.meet(a, bao.join(a, b)) == a, "absorption");
      check(bao.join(a, bao.meet(a, b)) == a, "absorption");
      for (int c = 0; c < n; ++c) {
        check(bao.meet(a, bao.join(b, c)) == bao.join(bao.meet(a, b), bao.meet(a, c)), "distributivity");
        check(bao.join(a, bao.meet(b, c)) == bao.meet(bao.join(a, b), bao.join(a, c)), "distributivity");
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      check(bao.f(bao.join(a, b)) == bao.join(bao.f(a), bao.f(b)), "additivity of f");
  check(bao.f(bao.bot) == bao.bot, "normality of f");
}

Dba dbao_from_bao(const Bao& bao) {
  validate_bao(bao);
  Dba alg;
  alg.n = bao.n;
  alg.meet_t = bao.meet_t;
  alg.join_t = bao.join_t;
  alg.neg_t = bao.neg_t;
  alg.lneg_t = bao.neg_t;
  alg.top = bao.top;
  alg.bot = bao.bot;
  alg.c_t = bao.f_t;
  alg.i_t.resize(static_cast<size_t>(bao.n));
  for (int x = 0; x < bao.n; ++x)
    alg.i_t[static_cast<size_t>(x)] = bao.neg(bao.f(bao.neg(x)));
  return alg;
}

Dba dbao_from_parts(const Dba& dba, const std::vector<Elem>& ibar, const std::vector<Elem>& cbar) {
  if (dba.has_operators()) fail(ErrorCode::invalid_argument, "input dBa already has operators");
  if (ibar.size() != static_cast<size_t>(dba.n) || cbar.size() != static_cast<size_t>(dba.n))
    fail(ErrorCode::malformed_input, "part operator table has wrong size");
  StructureParts parts = structure_parts(dba);
  auto check = [&](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::malformed_input, std::string("part operator is not a Bao operator: ") + what);
  };
  Elem zero = dba.lneg(dba.top);
  for (int a : parts.d_meet) {
    check(static_cast<int>(ibar[static_cast<size_t>(a)]) < dba.n, "index range");
    check(dba.meet(ibar[static_cast<size_t>(a)], ibar[static_cast<size_t>(a)]) ==
              ibar[static_cast<size_t>(a)],
          "closure into the meet part");
    for (int b : parts.d_meet)
      check(ibar[static_cast<size_t>(dba.vee(a, b))] ==
                dba.vee(ibar[static_cast<size_t>(a)], ibar[static_cast<size_t>(b)]),
            "additivity");
  }
  check(ibar[static_cast<size_t>(dba.bot)] == dba.bot, "normality");
  for (int a : parts.d_join) {
    check(static_cast<int>(cbar[static_cast<size_t>(a)]) < dba.n, "index range");
    check(dba.join(cbar[static_cast<size_t>(a)], cbar[static_cast<size_t>(a)]) ==
              cbar[static_cast<size_t>(a)],
          "closure into the join part");
    for (int b : parts.d_join)
      check(cbar[static_cast<size_t>(dba.join(a, b))] ==
                dba.join(cbar[static_cast<size_t>(a)], cbar[static_cast<size_t>(b)]),
            "additivity");
  }
  check(cbar[static_cast<size_t>(zero)] == zero, "normality");

  Dba out = dba;
  out.i_t.resize(static_cast<size_t>(dba.n));
  out.c_t.resize(static_cast<size_t>(dba.n));
  for (int x = 0; x < dba.n; ++x) {
    out.i_t[static_cast<size_t>(x)] = dba.neg(ibar[static_cast<size_t>(dba.neg(x))]);
    out.c_t[static_cast<size_t>(x)] = cbar[static_cast<size_t>(dba.join(x, x))];
  }
  return out;
}

Bao powerset_bao(int n, const std::vector<Mask>& rel) {
  if (n < 0 || n > 10) fail(ErrorCode::budget_exceeded, "powerset Bao carrier out of range");
  ApproxSpace space = ApproxSpace::make(n, rel);
  Bao bao;
  bao.n = 1 << n;
  size_t size = static_cast<size_t>(bao.n);
  bao.join_t.resize(size * size);
  bao.meet_t.resize(size * size);
  bao.neg_t.resize(size);
  bao.f_t.resize(size);
  Mask full = full_mask(n);
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    bao.neg_t[a] = static_cast<Elem>(full & ~a);
    bao.f_t[a] = static_cast<Elem>(approx_upper(space, a));
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
      bao.join_t[a * size + b] = static_cast<Elem>(a | b);
      bao.meet_t[a * size + b] = static_cast<Elem>(a & b);
    }
  }
  bao.bot = 0;
  bao.top = static_cast<Elem>(full);
  return bao;
}

Dba boolean_dba(int atoms, bool identity_operators) {
  if (atoms < 0 || atoms > 10) fail(ErrorCode::budget_exceeded, "Boolean dBa size out of range");
  Dba alg;
  alg.n = 1 << atoms;
  size_t size = static_cast<size_t>(alg.n);
  alg.meet_t.resize(size * size);
  alg.join_t.resize(size * size);
  alg.neg_t.resize(size);
  alg.lneg_t.resize(size);
  Mask full = full_mask(atoms);
  for (Mask a = 0; a < (Mask{1} << atoms); ++a) {
    alg.neg_t[a] = alg.lneg_t[a] = static_cast<Elem>(full & ~a);
    for (Mask b = 0; b < (Mask{1} << atoms); ++b) {
      alg.meet_t[a * size + b] = static_cast<Elem>(a & b);
      alg.join_t[a * size + b] = static_cast<Elem>(a | b);
    }
  }
  alg.bot = 0;
  alg.top = static_cast<Elem>(full);
  if (identity_operators) {
    alg.i_t.resize(size);
    alg.c_t.resize(size);
    for (size_t x = 0; x < size; ++x) alg.i_t[x] = alg.c_t[x] = static_cast<Elem>(x);
  }
  return alg;
}

}  // namespace kcw
