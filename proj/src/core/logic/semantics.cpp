#include "semantics.hpp"

#include <algorithm>

namespace kcw::logic {

int eval(const Dba& alg, const std::map<std::string, int>& valuation, const Formula& f) {
  switch (f.kind()) {
    case FKind::Var: {
      auto it = valuation.find(f.name());
      if (it == valuation.end()) fail(ErrorCode::unbound_variable, "unbound variable " + f.name());
      if (it->second < 0 || it->second >= alg.n)
        fail(ErrorCode::invalid_argument, "valuation out of carrier range");
      return it->second;
    }
    case FKind::Top: return alg.top;
    case FKind::Bot: return alg.bot;
    case FKind::Meet: return alg.meet(eval(alg, valuation, f.left()), eval(alg, valuation, f.right()));
    case FKind::Join: return alg.join(eval(alg, valuation, f.left()), eval(alg, valuation, f.right()));
    case FKind::Neg: return alg.neg(eval(alg, valuation, f.left()));
    case FKind::Lneg: return alg.lneg(eval(alg, valuation, f.left()));
    case FKind::Box:
      if (!alg.has_operators()) fail(ErrorCode::unsupported_model, "model has no I operator");
      return alg.op_i(eval(alg, valuation, f.left()));
    case FKind::Bbox:
      if (!alg.has_operators()) fail(ErrorCode::unsupported_model, "model has no C operator");
      return alg.op_c(eval(alg, valuation, f.left()));
  }
  fail(ErrorCode::invalid_argument, "bad formula");
}

Protoconcept eval(const Context& ctx, const KripkeContext* kc,
                  const std::map<std::string, Protoconcept>& valuation, const Formula& f) {
  switch (f.kind()) {
    case FKind::Var: {
      auto it = valuation.find(f.name());
      if (it == valuation.end()) fail(ErrorCode::unbound_variable, "unbound variable " + f.name());
      return it->second;
    }
    case FKind::Top: return proto_top(ctx);
    case FKind::Bot: return proto_bot(ctx);
    case FKind::Meet:
      return proto_meet(ctx, eval(ctx, kc, valuation, f.left()), eval(ctx, kc, valuation, f.right()));
    case FKind::Join:
      return proto_join(ctx, eval(ctx, kc, valuation, f.left()), eval(ctx, kc, valuation, f.right()));
    case FKind::Neg: return proto_neg(ctx, eval(ctx, kc, valuation, f.left()));
    case FKind::Lneg: return proto_lneg(ctx, eval(ctx, kc, valuation, f.left()));
    case FKind::Box:
      if (!kc) fail(ErrorCode::unsupported_model, "modal formula over a plain context");
      return f_r(*kc, eval(ctx, kc, valuation, f.left()));
    case FKind::Bbox:
      if (!kc) fail(ErrorCode::unsupported_model, "modal formula over a plain context");
      return f_s(*kc, eval(ctx, kc, valuation, f.left()));
  }
  fail(ErrorCode::invalid_argument, "bad formula");
}

std::string proto_to_string(const Context& ctx, const Protoconcept& x) {
  auto join_names = [](const std::vector<std::string>& names) {
    std::string out = "{";
    for (size_t i = 0; i < names.size(); ++i) {
      if (i) out += ",";
      out += names[i];
    }
    return out + "}";
  };
  return "(" + join_names(ctx.object_names(x.extent)) + "," +
         join_names(ctx.attribute_names(x.intent)) + ")";
}

namespace {

std::vector<std::string> sequent_variables(const Sequent& seq) {
  std::vector<std::string> vars = seq.left.variables();
  for (const auto& v : seq.right.variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::uint64_t checked_pow(std::uint64_t base, size_t exp, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > limit / base) return limit + 1;
    total *= base;
  }
  return total;
}

}  // namespace

TruthReport sequent_truth(const Model& model, const Sequent& seq, const Budgets& budgets) {
  TruthReport rep;
  std::vector<std::string> vars = sequent_variables(seq);
  bool modal = seq.left.is_modal() || seq.right.is_modal();

  if (model.alg) {
    const Dba& alg = *model.alg;
    if (modal && !alg.has_operators())
      fail(ErrorCode::unsupported_model, "modal sequent over a plain dBa");
    std::uint64_t total = checked_pow(static_cast<std::uint64_t>(alg.n), vars.size(), budgets.truth);
    if (total > budgets.truth) fail(ErrorCode::budget_exceeded, "valuation budget exceeded");
    std::vector<int> idx(vars.size(), 0);
    std::map<std::string, int> valuation;
    for (;;) {
      for (size_t i = 0; i < vars.size(); ++i) valuation[vars[i]] = idx[i];
      ++rep.valuations;
      int l = eval(alg, valuation, seq.left);
      int r = eval(alg, valuation, seq.right);
      if (!quasi_leq(alg, l, r)) {
        for (size_t i = 0; i < vars.size(); ++i)
          rep.witness.push_back({vars[i], std::to_string(idx[i])});
        return rep;
      }
      size_t k = vars.size();
      while (k > 0 && ++idx[k - 1] == alg.n) idx[--k] = 0;
      if (k == 0 && !vars.empty()) break;
      if (vars.empty()) break;
    }
    rep.valid = true;
    return rep;
  }

  const Context* ctx = model.ctx;
  if (!ctx) fail(ErrorCode::invalid_argument, "empty model");
  if (modal && !model.kc) fail(ErrorCode::unsupported_model, "modal sequent over a plain context");
  std::vector<Protoconcept> carrier = enumerate(*ctx, KindFilter::Protoconcepts, budgets);
  std::uint64_t total = checked_pow(carrier.size(), vars.size(), budgets.truth);
  if (total > budgets.truth) fail(ErrorCode::budget_exceeded, "valuation budget exceeded");
  std::vector<size_t> idx(vars.size(), 0);
  std::map<std::string, Protoconcept> valuation;
  for (;;) {
    for (size_t i = 0; i < vars.size(); ++i) valuation[vars[i]] = carrier[idx[i]];
    ++rep.valuations;
    Protoconcept l = eval(*ctx, model.kc, valuation, seq.left);
    Protoconcept r = eval(*ctx, model.kc, valuation, seq.right);
    if (!proto_leq(*ctx, l, r)) {
      for (size_t i = 0; i < vars.size(); ++i)
        rep.witness.push_back({vars[i], proto_to_string(*ctx, carrier[idx[i]])});
      return rep;
    }
    size_t k = vars.size();
    while (k > 0 && ++idx[k - 1] == carrier.size()) idx[--k] = 0;
    if (k == 0 && !vars.empty()) break;
    if (vars.empty()) break;
  }
  rep.valid = true;
  return rep;
}

namespace {

std::vector<std::string> index_names(const char* prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<Mask> relation_from_bits(std::uint64_t bits, int n) {
  std::vector<Mask> rows(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((bits >> (i * n + j)) & 1) rows[static_cast<size_t>(i)] = with_bit(rows[static_cast<size_t>(i)], j);
  return rows;
}

bool reflexive_transitive(const std::vector<Mask>& rows) {
  int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    if (!has_bit(rows[static_cast<size_t>(i)], i)) return false;
    for (int j : mask_indices(rows[static_cast<size_t>(i)]))
      if (!subset(rows[static_cast<size_t>(j)], rows[static_cast<size_t>(i)])) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> relation_pairs(const std::vector<Mask>& rows) {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j : mask_indices(rows[i])) out.push_back({static_cast<int>(i), j});
  return out;
}

}  // namespace

SearchResult countermodel_search(const Sequent& seq, const System& system,
                                 const SearchBounds& bounds, const Budgets& budgets) {
  if (bounds.max_g < 1 || bounds.max_m < 1 || bounds.max_g > 4 || bounds.max_m > 4)
    fail(ErrorCode::invalid_argument, "countermodel bounds must be between 1 and 4");
  bool modal_seq = seq.left.is_modal() || seq.right.is_modal();
  if (modal_seq && !system.modal())
    fail(ErrorCode::unsupported_model, "modal sequent under a non-modal system");

  SearchResult res;
  std::uint64_t steps = 0;
  std::vector<std::string> vars = sequent_variables(seq);

  auto try_model = [&](const Context& ctx, const KripkeContext* kc) -> bool {
    std::vector<Protoconcept> carrier = enumerate(ctx, KindFilter::Protoconcepts, budgets);
    std::vector<size_t> idx(vars.size(), 0);
    std::map<std::string, Protoconcept> valuation;
    ++res.models_scanned;
    for (;;) {
      if (++steps > budgets.truth) fail(ErrorCode::budget_exceeded, "search budget exceeded");
      for (size_t i = 0; i < vars.size(); ++i) valuation[vars[i]] = carrier[idx[i]];
      Protoconcept l = eval(ctx, kc, valuation, seq.left);
      Protoconcept r = eval(ctx, kc, valuation, seq.right);
      if (!proto_leq(ctx, l, r)) {
        res.found = true;
        res.objects = ctx.objects();
        res.attributes = ctx.attributes();
        for (int g = 0; g < ctx.size_g(); ++g) {
          std::string row;
          for (int m = 0; m < ctx.size_m(); ++m) row += ctx.incidence(g, m) ? 'X' : '.';
          res.incidence_rows.push_back(row);
        }
        if (kc) {
          res.r_pairs = relation_pairs(kc->r_rows);
          res.s_pairs = relation_pairs(kc->s_rows);
        }
        for (size_t i = 0; i < vars.size(); ++i)
          res.valuation.push_back({vars[i], proto_to_string(ctx, carrier[idx[i]])});
        return true;
      }
      size_t k = vars.size();
      while (k > 0 && ++idx[k - 1] == carrier.size()) idx[--k] = 0;
      if (k == 0) break;
    }
    return false;
  };

  for (int g = 1; g <= bounds.max_g; ++g)
    for (int m = 1; m <= bounds.max_m; ++m) {
      std::uint64_t inc_count = std::uint64_t{1} << (g * m);
      for (std::uint64_t inc = 0; inc < inc_count; ++inc) {
        std::vector<Mask> rows(static_cast<size_t>(g), 0);
        for (int i = 0; i < g; ++i)
          for (int j = 0; j < m; ++j)
            if ((inc >> (i * m + j)) & 1) rows[static_cast<size_t>(i)] = with_bit(rows[static_cast<size_t>(i)], j);
        Context ctx(index_names("g", g), index_names("m", m), rows);
        if (!system.modal()) {
          if (try_model(ctx, nullptr)) return res;
          continue;
        }
        std::uint64_t r_count = std::uint64_t{1} << (g * g);
        std::uint64_t s_count = std::uint64_t{1} << (m * m);
        for (std::uint64_t rb = 0; rb < r_count; ++rb) {
          std::vector<Mask> r_rows = relation_from_bits(rb, g);
          if (bounds.mode == RelationMode::ReflexiveTransitive && !reflexive_transitive(r_rows))
            continue;
          for (std::uint64_t sb = 0; sb < s_count; ++sb) {
            std::vector<Mask> s_rows = relation_from_bits(sb, m);
            if (bounds.mode == RelationMode::ReflexiveTransitive && !reflexive_transitive(s_rows))
              continue;
            KripkeContext kc(ctx, r_rows, s_rows);
            if (try_model(kc.ctx, &kc)) return res;
          }
        }
      }
    }
  return res;  // exhausted
}

}  // namespace kcw::logic
