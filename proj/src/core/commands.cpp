#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"
#include "io.hpp"
#include "logic/parser.hpp"
#include "logic/semantics.hpp"

namespace kcw::commands {

namespace {

std::string names_text(const std::vector<std::string>& names, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i : mask_indices(m)) {
    if (!first) out += ",";
    out += names[static_cast<size_t>(i)];
    first = false;
  }
  return out + "}";
}

std::string proto_text(const Context& ctx, const Protoconcept& x) {
  return "(" + names_text(ctx.objects(), x.extent) + "," + names_text(ctx.attributes(), x.intent) +
         ")";
}

Side parse_side(const std::string& side) {
  if (side == "objects" || side == "left") return Side::objects;
  if (side == "attributes" || side == "right") return Side::attributes;
  fail(ErrorCode::invalid_argument, "side must be objects or attributes");
}

std::string kind_name(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::Concept: return "concept";
    case ConceptKind::SemiconceptOnly: return "semiconcept-only";
    case ConceptKind::ProtoconceptOnly: return "protoconcept-only";
    case ConceptKind::None: return "none";
  }
  return "?";
}

// Collects named pass/fail checks for audit-style commands.
struct Audit {
  json checks = json::array();
  std::ostringstream text;
  bool all_ok = true;

  void add(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(json{{"name", name}, {"pass", ok}, {"value", detail}});
    text << (ok ? "[ok]   " : "[FAIL] ") << name << ": " << detail << "\n";
    all_ok &= ok;
  }

  Result finish(json extra = json::object()) {
    Result res;
    res.verdict = all_ok ? 1 : 0;
    extra["checks"] = checks;
    extra["pass"] = all_ok;
    res.data = std::move(extra);
    res.text = text.str();
    return res;
  }
};

std::string algebra_text(const Dba& alg) {
  std::ostringstream out;
  out << "size " << alg.n << ", top " << alg.top << ", bot " << alg.bot << "\n";
  auto table = [&](const char* name, const std::vector<Elem>& t) {
    out << name << ":";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i % static_cast<size_t>(alg.n) == 0) out << (i ? " |" : "");
      out << " " << t[i];
    }
    out << "\n";
  };
  table("meet", alg.meet_t);
  table("join", alg.join_t);
  table("neg", alg.neg_t);
  table("lneg", alg.lneg_t);
  if (alg.has_operators()) {
    table("I", alg.i_t);
    table("C", alg.c_t);
  }
  return out.str();
}

}  // namespace

Model load_model(const std::string& path) {
  std::string raw = io::read_file(path);
  size_t first = raw.find_first_not_of(" \t\r\n");
  Model model;
  if (first != std::string::npos && raw[first] != '{') {
    model.ctx = std::make_unique<Context>(io::parse_burmeister(raw));
    return model;
  }
  json j = io::parse_json(raw);
  if (j.contains("meet"))
    model.alg = std::make_unique<Dba>(io::algebra_from_json(j));
  else if (j.contains("R"))
    model.kc = std::make_unique<KripkeContext>(io::kripke_from_json(j));
  else
    model.ctx = std::make_unique<Context>(io::context_from_json(j));
  return model;
}

KripkeContext kripke_from_source(const std::string& path, const std::string& relations) {
  if (relations.empty()) return io::load_kripke(path);
  Context ctx = io::load_context(path);
  if (relations == "identity") return make_kc_identity(std::move(ctx));
  if (relations == "E1E2" || relations == "e1e2") return make_kc_ds(std::move(ctx));
  fail(ErrorCode::invalid_argument, "relations must be identity or E1E2");
}

Result context_derive(const Context& ctx, const std::string& side, const std::string& set_csv) {
  return guarded([&] {
    Side s = parse_side(side);
    Mask x = s == Side::objects ? io::parse_object_set(ctx, set_csv)
                                : io::parse_attribute_set(ctx, set_csv);
    Mask derived = derive(ctx, s, x);
    const auto& out_names = s == Side::objects ? ctx.attributes() : ctx.objects();
    Result res;
    res.data =
        json{{"input", io::mask_json(s == Side::objects ? ctx.objects() : ctx.attributes(), x)},
             {"derived", io::mask_json(out_names, derived)}};
    res.text = names_text(out_names, derived) + "\n";
    return res;
  });
}

Result context_classify(const Context& ctx, const std::string& extent_csv,
                        const std::string& intent_csv) {
  return guarded([&] {
    Mask a = io::parse_object_set(ctx, extent_csv);
    Mask b = io::parse_attribute_set(ctx, intent_csv);
    ConceptKind kind = classify(ctx, a, b);
    Result res;
    res.data = json{{"extent", io::mask_json(ctx.objects(), a)},
                    {"intent", io::mask_json(ctx.attributes(), b)},
                    {"kind", kind_name(kind)}};
    res.text = kind_name(kind) + "\n";
    return res;
  });
}

Result context_enumerate(const Context& ctx, const std::string& kind, const Budgets& budgets) {
  return guarded([&] {
    KindFilter filter;
    if (kind == "protoconcepts")
      filter = KindFilter::Protoconcepts;
    else if (kind == "semiconcepts")
      filter = KindFilter::Semiconcepts;
    else if (kind == "concepts")
      filter = KindFilter::Concepts;
    else
      fail(ErrorCode::invalid_argument, "kind must be protoconcepts, semiconcepts or concepts");
    auto items = enumerate(ctx, filter, budgets);
    Result res;
    json list = json::array();
    std::ostringstream text;
    for (const auto& x : items) {
      list.push_back(io::proto_json(ctx, x));
      text << proto_text(ctx, x) << "\n";
    }
    res.data = json{{"count", items.size()}, {"items", list}, {"kind", kind}};
    res.text = text.str() + "total: " + std::to_string(items.size()) + "\n";
    return res;
  });
}

Result approx_space(const KripkeContext& kc, const std::string& side, const std::string& mode,
                    const std::string& set_csv) {
  return guarded([&] {
    Side s = parse_side(side);
    ApproxSpace space = s == Side::objects ? kc.object_space() : kc.attribute_space();
    const auto& names = s == Side::objects ? kc.ctx.objects() : kc.ctx.attributes();
    Mask x = s == Side::objects ? io::parse_object_set(kc.ctx, set_csv)
                                : io::parse_attribute_set(kc.ctx, set_csv);
    ApproxMode am;
    if (mode == "lower")
      am = ApproxMode::lower;
    else if (mode == "upper")
      am = ApproxMode::upper;
    else
      fail(ErrorCode::invalid_argument, "mode must be lower or upper");
    Mask result = approx(space, am, x);
    Result res;
    res.data = json{{"input", io::mask_json(names, x)},
                    {"mode", mode},
                    {"result", io::mask_json(names, result)}};
    res.text = names_text(names, result) + "\n";
    return res;
  });
}

namespace {
json relation_report_json(const RelationReport& rep) {
  return json{{"reflexive", rep.reflexive},
              {"symmetric", rep.symmetric},
              {"transitive", rep.transitive},
              {"equivalence", rep.equivalence()},
              {"preorder", rep.preorder()}};
}
}  // namespace

Result approx_induced(const Context& ctx, const std::string& kind) {
  return guarded([&] {
    InducedKind k;
    if (kind == "E1")
      k = InducedKind::E1;
    else if (kind == "E2")
      k = InducedKind::E2;
    else if (kind == "J1")
      k = InducedKind::J1;
    else if (kind == "J2")
      k = InducedKind::J2;
    else
      fail(ErrorCode::invalid_argument, "kind must be E1, E2, J1 or J2");
    auto [space, rep] = induced_relation(ctx, k);
    const auto& names = (k == InducedKind::E1 || k == InducedKind::J1) ? ctx.objects()
                                                                       : ctx.attributes();
    Result res;
    res.data = json{{"kind", kind},
                    {"relation", io::pairs_json(space.rel)},
                    {"report", relation_report_json(rep)}};
    std::ostringstream text;
    text << kind << ": reflexive=" << rep.reflexive << " symmetric=" << rep.symmetric
         << " transitive=" << rep.transitive << "\n";
    if (rep.equivalence()) {
      json classes = json::array();
      for (Mask cls : relation_classes(space)) {
        classes.push_back(io::mask_json(names, cls));
        text << "class " << names_text(names, cls) << "\n";
      }
      res.data["classes"] = classes;
    }
    res.text = text.str();
    return res;
  });
}

namespace {
json concept_approx_json(const Context& ctx, const ConceptApprox& ca) {
  json j{{"exact", ca.exact}, {"lower", io::proto_json(ctx, ca.lower)}};
  if (!ca.exact) j["upper"] = io::proto_json(ctx, ca.upper);
  return j;
}
}  // namespace

Result approx_concept(const Context& base, const std::string& side, const std::string& set_csv) {
  return guarded([&] {
    KripkeContext kc = make_kc_ds(base);
    const Context& ctx = kc.ctx;
    Side s = parse_side(side);
    Mask x = s == Side::objects ? io::parse_object_set(ctx, set_csv)
                                : io::parse_attribute_set(ctx, set_csv);
    ConceptApprox ca = concept_approx(kc, s, x);
    Result res;
    res.data = concept_approx_json(ctx, ca);
    if (ca.exact)
      res.text = "exact " + proto_text(ctx, ca.lower) + "\n";
    else
      res.text = "lower " + proto_text(ctx, ca.lower) + "\nupper " + proto_text(ctx, ca.upper) + "\n";
    return res;
  });
}

Result approx_pair(const Context& base, const std::string& extent_csv,
                   const std::string& intent_csv) {
  return guarded([&] {
    KripkeContext kc = make_kc_ds(base);
    const Context& ctx = kc.ctx;
    Mask a = io::parse_object_set(ctx, extent_csv);
    Mask b = io::parse_attribute_set(ctx, intent_csv);
    PairApprox pa = pair_approx(kc, a, b);
    Result res;
    res.data = json{{"concept", pa.is_concept},
                    {"lower", io::proto_json(ctx, pa.lower)},
                    {"upper", io::proto_json(ctx, pa.upper)}};
    if (pa.is_concept)
      res.text = "concept " + proto_text(ctx, pa.lower) + "\n";
    else
      res.text = "lower " + proto_text(ctx, pa.lower) + "\nupper " + proto_text(ctx, pa.upper) + "\n";
    return res;
  });
}

namespace {
json axiom_report_json(const AxiomReport& rep) {
  json axioms = json::array();
  for (const auto& a : rep.axioms) {
    json entry{{"id", a.id}, {"pass", a.pass}};
    if (!a.pass) entry["witness"] = a.witness;
    axioms.push_back(entry);
  }
  return json{{"level", level_name(rep.level)}, {"pass", rep.pass}, {"axioms", axioms}};
}
}  // namespace

Result kripke_complex(const KripkeContext& kc, const std::string& carrier, const Budgets& budgets) {
  return guarded([&] {
    CarrierKind kind;
    if (carrier == "full")
      kind = CarrierKind::Full;
    else if (carrier == "semiconcept")
      kind = CarrierKind::Semiconcept;
    else
      fail(ErrorCode::invalid_argument, "carrier must be full or semiconcept");
    ComplexAlgebra ca = complex_algebra(kc, kind, budgets);
    json carrier_json = json::array();
    for (const auto& x : ca.carrier) carrier_json.push_back(io::proto_json(kc.ctx, x));
    AxiomReport check = check_axioms(ca.alg, Level::Dbao);
    Result res;
    res.verdict = (check.pass && ca.semiconcepts_are_pure_part) ? 1 : 0;
    res.data = json{{"algebra", io::algebra_to_json(ca.alg)},
                    {"carrier", carrier_json},
                    {"dbao", check.pass},
                    {"pure_part_is_semiconcepts", ca.semiconcepts_are_pure_part}};
    std::ostringstream text;
    text << "carrier: " << ca.carrier.size() << " elements\n";
    for (size_t i = 0; i < ca.carrier.size(); ++i)
      text << i << " = " << proto_text(kc.ctx, ca.carrier[i]) << "\n";
    text << algebra_text(ca.alg) << "dbao axioms: " << (check.pass ? "pass" : "fail") << "\n"
         << "pure part = semiconcepts: " << (ca.semiconcepts_are_pure_part ? "yes" : "no") << "\n";
    res.text = text.str();
    return res;
  });
}

Result kripke_report(const KripkeContext& kc) {
  return guarded([&] {
    KcReport rep = kc_report(kc);
    Result res;
    res.data = json{{"reflexive_left", rep.reflexive_left},
                    {"reflexive_right", rep.reflexive_right},
                    {"reflexive", rep.reflexive()},
                    {"symmetric_left", rep.symmetric_left},
                    {"symmetric_right", rep.symmetric_right},
                    {"symmetric", rep.symmetric()},
                    {"transitive_left", rep.transitive_left},
                    {"transitive_right", rep.transitive_right},
                    {"transitive", rep.transitive()},
                    {"bisimulation", rep.bisimulation}};
    std::ostringstream text;
    text << "reflexive: left=" << rep.reflexive_left << " right=" << rep.reflexive_right << "\n"
         << "symmetric: left=" << rep.symmetric_left << " right=" << rep.symmetric_right << "\n"
         << "transitive: left=" << rep.transitive_left << " right=" << rep.transitive_right << "\n"
         << "bisimulation: " << rep.bisimulation << "\n";
    res.text = text.str();
    return res;
  });
}

Result kripke_frame_bridge(int n, const std::vector<Mask>& rel, const Budgets& budgets) {
  return guarded([&] {
    FrameBridge fb = frame_bridge(n, rel, budgets);
    Result res;
    res.verdict = fb.ok() ? 1 : 0;
    res.data = json{{"kripke_context", io::kripke_to_json(fb.kc)},
                    {"prime_is_complement", fb.prime_is_complement},
                    {"negations_agree", fb.negations_agree},
                    {"f1_dual_of_f2", fb.f1_dual_of_f2},
                    {"iso_onto_frame_algebra", fb.iso_onto_frame_algebra},
                    {"pass", fb.ok()}};
    std::ostringstream text;
    text << "prime is complement: " << fb.prime_is_complement << "\n"
         << "negations agree: " << fb.negations_agree << "\n"
         << "f1 dual of f2: " << fb.f1_dual_of_f2 << "\n"
         << "isomorphic to frame algebra: " << fb.iso_onto_frame_algebra << "\n";
    res.text = text.str();
    return res;
  });
}

Result kripke_terms(const Context& base, const std::string& extent_csv,
                    const std::string& intent_csv) {
  return guarded([&] {
    KripkeContext kc = make_kc_ds(base);
    const Context& ctx = kc.ctx;
    Mask a = io::parse_object_set(ctx, extent_csv);
    Mask b = io::parse_attribute_set(ctx, intent_csv);
    Protoconcept x{ctx.id(), a, ctx.derive_objects(a)};
    Protoconcept y{ctx.id(), ctx.derive_attributes(b), b};
    TermApprox terms = approx_via_terms(kc, x, y);
    Result res;
    res.verdict = terms.agrees ? 1 : 0;
    res.data = json{{"lower_a", io::proto_json(ctx, terms.lower_a)},
                    {"upper_a", io::proto_json(ctx, terms.upper_a)},
                    {"lower_b", io::proto_json(ctx, terms.lower_b)},
                    {"upper_b", io::proto_json(ctx, terms.upper_b)},
                    {"agrees", terms.agrees}};
    std::ostringstream text;
    text << "lower(A) " << proto_text(ctx, terms.lower_a) << "\n"
         << "upper(A) " << proto_text(ctx, terms.upper_a) << "\n"
         << "lower(B) " << proto_text(ctx, terms.lower_b) << "\n"
         << "upper(B) " << proto_text(ctx, terms.upper_b) << "\n"
         << "agrees with concept approximations: " << (terms.agrees ? "yes" : "no") << "\n";
    res.text = text.str();
    return res;
  });
}

Result dba_check(const Dba& alg, const std::string& level) {
  return guarded([&] {
    AxiomReport rep = check_axioms(alg, parse_level(level));
    Result res;
    res.verdict = rep.pass ? 1 : 0;
    res.data = axiom_report_json(rep);
    std::ostringstream text;
    text << "level " << level << ": " << (rep.pass ? "pass" : "fail") << "\n";
    for (const auto& a : rep.axioms)
      if (!a.pass) {
        text << "violated " << a.id << " at (";
        for (size_t i = 0; i < a.witness.size(); ++i) text << (i ? "," : "") << a.witness[i];
        text << ")\n";
      }
    res.text = text.str();
    return res;
  });
}

Result dba_parts(const Dba& alg) {
  return guarded([&] {
    StructureParts parts = structure_parts(alg);
    bool bao_side = !alg.has_operators() || (parts.meet_extract_bao && parts.join_extract_bao);
    Result res;
    res.verdict = (parts.pure_closed && parts.meet_extract_boolean && parts.join_extract_boolean &&
                   bao_side)
                      ? 1
                      : 0;
    res.data = json{{"d_meet", parts.d_meet},
                    {"d_join", parts.d_join},
                    {"d_pure", parts.d_pure},
                    {"pure_closed", parts.pure_closed},
                    {"meet_extract_boolean", parts.meet_extract_boolean},
                    {"join_extract_boolean", parts.join_extract_boolean},
                    {"meet_extract_bao", parts.meet_extract_bao},
                    {"join_extract_bao", parts.join_extract_bao}};
    std::ostringstream text;
    text << "|D_meet|=" << parts.d_meet.size() << " |D_join|=" << parts.d_join.size()
         << " |D_pure|=" << parts.d_pure.size() << "\n"
         << "Boolean extracts: meet=" << parts.meet_extract_boolean
         << " join=" << parts.join_extract_boolean << "\n";
    if (alg.has_operators())
      text << "Bao extracts: meet=" << parts.meet_extract_bao
           << " join=" << parts.join_extract_bao << "\n";
    res.text = text.str();
    return res;
  });
}

Result dba_filters(const Dba& alg, const Budgets& budgets) {
  return guarded([&] {
    FiltersReport rep = filters_ideals(alg, budgets);
    auto masks_json = [](const std::vector<Mask>& ms) {
      json out = json::array();
      for (Mask m : ms) out.push_back(mask_indices(m));
      return out;
    };
    Result res;
    res.verdict = rep.fp_equals_fpr ? 1 : 0;
    res.data = json{{"filters", masks_json(rep.filters)},
                    {"ideals", masks_json(rep.ideals)},
                    {"primary_filters", masks_json(rep.primary_filters)},
                    {"primary_ideals", masks_json(rep.primary_ideals)},
                    {"fp_equals_fpr", rep.fp_equals_fpr}};
    std::ostringstream text;
    auto list = [&](const char* label, const std::vector<Mask>& ms) {
      text << label << ":";
      for (Mask m : ms) {
        text << " {";
        bool first = true;
        for (int i : mask_indices(m)) {
          text << (first ? "" : ",") << i;
          first = false;
        }
        text << "}";
      }
      text << "\n";
    };
    list("filters", rep.filters);
    list("ideals", rep.ideals);
    list("primary filters", rep.primary_filters);
    list("primary ideals", rep.primary_ideals);
    text << "primary = prime-trace classification: " << (rep.fp_equals_fpr ? "yes" : "no") << "\n";
    res.text = text.str();
    return res;
  });
}

Result dba_standard_context(const Dba& alg) {
  return guarded([&] {
    StandardContext sc = standard_context(alg);
    auto masks_json = [](const std::vector<Mask>& ms) {
      json out = json::array();
      for (Mask m : ms) out.push_back(mask_indices(m));
      return out;
    };
    Result res;
    res.verdict = sc.derivation_lemma_ok ? 1 : 0;
    res.data = json{{"context", io::context_to_json(sc.ctx)},
                    {"primary_filters", masks_json(sc.fp)},
                    {"primary_ideals", masks_json(sc.ip)},
                    {"derivation_lemma", sc.derivation_lemma_ok}};
    std::ostringstream text;
    text << "standard context: " << sc.ctx.size_g() << " x " << sc.ctx.size_m() << "\n";
    for (int gi = 0; gi < sc.ctx.size_g(); ++gi) {
      text << sc.ctx.objects()[static_cast<size_t>(gi)] << " = {";
      bool first = true;
      for (int i : mask_indices(sc.fp[static_cast<size_t>(gi)])) {
        text << (first ? "" : ",") << i;
        first = false;
      }
      text << "} :";
      for (int mi = 0; mi < sc.ctx.size_m(); ++mi) text << " " << (sc.ctx.incidence(gi, mi) ? 'X' : '.');
      text << "\n";
    }
    for (int mi = 0; mi < sc.ctx.size_m(); ++mi) {
      text << sc.ctx.attributes()[static_cast<size_t>(mi)] << " = {";
      bool first = true;
      for (int i : mask_indices(sc.ip[static_cast<size_t>(mi)])) {
        text << (first ? "" : ",") << i;
        first = false;
      }
      text << "}\n";
    }
    text << "derivation lemma: " << (sc.derivation_lemma_ok ? "pass" : "fail") << "\n";
    res.text = text.str();
    return res;
  });
}

Result dba_represent(const Dba& alg, const Budgets& budgets) {
  return guarded([&] {
    RepresentationReport rep = representation(alg, budgets);
    const Context& ctx = rep.canonical.kc->ctx;
    json h = json::array();
    for (const auto& hx : rep.h) h.push_back(io::proto_json(ctx, hx));
    Result res;
    res.verdict = rep.embedding_ok() ? 1 : 0;
    res.data = json{{"kripke_context", io::kripke_to_json(*rep.canonical.kc)},
                    {"h", h},
                    {"preserves",
                     json{{"meet", rep.preserves_meet},
                          {"join", rep.preserves_join},
                          {"neg", rep.preserves_neg},
                          {"lneg", rep.preserves_lneg},
                          {"top", rep.preserves_top},
                          {"bot", rep.preserves_bot},
                          {"I", rep.preserves_i},
                          {"C", rep.preserves_c}}},
                    {"quasi_injective", rep.quasi_injective},
                    {"contextual_input", rep.contextual_input},
                    {"injective", rep.injective},
                    {"pure_into_semiconcepts", rep.pure_into_semiconcepts},
                    {"pure_injective", rep.pure_injective},
                    {"topological_input", rep.topological_input},
                    {"canonical_reflexive_transitive", rep.canonical_reflexive_transitive},
                    {"alternate_characterisation", rep.canonical.alternate_characterisation_ok},
                    {"approximation_identities", rep.canonical.approximation_identities_ok},
                    {"pass", rep.embedding_ok()}};
    std::ostringstream text;
    text << "canonical Kripke context: " << ctx.size_g() << " filters x " << ctx.size_m()
         << " ideals\n";
    for (size_t i = 0; i < rep.h.size(); ++i)
      text << "h(" << i << ") = " << proto_text(ctx, rep.h[i]) << "\n";
    text << "h preserves operations: "
         << (rep.preserves_meet && rep.preserves_join && rep.preserves_neg && rep.preserves_lneg &&
                     rep.preserves_top && rep.preserves_bot && rep.preserves_i && rep.preserves_c
                 ? "yes"
                 : "no")
        << "\n"
         << "quasi-injective: " << rep.quasi_injective << ", injective: " << rep.injective << "\n"
         << "pure part into semiconcepts: " << rep.pure_into_semiconcepts << "\n";
    if (rep.topological_input)
      text << "canonical relations reflexive+transitive: " << rep.canonical_reflexive_transitive
           << "\n";
    text << "representation: " << (rep.embedding_ok() ? "pass" : "fail") << "\n";
    res.text = text.str();
    return res;
  });
}

Result dba_bridge(const std::string& path) {
  return guarded([&] {
    io::BridgeInput input = io::load_bridge_input(path);
    Dba out = input.from_bao ? dbao_from_bao(input.bao)
                             : dbao_from_parts(input.dba, input.ibar, input.cbar);
    AxiomReport check = check_axioms(out, Level::Dbao);
    Result res;
    res.verdict = check.pass ? 1 : 0;
    res.data = json{{"algebra", io::algebra_to_json(out)}, {"dbao", axiom_report_json(check)}};
    res.text = "constructed dBao with " + std::to_string(out.n) + " elements\n" +
               algebra_text(out) + "dbao check " + (check.pass ? "pass" : "fail") + "\n";
    return res;
  });
}

Result logic_parse(const std::string& text) {
  return guarded([&] {
    Result res;
    if (text.find("|-") != std::string::npos) {
      logic::Sequent s = logic::parse_sequent(text);
      res.data = json{{"sequent", logic::print(s)},
                      {"left", logic::print(s.left)},
                      {"right", logic::print(s.right)}};
      res.text = logic::print(s) + "\n";
    } else {
      logic::Formula f = logic::parse_formula(text);
      res.data = json{{"formula", logic::print(f)}};
      json vars = json::array();
      for (const auto& v : f.variables()) vars.push_back(v);
      res.data["variables"] = vars;
      res.text = logic::print(f) + "\n";
    }
    return res;
  });
}

Result logic_check_proof(const std::string& path, const std::string& system) {
  return guarded([&] {
    io::ProofFile pf = io::load_proof(path);
    std::string sys_name = !system.empty() ? system : (!pf.system.empty() ? pf.system : "cdbl");
    const logic::System& sys = logic::system_by_name(sys_name);
    logic::ProofCheck check = logic::check_derivation(pf.root, sys, pf.hypotheses);
    Result res;
    res.verdict = check.ok ? 1 : 0;
    json issues = json::array();
    for (const auto& issue : check.issues)
      issues.push_back(json{{"path", issue.path}, {"message", issue.message}});
    res.data = json{{"system", sys.name()},
                    {"nodes", check.nodes},
                    {"accepted", check.ok},
                    {"issues", issues},
                    {"conclusion", logic::print(pf.root.seq)}};
    std::ostringstream text;
    text << (check.ok ? "accepted" : "rejected") << " (" << check.nodes << " nodes, system "
         << sys.name() << ")\n";
    for (const auto& issue : check.issues) text << issue.path << ": " << issue.message << "\n";
    res.text = text.str();
    return res;
  });
}

namespace {
logic::Model as_logic_model(const Model& model) {
  if (model.alg) return logic::Model::algebra(*model.alg);
  if (model.kc) return logic::Model::kripke(*model.kc);
  if (model.ctx) return logic::Model::context(*model.ctx);
  fail(ErrorCode::invalid_argument, "empty model");
}
}  // namespace

Result logic_eval(const Model& model, const std::string& formula, const std::string& assigns_json) {
  return guarded([&] {
    logic::Formula f = logic::parse_formula(formula);
    json assigns =
        assigns_json.empty() ? json::object() : io::parse_json(assigns_json);
    Result res;
    if (model.alg) {
      std::map<std::string, int> val;
      for (auto it = assigns.begin(); it != assigns.end(); ++it) {
        if (!it.value().is_number_integer())
          fail(ErrorCode::invalid_argument, "algebra assignments must be carrier indices");
        val[it.key()] = it.value().get<int>();
      }
      int out = logic::eval(*model.alg, val, f);
      res.data = json{{"element", out}};
      res.text = std::to_string(out) + "\n";
      return res;
    }
    const Context& ctx = model.kc ? model.kc->ctx : *model.ctx;
    std::map<std::string, Protoconcept> val;
    for (auto it = assigns.begin(); it != assigns.end(); ++it) {
      const json& v = it.value();
      if (!v.is_object() || !v.contains("extent") || !v.contains("intent"))
        fail(ErrorCode::invalid_argument, "assignments must carry extent and intent name lists");
      Mask a = 0, b = 0;
      for (const auto& name : v["extent"]) {
        auto idx = ctx.object_index(name.get<std::string>());
        if (!idx) fail(ErrorCode::invalid_argument, "unknown object in assignment");
        a = with_bit(a, *idx);
      }
      for (const auto& name : v["intent"]) {
        auto idx = ctx.attribute_index(name.get<std::string>());
        if (!idx) fail(ErrorCode::invalid_argument, "unknown attribute in assignment");
        b = with_bit(b, *idx);
      }
      val.emplace(it.key(), make_protoconcept(ctx, a, b));
    }
    Protoconcept out = logic::eval(ctx, model.kc.get(), val, f);
    res.data = io::proto_json(ctx, out);
    res.text = proto_text(ctx, out) + "\n";
    return res;
  });
}

Result logic_validate(const Model& model, const std::string& sequent, const Budgets& budgets) {
  return guarded([&] {
    logic::Sequent seq = logic::parse_sequent(sequent);
    logic::TruthReport rep = logic::sequent_truth(as_logic_model(model), seq, budgets);
    Result res;
    res.verdict = rep.valid ? 1 : 0;
    json witness = json::object();
    for (const auto& [var, desc] : rep.witness) witness[var] = desc;
    res.data = json{{"sequent", logic::print(seq)},
                    {"true", rep.valid},
                    {"valuations", rep.valuations}};
    if (!rep.valid) res.data["witness"] = witness;
    std::ostringstream text;
    text << (rep.valid ? "true" : "false") << " (" << rep.valuations << " valuations)\n";
    for (const auto& [var, desc] : rep.witness) text << var << " = " << desc << "\n";
    res.text = text.str();
    return res;
  });
}

Result logic_countermodel(const std::string& sequent, const std::string& system, int max_g,
                          int max_m, const std::string& relation_mode, const Budgets& budgets) {
  return guarded([&] {
    logic::Sequent seq = logic::parse_sequent(sequent);
    const logic::System& sys = logic::system_by_name(system);
    logic::SearchBounds bounds;
    bounds.max_g = max_g;
    bounds.max_m = max_m;
    if (relation_mode == "all")
      bounds.mode = logic::RelationMode::All;
    else if (relation_mode == "reflexive-transitive")
      bounds.mode = logic::RelationMode::ReflexiveTransitive;
    else
      fail(ErrorCode::invalid_argument, "relation-mode must be all or reflexive-transitive");
    logic::SearchResult sr = logic::countermodel_search(seq, sys, bounds, budgets);
    Result res;
    res.data = json{{"sequent", logic::print(seq)},
                    {"system", sys.name()},
                    {"found", sr.found},
                    {"models_scanned", sr.models_scanned}};
    std::ostringstream text;
    if (sr.found) {
      json model{{"objects", sr.objects},
                 {"attributes", sr.attributes},
                 {"incidence", sr.incidence_rows}};
      if (sys.modal()) {
        json r = json::array(), s = json::array();
        for (auto [i, j] : sr.r_pairs) r.push_back(json::array({i, j}));
        for (auto [i, j] : sr.s_pairs) s.push_back(json::array({i, j}));
        model["R"] = r;
        model["S"] = s;
      }
      json valuation = json::object();
      for (const auto& [var, desc] : sr.valuation) valuation[var] = desc;
      res.data["witness"] = json{{"model", model}, {"valuation", valuation}};
      text << "countermodel found (" << sr.models_scanned << " models scanned)\n";
      for (size_t i = 0; i < sr.objects.size(); ++i)
        text << sr.objects[i] << ": " << sr.incidence_rows[i] << "\n";
      if (sys.modal()) {
        text << "R:";
        for (auto [i, j] : sr.r_pairs) text << " (" << i << "," << j << ")";
        text << "\nS:";
        for (auto [i, j] : sr.s_pairs) text << " (" << i << "," << j << ")";
        text << "\n";
      }
      for (const auto& [var, desc] : sr.valuation) text << var << " = " << desc << "\n";
    } else {
      text << "exhausted (" << sr.models_scanned << " models scanned)\n";
    }
    res.text = text.str();
    return res;
  });
}

namespace {

void audit_table1(Audit& audit) {
  KripkeContext kc = make_kc_ds(fixtures::table1_context());
  const Context& ctx = kc.ctx;
  auto obj = [&](const std::string& csv) { return io::parse_object_set(ctx, csv); };
  auto att = [&](const std::string& csv) { return io::parse_attribute_set(ctx, csv); };
  auto want = [&](const std::string& ext, const std::string& intent) {
    return Protoconcept{ctx.id(), obj(ext), att(intent)};
  };

  auto [e1, rep1] = induced_relation(ctx, InducedKind::E1);
  auto e1_classes = relation_classes(e1);
  bool e1_ok = rep1.equivalence() && e1_classes.size() == 3 &&
               e1_classes[0] == obj("Leech,Bream") && e1_classes[1] == obj("Frog") &&
               e1_classes[2] == obj("Dog,Cat");
  audit.add("E1 classes", e1_ok, "{Leech,Bream} {Frog} {Dog,Cat}");

  auto [e2, rep2] = induced_relation(ctx, InducedKind::E2);
  auto e2_classes = relation_classes(e2);
  bool e2_ok = rep2.equivalence() && e2_classes.size() == 3 && e2_classes[0] == att("a,g") &&
               e2_classes[1] == att("b") && e2_classes[2] == att("c");
  audit.add("E2 classes", e2_ok, "{a,g} {b} {c}");

  ConceptApprox ca = concept_approx(kc, Side::objects, obj("Leech,Bream,Dog"));
  audit.add("lower concept approximation of A", !ca.exact && ca.lower == want("Leech,Bream,Frog", "a,b,g"),
            proto_text(ctx, ca.lower));
  audit.add("upper concept approximation of A",
            !ca.exact && ca.upper == want("Leech,Bream,Frog,Dog,Cat", "a,g"),
            proto_text(ctx, ca.upper));

  ConceptApprox cb = concept_approx(kc, Side::attributes, att("a,c"));
  audit.add("lower concept approximation of B", !cb.exact && cb.lower == want("Frog,Dog,Cat", "a,g,c"),
            proto_text(ctx, cb.lower));
  audit.add("upper concept approximation of B", !cb.exact && cb.upper == want("Frog,Dog,Cat", "a,g,c"),
            proto_text(ctx, cb.upper));

  PairApprox pa = pair_approx(kc, obj("Leech,Bream,Dog"), att("a,c"));
  audit.add("lower approximation of (A,B)", !pa.is_concept && pa.lower == want("Frog", "a,b,c,g"),
            proto_text(ctx, pa.lower));
  audit.add("upper approximation of (A,B)",
            !pa.is_concept && pa.upper == want("Leech,Bream,Frog,Dog,Cat", "a,g"),
            proto_text(ctx, pa.upper));
}

void audit_table2(Audit& audit) {
  Context ctx = fixtures::table2_context();
  auto [e1, rep1] = induced_relation(ctx, InducedKind::E1);
  auto classes = relation_classes(e1);
  bool ok = rep1.equivalence() && classes.size() == 3 &&
            classes[0] == io::parse_object_set(ctx, "D1,D4") &&
            classes[1] == io::parse_object_set(ctx, "D2") &&
            classes[2] == io::parse_object_set(ctx, "D3");
  audit.add("E1 classes", ok, "{D1,D4} {D2} {D3}");
  auto [e2, rep2] = induced_relation(ctx, InducedKind::E2);
  audit.add("E2 equivalence", rep2.equivalence(), "S1..S5 grouped by column");
}

void audit_table3(Audit& audit) {
  KripkeContext kc = fixtures::example32_kc();
  const Context& ctx = kc.ctx;
  auto protos = enumerate(ctx, KindFilter::Protoconcepts);
  audit.add("protoconcept count", protos.size() == 8, std::to_string(protos.size()));
  auto concepts = enumerate(ctx, KindFilter::Concepts);
  audit.add("concept count", concepts.size() == 4, std::to_string(concepts.size()));
  BooleanParts parts = boolean_parts(ctx);
  audit.add("meet part size", parts.meet_part.size() == 8, std::to_string(parts.meet_part.size()));
  audit.add("join part size", parts.join_part.size() == 4, std::to_string(parts.join_part.size()));

  Protoconcept ce_a{ctx.id(), io::parse_object_set(ctx, "c,e"), io::parse_attribute_set(ctx, "a")};
  Protoconcept frv = f_r(kc, ce_a);
  audit.add("fR(({c,e},{a}))",
            frv == Protoconcept{ctx.id(), io::parse_object_set(ctx, "d,e"), 0}, proto_text(ctx, frv));
  Protoconcept fsv = f_s(kc, ce_a);
  audit.add("fS(({c,e},{a}))",
            fsv == Protoconcept{ctx.id(), io::parse_object_set(ctx, "d"),
                                io::parse_attribute_set(ctx, "b")},
            proto_text(ctx, fsv));

  KcReport rep = kc_report(kc);
  audit.add("symmetric from the right", rep.symmetric_right, rep.symmetric_right ? "yes" : "no");
  audit.add("not reflexive", !rep.reflexive(), rep.reflexive() ? "reflexive" : "not reflexive");
  // The displayed quantified conditions evaluate to false at (e,a,b).
  audit.add("back-and-forth conditions (exact scan)", rep.bisimulation == false,
            rep.bisimulation ? "hold" : "fail at (e,a,b)");
}

void audit_thm_3_4(Audit& audit) {
  std::vector<KripkeContext> samples;
  samples.push_back(fixtures::example32_kc());
  samples.push_back(make_kc_ds(fixtures::table1_context()));
  samples.push_back(make_kc_identity(fixtures::table2_context()));
  bool meet_law = true, join_law = true, idem_law = true, neg_law = true, fix_law = true;
  bool dual_add = true, dual_fix = true;
  for (const auto& kc : samples) {
    const Context& ctx = kc.ctx;
    auto protos = enumerate(ctx, KindFilter::Protoconcepts);
    for (const auto& x : protos) {
      idem_law &= f_r(kc, proto_meet(ctx, x, x)) == f_r(kc, x);
      idem_law &= f_s(kc, proto_join(ctx, x, x)) == f_s(kc, x);
      neg_law &= f_r(kc, proto_neg(ctx, x)) == proto_neg(ctx, f_r_dual(kc, x));
      neg_law &= f_s(kc, proto_lneg(ctx, x)) == proto_lneg(ctx, f_s_dual(kc, x));
      for (const auto& y : protos) {
        meet_law &= f_r(kc, proto_meet(ctx, x, y)) == proto_meet(ctx, f_r(kc, x), f_r(kc, y));
        join_law &= f_s(kc, proto_join(ctx, x, y)) == proto_join(ctx, f_s(kc, x), f_s(kc, y));
        dual_add &=
            f_r_dual(kc, proto_vee(ctx, x, y)) == proto_vee(ctx, f_r_dual(kc, x), f_r_dual(kc, y));
        dual_add &= f_s_dual(kc, proto_wedge(ctx, x, y)) ==
                    proto_wedge(ctx, f_s_dual(kc, x), f_s_dual(kc, y));
      }
    }
    Protoconcept nb = proto_neg(ctx, proto_bot(ctx));
    fix_law &= f_r(kc, nb) == nb;
    fix_law &= f_s(kc, proto_lneg(ctx, proto_top(ctx))) == proto_lneg(ctx, proto_top(ctx));
    dual_fix &= f_r_dual(kc, proto_bot(ctx)) == proto_bot(ctx);
    dual_fix &= f_s_dual(kc, proto_top(ctx)) == proto_top(ctx);
  }
  audit.add("fR distributes over meet, fS over join", meet_law && join_law, "all sampled pairs");
  audit.add("fR/fS collapse idempotent parts", idem_law, "all sampled elements");
  audit.add("fR neg x = neg fR-dual x (and the lneg dual)", neg_law, "all sampled elements");
  audit.add("fR(neg bot) = neg bot, fS(lneg top) = lneg top", fix_law, "all samples");
  audit.add("duals additive over vee/wedge", dual_add, "all sampled pairs");
  audit.add("fR-dual(bot) = bot, fS-dual(top) = top", dual_fix, "all samples");
}

void audit_thm_4_9(Audit& audit) {
  bool all_ok = true;
  int frames = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      std::vector<Mask> rows(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((bits >> (i * n + j)) & 1)
            rows[static_cast<size_t>(i)] = with_bit(rows[static_cast<size_t>(i)], j);
      all_ok &= frame_bridge(n, rows).ok();
      ++frames;
    }
  audit.add("frame bridge over all frames with |W| <= 3", all_ok,
            std::to_string(frames) + " frames");
}

void audit_thm_4_15(Audit& audit) {
  RepresentationReport two = representation(boolean_dba(1, true));
  audit.add("2-element Boolean dBao embeds", two.embedding_ok() && two.injective, "h verified");
  RepresentationReport four = representation(boolean_dba(2, true));
  audit.add("4-element Boolean dBao embeds", four.embedding_ok() && four.injective, "h verified");
  RepresentationReport ex =
      representation(complex_algebra(fixtures::example32_kc(), CarrierKind::Full).alg);
  audit.add("complex algebra of the worked Kripke context embeds",
            ex.embedding_ok() && ex.injective && ex.contextual_input, "h verified");
  RepresentationReport topo =
      representation(complex_algebra(make_kc_ds(fixtures::table3_context()), CarrierKind::Full).alg);
  audit.add("topological sample embeds with reflexive+transitive canonical relations",
            topo.embedding_ok() && topo.topological_input && topo.canonical_reflexive_transitive,
            "h verified");
}

void audit_proofs(Audit& audit, const std::vector<fixtures::ProofFixture>& fixtures_list) {
  for (const auto& pf : fixtures_list) {
    logic::ProofCheck check = logic::check_derivation(pf.tree, logic::System::cdbl(), pf.hypotheses);
    audit.add(pf.name, check.ok,
              logic::print(pf.tree.seq) + " (" + std::to_string(check.nodes) + " nodes)");
  }
}

struct FixtureDef {
  const char* name;
  void (*run)(Audit&);
};

void run_appendix(Audit& audit) { audit_proofs(audit, fixtures::appendix_fixtures()); }
void run_prop51(Audit& audit) { audit_proofs(audit, fixtures::derived_rule_fixtures()); }
void run_thm52(Audit& audit) { audit_proofs(audit, fixtures::derived_sequent_fixtures()); }

constexpr FixtureDef kFixtures[] = {
    {"table1", audit_table1},   {"table2", audit_table2},   {"table3", audit_table3},
    {"thm-3-4", audit_thm_3_4}, {"thm-4-9", audit_thm_4_9}, {"thm-4-15", audit_thm_4_15},
    {"appendix", run_appendix}, {"prop-5-1", run_prop51},   {"thm-5-2", run_thm52},
};

}  // namespace

Result fixtures_run(const std::string& name) {
  return guarded([&]() -> Result {
    Audit audit;
    bool matched = false;
    for (const auto& def : kFixtures) {
      if (!name.empty() && name != def.name) continue;
      matched = true;
      audit.text << "== " << def.name << " ==\n";
      def.run(audit);
    }
    if (!matched) {
      // individual derivation fixtures can be run by their own name
      if (const fixtures::ProofFixture* pf = fixtures::find_proof_fixture(name)) {
        audit.text << "== " << pf->name << " ==\n";
        audit_proofs(audit, {*pf});
        matched = true;
      }
    }
    if (!matched) fail(ErrorCode::invalid_argument, "unknown fixture '" + name + "'");
    return audit.finish();
  });
}

}  // namespace kcw::commands
