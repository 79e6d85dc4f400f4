#include "fixtures.hpp"

#include "logic/parser.hpp"

namespace kcw::fixtures {

using logic::DerivNode;
using logic::parse_sequent;
using logic::Sequent;

Context table1_context() {
  return Context::from_rows({"Leech", "Bream", "Frog", "Dog", "Cat"}, {"a", "b", "c", "g"},
                            {"XX.X", "XX.X", "XXXX", "X.XX", "X.XX"});
}

Context table2_context() {
  return Context::from_rows({"D1", "D2", "D3", "D4"}, {"S1", "S2", "S3", "S4", "S5"},
                            {"XX.X.", "..X.X", "..XXX", "XX.X."});
}

Context table3_context() {
  return Context::from_rows({"c", "d", "e"}, {"a", "b"}, {"X.", ".X", "X."});
}

KripkeContext example32_kc() {
  // R = {(c,d),(d,e)}, S = {(a,b),(b,a)}
  return KripkeContext(table3_context(), {Mask{1} << 1, Mask{1} << 2, 0},
                       {Mask{1} << 1, Mask{1} << 0});
}

namespace {

DerivNode ax(const std::string& seq, const std::string& id) {
  return {parse_sequent(seq), "axiom:" + id, {}};
}

DerivNode hyp(const std::string& seq) { return {parse_sequent(seq), "hyp", {}}; }

DerivNode rule(const std::string& seq, const std::string& id, std::vector<DerivNode> premises) {
  return {parse_sequent(seq), "rule:" + id, std::move(premises)};
}

// Commutativity of meet, at alpha=p, beta=q.
DerivNode tree_1a(const char* p, const char* q) {
  std::string P = p, Q = q;
  return rule(P + " & " + Q + " |- " + Q + " & " + P, "R4",
              {ax(P + " & " + Q + " |- (" + P + " & " + Q + ") & (" + P + " & " + Q + ")", "4a"),
               rule("(" + P + " & " + Q + ") & (" + P + " & " + Q + ") |- " + Q + " & " + P, "R6",
                    {ax(P + " & " + Q + " |- " + Q, "3a"), ax(P + " & " + Q + " |- " + P, "2a")})});
}

// Sub-derivation (I): (p&q)&r |- q&r.
DerivNode tree_2a_part1() {
  return rule("(p & q) & r |- q & r", "R4",
              {ax("(p & q) & r |- ((p & q) & r) & ((p & q) & r)", "4a"),
               rule("((p & q) & r) & ((p & q) & r) |- q & r", "R6",
                    {rule("(p & q) & r |- q", "R4",
                          {ax("(p & q) & r |- p & q", "2a"), ax("p & q |- q", "3a")}),
                     ax("(p & q) & r |- r", "3a")})});
}

// Associativity: (p&q)&r |- p&(q&r), with (I) inlined.
DerivNode tree_2a() {
  return rule("(p & q) & r |- p & (q & r)", "R4",
              {ax("(p & q) & r |- ((p & q) & r) & ((p & q) & r)", "4a"),
               rule("((p & q) & r) & ((p & q) & r) |- p & (q & r)", "R6",
                    {rule("(p & q) & r |- p", "R4",
                          {ax("(p & q) & r |- p & q", "2a"), ax("p & q |- p", "2a")}),
                     tree_2a_part1()})});
}

// Converse associativity, built from the same axioms.
DerivNode tree_2a_conv() {
  const char* X = "p & (q & r)";
  auto s = [&](const std::string& rhs) { return std::string(X) + " |- " + rhs; };
  DerivNode x_q = rule(s("q"), "R4", {ax(s("q & r"), "3a"), ax("q & r |- q", "2a")});
  DerivNode x_r = rule(s("r"), "R4", {ax(s("q & r"), "3a"), ax("q & r |- r", "3a")});
  DerivNode x_pq =
      rule(s("p & q"), "R4",
           {ax(s("(p & (q & r)) & (p & (q & r))"), "4a"),
            rule("(p & (q & r)) & (p & (q & r)) |- p & q", "R6", {ax(s("p"), "2a"), x_q})});
  return rule(s("(p & q) & r"), "R4",
              {ax(s("(p & (q & r)) & (p & (q & r))"), "4a"),
               rule("(p & (q & r)) & (p & (q & r)) |- (p & q) & r", "R6", {x_pq, x_r})});
}

// Meet semi-idempotence, first direction: (p&p)&q |- p&q.
DerivNode tree_3a() {
  return rule("(p & p) & q |- p & q", "R4",
              {ax("(p & p) & q |- ((p & p) & q) & ((p & p) & q)", "4a"),
               rule("((p & p) & q) & ((p & p) & q) |- p & q", "R6",
                    {rule("(p & p) & q |- p", "R4",
                          {ax("(p & p) & q |- p & p", "2a"), ax("p & p |- p", "2a")}),
                     ax("(p & p) & q |- q", "3a")})});
}

// Meet semi-idempotence, second direction: p&q |- (p&p)&q.
DerivNode tree_3a_conv() {
  return rule(
      "p & q |- (p & p) & q", "R4",
      {ax("p & q |- (p & q) & (p & q)", "4a"),
       rule("(p & q) & (p & q) |- (p & p) & q", "R6",
            {rule("p & q |- p & p", "R4",
                  {ax("p & q |- (p & q) & (p & q)", "4a"),
                   rule("(p & q) & (p & q) |- p & p", "R6",
                        {ax("p & q |- p", "2a"), ax("p & q |- p", "2a")})}),
             ax("p & q |- q", "3a")})});
}

// Absorption 5a; 6a is the same shape with v in place of |.
DerivNode tree_5a(const char* join_op) {
  std::string X = std::string("p & (p ") + join_op + " q)";
  return rule(X + " |- p & p", "R4",
              {ax(X + " |- (" + X + ") & (" + X + ")", "4a"),
               rule("(" + X + ") & (" + X + ") |- p & p", "R6",
                    {ax(X + " |- p", "2a"), ax(X + " |- p", "2a")})});
}

// Dual commutativity: p|q |- q|p.
DerivNode tree_1b(const char* p, const char* q) {
  std::string P = p, Q = q;
  std::string Z = Q + " | " + P;
  return rule(P + " | " + Q + " |- " + Z, "R4",
              {rule(P + " | " + Q + " |- (" + Z + ") | (" + Z + ")", "R7",
                    {ax(P + " |- " + Z, "3b"), ax(Q + " |- " + Z, "2b")}),
               ax("(" + Z + ") | (" + Z + ") |- " + Z, "4b")});
}

DerivNode tree_2b() {
  // p|(q|r) |- (p|q)|r
  const char* Z = "(p | q) | r";
  auto to_z = [&](const std::string& lhs) { return lhs + " |- " + Z; };
  DerivNode u1 = rule(to_z("p"), "R4", {ax("p |- p | q", "2b"), ax("p | q |- (p | q) | r", "2b")});
  DerivNode v1 = rule(to_z("q"), "R4", {ax("q |- p | q", "3b"), ax("p | q |- (p | q) | r", "2b")});
  DerivNode v2 = ax(to_z("r"), "3b");
  DerivNode u2 = rule(to_z("q | r"), "R4",
                      {rule("q | r |- ((p | q) | r) | ((p | q) | r)", "R7", {v1, v2}),
                       ax("((p | q) | r) | ((p | q) | r) |- (p | q) | r", "4b")});
  return rule(to_z("p | (q | r)"), "R4",
              {rule("p | (q | r) |- ((p | q) | r) | ((p | q) | r)", "R7", {u1, u2}),
               ax("((p | q) | r) | ((p | q) | r) |- (p | q) | r", "4b")});
}

DerivNode tree_2b_conv() {
  // (p|q)|r |- p|(q|r)
  const char* W = "p | (q | r)";
  auto to_w = [&](const std::string& lhs) { return lhs + " |- " + W; };
  DerivNode x1 = ax(to_w("p"), "2b");
  DerivNode x2 = rule(to_w("q"), "R4", {ax("q |- q | r", "2b"), ax("q | r |- p | (q | r)", "3b")});
  DerivNode w1 = rule(to_w("p | q"), "R4",
                      {rule("p | q |- (p | (q | r)) | (p | (q | r))", "R7", {x1, x2}),
                       ax("(p | (q | r)) | (p | (q | r)) |- p | (q | r)", "4b")});
  DerivNode w2 = rule(to_w("r"), "R4", {ax("r |- q | r", "3b"), ax("q | r |- p | (q | r)", "3b")});
  return rule(to_w("(p | q) | r"), "R4",
              {rule("(p | q) | r |- (p | (q | r)) | (p | (q | r))", "R7", {w1, w2}),
               ax("(p | (q | r)) | (p | (q | r)) |- p | (q | r)", "4b")});
}

DerivNode tree_3b() {
  // (p|p)|q |- p|q
  DerivNode e1 = rule("p | p |- p | q", "R4",
                      {rule("p | p |- (p | q) | (p | q)", "R7",
                            {ax("p |- p | q", "2b"), ax("p |- p | q", "2b")}),
                       ax("(p | q) | (p | q) |- p | q", "4b")});
  DerivNode e2 = ax("q |- p | q", "3b");
  return rule("(p | p) | q |- p | q", "R4",
              {rule("(p | p) | q |- (p | q) | (p | q)", "R7", {e1, e2}),
               ax("(p | q) | (p | q) |- p | q", "4b")});
}

DerivNode tree_3b_conv() {
  // p|q |- (p|p)|q
  DerivNode f1 = rule("p |- (p | p) | q", "R4",
                      {ax("p |- p | p", "2b"), ax("p | p |- (p | p) | q", "2b")});
  DerivNode f2 = ax("q |- (p | p) | q", "3b");
  return rule("p | q |- (p | p) | q", "R4",
              {rule("p | q |- ((p | p) | q) | ((p | p) | q)", "R7", {f1, f2}),
               ax("((p | p) | q) | ((p | p) | q) |- (p | p) | q", "4b")});
}

DerivNode tree_5b(const char* meet_op) {
  std::string Y = std::string("p | (p ") + meet_op + " q)";
  return rule("p | p |- " + Y, "R4",
              {rule("p | p |- (" + Y + ") | (" + Y + ")", "R7",
                    {ax("p |- " + Y, "2b"), ax("p |- " + Y, "2b")}),
               ax("(" + Y + ") | (" + Y + ") |- " + Y, "4b")});
}

std::vector<ProofFixture> build_appendix() {
  std::vector<ProofFixture> out;
  out.push_back({"appendix-1a", tree_1a("p", "q"), {}});
  out.push_back({"appendix-2a", tree_2a(), {}});
  out.push_back({"appendix-3a", tree_3a(), {}});
  out.push_back({"appendix-3a-conv", tree_3a_conv(), {}});
  out.push_back({"appendix-5a", tree_5a("|"), {}});
  out.push_back({"appendix-6a", tree_5a("v"), {}});
  return out;
}

std::vector<ProofFixture> build_derived_rules() {
  std::vector<ProofFixture> out;
  out.push_back({"prop51-r6",
                 rule("p & p |- q & r", "R4",
                      {rule("p & p |- q & p", "R1", {hyp("p |- q")}),
                       rule("q & p |- q & r", "R1'", {hyp("p |- r")})}),
                 {parse_sequent("p |- q"), parse_sequent("p |- r")}});
  out.push_back({"prop51-r7",
                 rule("q | r |- p | p", "R4",
                      {rule("q | r |- p | r", "R2", {hyp("q |- p")}),
                       rule("p | r |- p | p", "R2'", {hyp("r |- p")})}),
                 {parse_sequent("q |- p"), parse_sequent("r |- p")}});
  return out;
}

std::vector<ProofFixture> build_derived_sequents() {
  std::vector<ProofFixture> out;
  out.push_back({"thm52-1a", tree_1a("p", "q"), {}});
  out.push_back({"thm52-1a-conv", tree_1a("q", "p"), {}});
  out.push_back({"thm52-1b", tree_1b("p", "q"), {}});
  out.push_back({"thm52-1b-conv", tree_1b("q", "p"), {}});
  out.push_back({"thm52-2a", tree_2a_conv(), {}});
  out.push_back({"thm52-2a-conv", tree_2a(), {}});
  out.push_back({"thm52-2b", tree_2b(), {}});
  out.push_back({"thm52-2b-conv", tree_2b_conv(), {}});
  out.push_back({"thm52-3a", tree_3a(), {}});
  out.push_back({"thm52-3a-conv", tree_3a_conv(), {}});
  out.push_back({"thm52-3b", tree_3b(), {}});
  out.push_back({"thm52-3b-conv", tree_3b_conv(), {}});
  out.push_back({"thm52-4a", rule("!p |- !(p & p)", "R3", {ax("p & p |- p", "2a")}), {}});
  out.push_back({"thm52-4b", rule("~(p | p) |- ~p", "R3'", {ax("p |- p | p", "2b")}), {}});
  out.push_back({"thm52-5a", tree_5a("|"), {}});
  out.push_back({"thm52-5b", tree_5b("&"), {}});
  out.push_back({"thm52-6a", tree_5a("v"), {}});
  out.push_back({"thm52-6b", tree_5b("^"), {}});
  out.push_back({"thm52-7a", ax("bot |- p & !p", "11a"), {}});
  out.push_back({"thm52-7b", ax("p | ~p |- top", "11b"), {}});
  out.push_back({"thm52-8a", ax("bot |- !top", "11a"), {}});
  out.push_back({"thm52-8b", ax("~bot |- top", "11b"), {}});
  return out;
}

}  // namespace

const std::vector<ProofFixture>& appendix_fixtures() {
  static const std::vector<ProofFixture> fixtures = build_appendix();
  return fixtures;
}

const std::vector<ProofFixture>& derived_rule_fixtures() {
  static const std::vector<ProofFixture> fixtures = build_derived_rules();
  return fixtures;
}

const std::vector<ProofFixture>& derived_sequent_fixtures() {
  static const std::vector<ProofFixture> fixtures = build_derived_sequents();
  return fixtures;
}

const ProofFixture* find_proof_fixture(const std::string& name) {
  for (const auto* f : all_proof_fixtures())
    if (f->name == name) return f;
  return nullptr;
}

std::vector<const ProofFixture*> all_proof_fixtures() {
  std::vector<const ProofFixture*> out;
  for (const auto& f : appendix_fixtures()) out.push_back(&f);
  for (const auto& f : derived_rule_fixtures()) out.push_back(&f);
  for (const auto& f : derived_sequent_fixtures()) out.push_back(&f);
  return out;
}

}  // namespace kcw::fixtures
