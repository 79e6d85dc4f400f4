#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "context.hpp"
#include "dba.hpp"
#include "kripke.hpp"
#include "logic/derivation.hpp"
#include "logic/parser.hpp"

namespace kcw::io {

using nlohmann::json;

// Context files: Burmeister plain text (header B) or the JSON form; the
// loader sniffs the leading character.
Context parse_burmeister(const std::string& text);
Context context_from_json(const json& j);
Context load_context(const std::string& path);
json context_to_json(const Context& ctx);

KripkeContext kripke_from_json(const json& j);
KripkeContext load_kripke(const std::string& path);
json kripke_to_json(const KripkeContext& kc);

// {"size": n, "R": [[i,j], ...]} with carrier w0..w{n-1}
std::pair<int, std::vector<Mask>> load_frame(const std::string& path);

Dba algebra_from_json(const json& j);
Dba load_algebra(const std::string& path);
json algebra_to_json(const Dba& alg);

// Bridge inputs: {"kind":"bao", ...} or {"kind":"dba-parts", "dba":..., "ibar":..., "cbar":...}
struct BridgeInput {
  bool from_bao = false;
  Bao bao;
  Dba dba;
  std::vector<Elem> ibar, cbar;
};
BridgeInput load_bridge_input(const std::string& path);

struct ProofFile {
  std::string system;  // empty when unspecified
  std::vector<logic::Sequent> hypotheses;
  logic::DerivNode root;
};
ProofFile proof_from_json(const json& j);
ProofFile load_proof(const std::string& path);

// Comma-separated names; "" and "-" denote the empty set.
Mask parse_object_set(const Context& ctx, const std::string& csv);
Mask parse_attribute_set(const Context& ctx, const std::string& csv);

std::string read_file(const std::string& path);
json parse_json(const std::string& text);

json proto_json(const Context& ctx, const Protoconcept& x);
json mask_json(const std::vector<std::string>& names, Mask m);
json pairs_json(const std::vector<Mask>& rows);

}  // namespace kcw::io
