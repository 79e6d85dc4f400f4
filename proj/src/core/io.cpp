#include "io.hpp"

#include <fstream>
#include <sstream>

namespace kcw::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::parse_error, "invalid JSON");
  return j;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

int to_count(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::parse_error, std::string("expected a ") + what + " count, got '" + s + "'");
  }
}

void expect_key(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::parse_error, std::string("missing key '") + key + "'");
}

std::vector<std::string> string_list(const json& j, const char* key) {
  expect_key(j, key);
  if (!j[key].is_array()) fail(ErrorCode::parse_error, std::string(key) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j[key]) {
    if (!v.is_string()) fail(ErrorCode::parse_error, std::string(key) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<Mask> relation_rows(const json& pairs, int n, const char* key) {
  std::vector<Mask> rows(static_cast<size_t>(n), 0);
  if (!pairs.is_array()) fail(ErrorCode::parse_error, std::string(key) + " must be an array of pairs");
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      fail(ErrorCode::parse_error, std::string(key) + " entries must be index pairs");
    int a = p[0].get<int>(), b = p[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorCode::parse_error, std::string(key) + " index out of range");
    rows[static_cast<size_t>(a)] = with_bit(rows[static_cast<size_t>(a)], b);
  }
  return rows;
}

std::vector<Elem> elem_list(const json& j, const char* key, size_t want) {
  expect_key(j, key);
  if (!j[key].is_array() || j[key].size() != want)
    fail(ErrorCode::parse_error, std::string(key) + " must be an array of length " + std::to_string(want));
  std::vector<Elem> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 65534)
      fail(ErrorCode::parse_error, std::string(key) + " entries must be small non-negative integers");
    out.push_back(static_cast<Elem>(v.get<int>()));
  }
  return out;
}

}  // namespace

Context parse_burmeister(const std::string& text) {
  std::vector<std::string> lines = nonblank_lines(text);
  size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= lines.size()) fail(ErrorCode::parse_error, "unexpected end of context file");
    return lines[at++];
  };
  if (next() != "B") fail(ErrorCode::parse_error, "context file must start with 'B'");
  // optional name line before the counts
  std::string first = next();
  std::string second = next();
  int g, m;
  bool first_numeric = !first.empty() && first.find_first_not_of("0123456789") == std::string::npos;
  if (first_numeric) {
    g = to_count(first, "object");
    m = to_count(second, "attribute");
  } else {
    g = to_count(second, "object");
    m = to_count(next(), "attribute");
  }
  std::vector<std::string> objects, attributes, rows;
  for (int i = 0; i < g; ++i) objects.push_back(next());
  for (int i = 0; i < m; ++i) attributes.push_back(next());
  for (int i = 0; i < g; ++i) rows.push_back(next());
  if (at != lines.size()) fail(ErrorCode::parse_error, "trailing content in context file");
  return Context::from_rows(std::move(objects), std::move(attributes), rows);
}

Context context_from_json(const json& j) {
  std::vector<std::string> objects = string_list(j, "objects");
  std::vector<std::string> attributes = string_list(j, "attributes");
  std::vector<std::string> rows = string_list(j, "incidence");
  if (rows.size() != objects.size())
    fail(ErrorCode::parse_error, "incidence must have one row per object");
  return Context::from_rows(std::move(objects), std::move(attributes), rows);
}

Context load_context(const std::string& path) {
  std::string text = read_file(path);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = parse_json(text);
    if (j.contains("context")) return context_from_json(j["context"]);
    return context_from_json(j);
  }
  return parse_burmeister(text);
}

json context_to_json(const Context& ctx) {
  json rows = json::array();
  for (int gi = 0; gi < ctx.size_g(); ++gi) {
    std::string row;
    for (int mi = 0; mi < ctx.size_m(); ++mi) row += ctx.incidence(gi, mi) ? 'X' : '.';
    rows.push_back(row);
  }
  return json{{"objects", ctx.objects()}, {"attributes", ctx.attributes()}, {"incidence", rows}};
}

KripkeContext kripke_from_json(const json& j) {
  expect_key(j, "context");
  Context ctx = context_from_json(j["context"]);
  expect_key(j, "R");
  expect_key(j, "S");
  std::vector<Mask> r = relation_rows(j["R"], ctx.size_g(), "R");
  std::vector<Mask> s = relation_rows(j["S"], ctx.size_m(), "S");
  return KripkeContext(std::move(ctx), std::move(r), std::move(s));
}

KripkeContext load_kripke(const std::string& path) {
  json j = parse_json(read_file(path));
  return kripke_from_json(j);
}

json kripke_to_json(const KripkeContext& kc) {
  return json{{"context", context_to_json(kc.ctx)},
              {"R", pairs_json(kc.r_rows)},
              {"S", pairs_json(kc.s_rows)}};
}

std::pair<int, std::vector<Mask>> load_frame(const std::string& path) {
  json j = parse_json(read_file(path));
  expect_key(j, "size");
  if (!j["size"].is_number_integer() || j["size"].get<int>() < 1 || j["size"].get<int>() > 31)
    fail(ErrorCode::parse_error, "frame size must be between 1 and 31");
  int n = j["size"].get<int>();
  expect_key(j, "R");
  return {n, relation_rows(j["R"], n, "R")};
}

Dba algebra_from_json(const json& j) {
  expect_key(j, "size");
  if (!j["size"].is_number_integer() || j["size"].get<int>() < 1)
    fail(ErrorCode::parse_error, "size must be a positive integer");
  Dba alg;
  alg.n = j["size"].get<int>();
  size_t n = static_cast<size_t>(alg.n);
  alg.meet_t = elem_list(j, "meet", n * n);
  alg.join_t = elem_list(j, "join", n * n);
  alg.neg_t = elem_list(j, "neg", n);
  alg.lneg_t = elem_list(j, "lneg", n);
  expect_key(j, "top");
  expect_key(j, "bot");
  alg.top = static_cast<Elem>(j["top"].get<int>());
  alg.bot = static_cast<Elem>(j["bot"].get<int>());
  if (j.contains("I") || j.contains("C")) {
    alg.i_t = elem_list(j, "I", n);
    alg.c_t = elem_list(j, "C", n);
  }
  alg.validate_shape();
  return alg;
}

Dba load_algebra(const std::string& path) { return algebra_from_json(parse_json(read_file(path))); }

json algebra_to_json(const Dba& alg) {
  json j{{"size", alg.n},
         {"top", alg.top},
         {"bot", alg.bot},
         {"meet", alg.meet_t},
         {"join", alg.join_t},
         {"neg", alg.neg_t},
         {"lneg", alg.lneg_t}};
  if (alg.has_operators()) {
    j["I"] = alg.i_t;
    j["C"] = alg.c_t;
  }
  return j;
}

BridgeInput load_bridge_input(const std::string& path) {
  json j = parse_json(read_file(path));
  expect_key(j, "kind");
  BridgeInput input;
  std::string kind = j["kind"].get<std::string>();
  if (kind == "bao") {
    input.from_bao = true;
    expect_key(j, "size");
    input.bao.n = j["size"].get<int>();
    size_t n = static_cast<size_t>(input.bao.n);
    input.bao.join_t = elem_list(j, "join", n * n);
    input.bao.meet_t = elem_list(j, "meet", n * n);
    input.bao.neg_t = elem_list(j, "neg", n);
    input.bao.f_t = elem_list(j, "f", n);
    expect_key(j, "top");
    expect_key(j, "bot");
    input.bao.top = static_cast<Elem>(j["top"].get<int>());
    input.bao.bot = static_cast<Elem>(j["bot"].get<int>());
  } else if (kind == "dba-parts") {
    input.from_bao = false;
    expect_key(j, "dba");
    input.dba = algebra_from_json(j["dba"]);
    input.ibar = elem_list(j, "ibar", static_cast<size_t>(input.dba.n));
    input.cbar = elem_list(j, "cbar", static_cast<size_t>(input.dba.n));
  } else {
    fail(ErrorCode::parse_error, "bridge kind must be 'bao' or 'dba-parts'");
  }
  return input;
}

namespace {
logic::DerivNode proof_node(const json& j) {
  expect_key(j, "seq");
  expect_key(j, "by");
  logic::DerivNode node;
  node.seq = logic::parse_sequent(j["seq"].get<std::string>());
  node.just = j["by"].get<std::string>();
  if (j.contains("premises"))
    for (const auto& p : j["premises"]) node.premises.push_back(proof_node(p));
  return node;
}
}  // namespace

ProofFile proof_from_json(const json& j) {
  ProofFile out;
  if (j.contains("proof")) {
    if (j.contains("system")) out.system = j["system"].get<std::string>();
    if (j.contains("hypotheses"))
      for (const auto& h : j["hypotheses"])
        out.hypotheses.push_back(logic::parse_sequent(h.get<std::string>()));
    out.root = proof_node(j["proof"]);
  } else {
    out.root = proof_node(j);
  }
  return out;
}

ProofFile load_proof(const std::string& path) { return proof_from_json(parse_json(read_file(path))); }

namespace {
Mask parse_set(const std::vector<std::string>& names, const std::string& csv, const char* what) {
  std::string text = trim(csv);
  if (text.empty() || text == "-") return 0;
  Mask out = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string name = trim(text.substr(start, comma == std::string::npos ? comma : comma - start));
    if (name.empty()) fail(ErrorCode::invalid_argument, std::string("empty name in ") + what + " set");
    bool found = false;
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) {
        out = with_bit(out, static_cast<int>(i));
        found = true;
      }
    if (!found) fail(ErrorCode::invalid_argument, std::string("unknown ") + what + " '" + name + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}
}  // namespace

Mask parse_object_set(const Context& ctx, const std::string& csv) {
  return parse_set(ctx.objects(), csv, "object");
}

Mask parse_attribute_set(const Context& ctx, const std::string& csv) {
  return parse_set(ctx.attributes(), csv, "attribute");
}

json proto_json(const Context& ctx, const Protoconcept& x) {
  return json{{"extent", ctx.object_names(x.extent)}, {"intent", ctx.attribute_names(x.intent)}};
}

json mask_json(const std::vector<std::string>& names, Mask m) {
  json out = json::array();
  for (int i : mask_indices(m)) out.push_back(names[static_cast<size_t>(i)]);
  return out;
}

json pairs_json(const std::vector<Mask>& rows) {
  json out = json::array();
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j : mask_indices(rows[i])) out.push_back(json::array({i, j}));
  return out;
}

}  // namespace kcw::io
