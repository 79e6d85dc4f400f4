#include <doctest.h>

#include "core/commands.hpp"
#include "core/io.hpp"
#include "oracle.hpp"

using namespace kcw;

TEST_CASE("burmeister parsing") {
  std::string text = "B\n\n3\n2\nc\nd\ne\na\nb\nX.\n.X\nX.\n";
  Context ctx = io::parse_burmeister(text);
  CHECK(ctx.size_g() == 3);
  CHECK(ctx.size_m() == 2);
  CHECK(ctx.incidence(0, 0));
  CHECK_FALSE(ctx.incidence(0, 1));

  // a name line before the counts is tolerated
  Context named = io::parse_burmeister("B\nwater life\n2\n1\nx\ny\na\nX\n.\n");
  CHECK(named.objects()[0] == "x");

  CHECK_THROWS_AS(io::parse_burmeister("Q\n1\n1\ng\nm\nX\n"), Error);
  CHECK_THROWS_AS(io::parse_burmeister("B\n2\n1\ng\nm\nX\n"), Error);       // row count short
  CHECK_THROWS_AS(io::parse_burmeister("B\n1\n1\ng\nm\nX\nX\n"), Error);    // trailing rows
  CHECK_THROWS_AS(io::parse_burmeister("B\n1\n1\ng\nm\nXX\n"), Error);      // row too wide
  CHECK_THROWS_AS(io::parse_burmeister("B\n1\n1\ng\nm\n?\n"), Error);       // bad cell
}

TEST_CASE("json round trips") {
  Context ctx = io::context_from_json(io::context_to_json(
      Context::from_rows({"g0", "g1"}, {"m0"}, {"X", "."})));
  CHECK(ctx.size_g() == 2);
  CHECK(ctx.incidence(0, 0));

  KripkeContext kc(Context::from_rows({"g0", "g1"}, {"m0"}, {"X", "."}),
                   {Mask{2}, Mask{1}}, {Mask{1}});
  KripkeContext back = io::kripke_from_json(io::kripke_to_json(kc));
  CHECK(back.r_rows == kc.r_rows);
  CHECK(back.s_rows == kc.s_rows);

  Dba alg = boolean_dba(1, true);
  Dba alg_back = io::algebra_from_json(io::algebra_to_json(alg));
  CHECK(alg_back.meet_t == alg.meet_t);
  CHECK(alg_back.i_t == alg.i_t);
}

TEST_CASE("malformed inputs raise errors instead of crashing") {
  using io::json;
  std::vector<std::string> bad = {
      "",
      "{",
      "[]",
      "{\"objects\": [\"g\"]}",
      "{\"objects\": [\"g\"], \"attributes\": [\"m\"], \"incidence\": [\"XX\"]}",
      "{\"objects\": [\"g\", \"g\"], \"attributes\": [\"m\"], \"incidence\": [\"X\", \"X\"]}",
  };
  for (const std::string& text : bad) {
    CHECK_THROWS_AS(
        [&] {
          json j = io::parse_json(text);
          io::context_from_json(j);
        }(),
        Error);
  }

  // mangled prefixes of a valid algebra file all fail cleanly
  std::string alg = io::algebra_to_json(boolean_dba(2, true)).dump();
  for (size_t cut = 0; cut < alg.size(); cut += 7) {
    std::string prefix = alg.substr(0, cut);
    CHECK_THROWS_AS(io::algebra_from_json(io::parse_json(prefix)), Error);
  }

  // relation pairs out of range
  CHECK_THROWS_AS(io::kripke_from_json(io::parse_json(
                      "{\"context\": {\"objects\": [\"g\"], \"attributes\": [\"m\"],"
                      " \"incidence\": [\"X\"]}, \"R\": [[0, 5]], \"S\": []}")),
                  Error);

  // an algebra with table entries out of range
  CHECK_THROWS_AS(io::algebra_from_json(io::parse_json(
                      "{\"size\": 2, \"top\": 1, \"bot\": 0, \"meet\": [0,0,0,9],"
                      " \"join\": [0,1,1,1], \"neg\": [1,0], \"lneg\": [1,0]}")),
                  Error);

  // proof nodes must carry seq and by
  CHECK_THROWS_AS(io::proof_from_json(io::parse_json("{\"seq\": \"p |- q\"}")), Error);
  CHECK_THROWS_AS(io::proof_from_json(io::parse_json("{\"seq\": \"p |-\", \"by\": \"hyp\"}")),
                  Error);

  // unknown keys are tolerated
  Context extra = io::context_from_json(io::parse_json(
      "{\"objects\": [\"g\"], \"attributes\": [\"m\"], \"incidence\": [\"X\"], \"note\": 3}"));
  CHECK(extra.size_g() == 1);
}

TEST_CASE("set parsing") {
  Context ctx = Context::from_rows({"ga", "gb"}, {"m"}, {"X", "."});
  CHECK(io::parse_object_set(ctx, "ga,gb") == Mask{3});
  CHECK(io::parse_object_set(ctx, " ga , gb ") == Mask{3});
  CHECK(io::parse_object_set(ctx, "-") == Mask{0});
  CHECK(io::parse_object_set(ctx, "") == Mask{0});
  CHECK_THROWS_AS(io::parse_object_set(ctx, "nope"), Error);
  CHECK_THROWS_AS(io::parse_object_set(ctx, "ga,,gb"), Error);
}
