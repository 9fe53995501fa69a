#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "peqa/document.hpp"

using namespace peqa;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kFixtureDir = PEQA_FIXTURE_DIR;

}  // namespace

TEST_CASE("fixture files parse into the in-code fixtures") {
  AlgebraDocument db = parse_document(slurp(kFixtureDir + "/B.eqa"));
  CHECK(db.name == "B");
  CHECK(db.kind == DocKind::eq);
  CHECK(eq_from_document(db) == fixtures::diamond_b());

  AlgebraDocument da = parse_document(slurp(kFixtureDir + "/A.eqa"));
  CHECK(eq_from_document(da) == fixtures::diamond_a());

  AlgebraDocument dc = parse_document(slurp(kFixtureDir + "/C.eqa"));
  CHECK(eq_from_document(dc) == fixtures::chain_c());
}

TEST_CASE("bck and hoop documents parse") {
  AlgebraDocument db = parse_document(slurp(kFixtureDir + "/B.bck"));
  FiniteBckMs b = bck_from_document(db);
  CHECK(verify_bck(b).all_pass());

  AlgebraDocument dh = parse_document(slurp(kFixtureDir + "/B.hoop"));
  FinitePseudoHoop h = hoop_from_document(dh);
  CHECK(verify_pseudo_hoop(h).all_pass());
  CHECK(hoop_to_eq(h) == fixtures::diamond_b());
}

TEST_CASE("render then parse is the identity") {
  for (const FiniteEqAlgebra& a :
       {fixtures::diamond_b(), fixtures::diamond_a(), fixtures::chain_c(),
        fixtures::trivial()}) {
    AlgebraDocument doc = document_from_eq(a, "roundtrip");
    AlgebraDocument again = parse_document(render_document(doc));
    CHECK(doc == again);
    CHECK(eq_from_document(again) == a);
  }
  AlgebraDocument bdoc =
      document_from_bck(psi(fixtures::diamond_b()), "bckdoc", std::string("0"));
  CHECK(parse_document(render_document(bdoc)) == bdoc);
}

TEST_CASE("parse errors carry positions and kinds") {
  try {
    parse_document("algebra x\nnonsense here\nend\n");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::syntax_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  // short row: 3 tokens in a 4-element table
  const std::string short_row =
      "algebra x\nkind eq\nelements 0 a b 1\ntop 1\nmeet\n0 0 0\n";
  try {
    parse_document(short_row);
    FAIL("expected ShapeError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::shape_error);
  }

  // undeclared token inside a table
  const std::string bad_tok =
      "algebra x\nkind eq\nelements 0 1\ntop 1\n"
      "meet\n0 0\n0 1\ntilde\n1 0\nc 1\nbtilde\n1 0\n0 1\nend\n";
  try {
    parse_document(bad_tok);
    FAIL("expected UnknownToken");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_token);
  }

  // missing table for the declared kind
  const std::string missing =
      "algebra x\nkind eq\nelements 0 1\ntop 1\nmeet\n0 0\n0 1\nend\n";
  CHECK_THROWS_AS(parse_document(missing), Error);
}

TEST_CASE("operator documents") {
  OperatorDocument doc = parse_operator_document(slurp(kFixtureDir + "/sigma1.op"));
  CHECK(doc.name == "sigma1");
  UnaryOperator op = operator_from_document(doc, fixtures::diamond_b().carrier);
  CHECK(op == UnaryOperator{{0, 0, 3, 3}});

  OperatorDocument again =
      parse_operator_document(render_operator_document(doc));
  CHECK(again.name == doc.name);
  CHECK(again.entries == doc.entries);

  // incomplete maps are rejected
  CHECK_THROWS_AS(
      operator_from_document(parse_operator_document("op t\n0 -> 0\nend\n"),
                             fixtures::diamond_b().carrier),
      Error);
}
