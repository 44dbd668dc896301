#include <doctest.h>

#include <set>

#include "qcolor/algebra.hpp"
#include "qcolor/errors.hpp"

using namespace qcolor;

namespace {

const std::vector<std::vector<int>> kPrintedD4 = {
    {0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 0, 5, 6, 7, 4}, {2, 3, 0, 1, 6, 7, 4, 5}, {3, 0, 1, 2, 7, 4, 5, 6},
    {4, 7, 6, 5, 0, 3, 2, 1}, {5, 4, 7, 6, 1, 0, 3, 2}, {6, 5, 4, 7, 2, 1, 0, 3}, {7, 6, 5, 4, 3, 2, 1, 0}};

const std::vector<std::vector<int>> kPrintedD5 = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 2, 3, 4, 0, 9, 5, 6, 7, 8}, {2, 3, 4, 0, 1, 8, 9, 5, 6, 7},
    {3, 4, 0, 1, 2, 7, 8, 9, 5, 6}, {4, 0, 1, 2, 3, 6, 7, 8, 9, 5}, {5, 6, 7, 8, 9, 0, 1, 2, 3, 4},
    {6, 7, 8, 9, 5, 4, 0, 1, 2, 3}, {7, 8, 9, 5, 6, 3, 4, 0, 1, 2}, {8, 9, 5, 6, 7, 2, 3, 4, 0, 1},
    {9, 5, 6, 7, 8, 1, 2, 3, 4, 0}};

const std::vector<std::vector<int>> kPrintedD3 = {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}, {2, 4, 0, 5, 1, 3},
                                                  {3, 5, 1, 4, 0, 2}, {4, 2, 5, 0, 3, 1}, {5, 3, 4, 1, 2, 0}};

}  // namespace

TEST_CASE("dihedral products follow f^s r^k with r f = f r^-1") {
  DihedralGroup d5(5);
  auto mul = [&](int a, int b) { return d5.code(d5.multiply(d5.element(a), d5.element(b))); };
  CHECK(mul(1, 5) == 9);
  CHECK(mul(6, 5) == 4);
  for (int x = 0; x < 10; ++x) CHECK(mul(0, x) == x);

  auto inv = [&](DihedralGroup& g, int a) { return g.code(g.inverse(g.element(a))); };
  CHECK(inv(d5, 2) == 3);
  CHECK(inv(d5, 7) == 7);
  DihedralGroup d4(4);
  CHECK(inv(d4, 0) == 0);

  CHECK(d5.code(d5.conjugate(d5.element(1), d5.element(5))) == 4);
  CHECK(d5.order() == 10);
  CHECK(d5.name() == "D5");
}

TEST_CASE("group laws hold for n = 3..12") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    DihedralGroup g(n);
    const auto t = g.cayley_table();
    const int m = g.order();
    bool ok = true;
    for (int a = 0; a < m; ++a) {
      ok = ok && t[0][a] == a && t[a][0] == a;
      ok = ok && t[a][g.code(g.inverse(g.element(a)))] == 0;
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) ok = ok && t[t[a][b]][c] == t[a][t[b][c]];
    }
    CHECK(ok);
    for (int code = 0; code < m; ++code) CHECK(g.code(g.element(code)) == code);
  }
}

TEST_CASE("group selector and construction preconditions") {
  CHECK_THROWS_AS(DihedralGroup(2), InvalidArgument);
  CHECK_THROWS_AS(DihedralGroup(128), InvalidArgument);
  CHECK(parse_group_selector("D7").n() == 7);
  CHECK_THROWS_AS(parse_group_selector("D2"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_selector("S5"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_selector("D"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_selector("D5x"), InvalidArgument);
}

TEST_CASE("D5 Cayley table matches the printed matrix") { CHECK(DihedralGroup(5).cayley_table() == kPrintedD5); }

TEST_CASE("printed D4 matrix is the transpose of the D4 table") {
  const auto t = DihedralGroup(4).cayley_table();
  CHECK(t[1] == std::vector<int>{1, 2, 3, 0, 7, 4, 5, 6});
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(kPrintedD4[a][b] == t[b][a]);
}

TEST_CASE("printed D3 matrix is a group table with the same conjugation quandle up to isomorphism") {
  const auto q = conjugation_quandle(kPrintedD3, "Conj(printed D3)");
  CHECK(verify_quandle_axioms(q).empty());
  // Element orders: three involutions in both.
  int involutions = 0;
  for (int a = 1; a < 6; ++a) involutions += kPrintedD3[a][a] == 0;
  CHECK(involutions == 3);
  CHECK_THROWS_AS(conjugation_quandle({{0, 1}, {0, 1}}, "bad"), InvalidArgument);
  CHECK_THROWS_AS(conjugation_quandle({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, "bad"), InvalidArgument);
}

TEST_CASE("conjugation quandles") {
  CHECK(conjugation_quandle(DihedralGroup(3)).size() == 6);
  CHECK(conjugation_quandle(DihedralGroup(5)).size() == 10);
  CHECK(conjugation_quandle(DihedralGroup(5)).name() == "Conj(D5)");

  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    DihedralGroup g(n);
    const auto q = conjugation_quandle(g);
    CHECK(verify_quandle_axioms(q).empty());
    const int m = q.size();
    bool ok = true;
    for (int a = 0; a < m; ++a) {
      ok = ok && q.op(a, a) == a;
      for (int b = 0; b < m; ++b) {
        ok = ok && q.inv(q.op(a, b), b) == a && q.op(q.inv(a, b), b) == a;
        const auto ga = g.element(a), gb = g.element(b);
        ok = ok && q.inv(a, b) == g.code(g.multiply(g.multiply(gb, ga), g.inverse(gb)));
        // rotations stay rotations
        if (a < n) ok = ok && q.op(a, b) < n;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("conjugation preserves conjugacy classes") {
  for (int n = 3; n <= 9; ++n) {
    DihedralGroup g(n);
    const int m = g.order();
    std::vector<std::set<int>> cls(m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) cls[a].insert(g.code(g.conjugate(g.element(a), g.element(b))));
    const auto q = conjugation_quandle(g);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) CHECK(cls[a].count(q.op(a, b)) == 1);
  }
}

TEST_CASE("axiom verification") {
  CHECK(verify_quandle_axioms({{0, 0}, {1, 1}}).empty());

  const auto v = verify_quandle_axioms({{1, 0}, {1, 0}});
  REQUIRE(!v.empty());
  CHECK(v[0].axiom == Axiom::Idempotency);
  CHECK(v[0].witness == std::vector<int>{0, 1});
  CHECK(v[0].describe().find("idempotency") != std::string::npos);

  // x |> y = 2y - x mod 3
  CHECK(verify_quandle_axioms({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}).empty());
  // Idempotent with bijective columns, not self-distributive at (1, 2, 3).
  const auto bad = verify_quandle_axioms({{0, 0, 0, 0}, {1, 1, 3, 2}, {2, 2, 2, 1}, {3, 3, 1, 3}});
  bool has_sd = false;
  for (const auto& x : bad) has_sd = has_sd || x.axiom == Axiom::SelfDistributivity;
  CHECK(has_sd);

  const auto col = verify_quandle_axioms({{0, 0}, {0, 1}});
  REQUIRE(!col.empty());
  CHECK(col[0].axiom == Axiom::RightInvertibility);

  CHECK_THROWS_AS(verify_quandle_axioms({{0, 1}, {0}}), InvalidArgument);
  CHECK_THROWS_AS(verify_quandle_axioms({{0, 2}, {1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(verify_quandle_axioms(std::vector<std::vector<int>>{}), InvalidArgument);
}

TEST_CASE("quandle table text format") {
  const auto q = conjugation_quandle(DihedralGroup(5));
  const auto text = serialize_quandle(q);
  CHECK(text.rfind("quandle 10\n", 0) == 0);
  CHECK(parse_quandle(text) == q);

  CHECK(parse_quandle_rows("# trivial\nquandle 2\n0 0\n1 1\n") == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
  CHECK_THROWS_AS(parse_quandle("quandle 2\n0 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quandle_rows("quandle 2\n0 0 0\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quandle_rows("quandle 2\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_quandle_rows("quandle 2\n0 0\n1 5\n"), ParseError);
  CHECK_THROWS_AS(parse_quandle_rows("quandel 2\n"), ParseError);
  try {
    parse_quandle_rows("quandle 2\n0 0\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(FiniteQuandle::from_table({{0, 1}, {1}}), InvalidArgument);
}
