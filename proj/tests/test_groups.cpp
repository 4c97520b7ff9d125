#include "doctest.h"

#include "ecc/groups.hpp"

using namespace ecc;

TEST_CASE("word rendering and parsing") {
  OpWord w = OpWord::parse("IHH");
  CHECK(w.str() == "IHH");
  CHECK(w.hcount() == 2);
  OpWord n = OpWord::parse("H,HR,HR");
  CHECK(n.str() == "H,HR,HR");
  CHECK(n.hcount() == 3);
  CHECK(n.has_hr());
  CHECK_THROWS_AS(OpWord::parse("IXH"), ParseError);
  CHECK_THROWS_AS(OpWord::parse("H,HQ"), ParseError);
}

TEST_CASE("two-qubit matrix has the checkerboard layout") {
  OpMatrix m2 = build_op_matrix(2, MatrixKind::M);
  REQUIRE(m2.dim == 2);
  CHECK(m2.cell(0, 0).str() == "II");
  CHECK(m2.cell(0, 1).str() == "HH");
  CHECK(m2.cell(1, 0).str() == "HH");
  CHECK(m2.cell(1, 1).str() == "II");
  CHECK(m2.row_labels[0].str() == "00");
  CHECK(m2.row_labels[1].str() == "11");

  OpMatrix p2 = build_op_matrix(2, MatrixKind::Mprime);
  CHECK(p2.cell(0, 0).str() == "IH");
  CHECK(p2.cell(0, 1).str() == "HI");
  CHECK(p2.col_labels[0].str() == "01");
  CHECK(p2.col_labels[1].str() == "10");
}

TEST_CASE("three-qubit matrix row for the all-zero pattern") {
  OpMatrix m3 = build_op_matrix(3, MatrixKind::M);
  REQUIRE(m3.dim == 4);
  BitString u = BitString::parse("000");
  CHECK(m3.cell(u, BitString::parse("000")).str() == "III");
  CHECK(m3.cell(u, BitString::parse("011")).str() == "IHH");
  CHECK(m3.cell(u, BitString::parse("101")).str() == "HIH");
  CHECK(m3.cell(u, BitString::parse("110")).str() == "HHI");
  // Second row, anchored at 011.
  BitString v = BitString::parse("011");
  CHECK(m3.cell(v, BitString::parse("000")).str() == "IHH");
  CHECK(m3.cell(v, BitString::parse("011")).str() == "III");
  CHECK(m3.cell(v, BitString::parse("101")).str() == "HHI");
  CHECK(m3.cell(v, BitString::parse("110")).str() == "HIH");
}

TEST_CASE("recursive cells equal the direct xor rule") {
  for (int m = 1; m <= 8; ++m) {
    OpMatrix mm = build_op_matrix(m, MatrixKind::M);
    OpMatrix mp = build_op_matrix(m, MatrixKind::Mprime);
    for (int r = 0; r < mm.dim; ++r)
      for (int c = 0; c < mm.dim; ++c) {
        CHECK(mm.cell(r, c) ==
              direct_entry(mm.row_labels[r], mm.col_labels[c], WordAlphabet::IH));
        CHECK(mp.cell(r, c) ==
              direct_entry(mp.row_labels[r], mp.col_labels[c], WordAlphabet::IH));
      }
  }
}

TEST_CASE("H-count parity is even in M and odd in Mprime") {
  for (int m = 1; m <= 8; ++m) {
    OpMatrix mm = build_op_matrix(m, MatrixKind::M);
    OpMatrix mp = build_op_matrix(m, MatrixKind::Mprime);
    for (const auto& w : mm.cells) CHECK(w.hcount() % 2 == 0);
    for (const auto& w : mp.cells) CHECK(w.hcount() % 2 == 1);
  }
}

TEST_CASE("N matrix substitutes the alphabet") {
  OpMatrix n3 = build_n_matrix(3);
  CHECK(n3.kind == MatrixKind::N);
  CHECK(n3.cell(BitString::parse("000"), BitString::parse("000")).str() == "HHH");
  CHECK(n3.cell(BitString::parse("000"), BitString::parse("011")).str() == "H,HR,HR");
  for (int r = 0; r < n3.dim; ++r)
    for (int c = 0; c < n3.dim; ++c)
      CHECK(n3.cell(r, c) ==
            direct_entry(n3.row_labels[r], n3.col_labels[c], WordAlphabet::H_HR));
}

TEST_CASE("Klein four-group table") {
  using enum V4Element;
  // Identity, self-inverse, and the worked products.
  for (V4Element x : {a, b, c, d}) {
    CHECK(v4_mul(a, x) == x);
    CHECK(v4_mul(x, a) == x);
    CHECK(v4_mul(x, x) == a);
  }
  CHECK(v4_mul(b, c) == d);
  CHECK(v4_mul(c, b) == d);
  CHECK(v4_mul(b, d) == c);
  CHECK(v4_mul(c, d) == b);
  // Associativity, exhaustively.
  for (V4Element x : {a, b, c, d})
    for (V4Element y : {a, b, c, d})
      for (V4Element z : {a, b, c, d})
        CHECK(v4_mul(v4_mul(x, y), z) == v4_mul(x, v4_mul(y, z)));
}

TEST_CASE("three-qubit matrix realizes the group product") {
  // Patterns 000,011,101,110 as a,b,c,d and words III,IHH,HIH,HHI likewise.
  OpMatrix m3 = build_op_matrix(3, MatrixKind::M);
  const char* words[4] = {"III", "IHH", "HIH", "HHI"};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      V4Element prod = v4_mul(static_cast<V4Element>(r), static_cast<V4Element>(c));
      CHECK(m3.cell(r, c).str() == words[static_cast<int>(prod)]);
    }
}

TEST_CASE("reduction toggles are the support of the xor") {
  CHECK(reduction_toggles(BitString::parse("000"), BitString::parse("001")) ==
        std::vector<int>{3});
  CHECK(reduction_toggles(BitString::parse("011"), BitString::parse("101")) ==
        std::vector<int>{1, 2});
  CHECK(reduction_toggles(BitString::parse("0110"), BitString::parse("0110")).empty());
  // The anchor pair with equal patterns toggles nothing; full complement
  // toggles everyone.
  CHECK(reduction_toggles(BitString::parse("0001"), BitString::parse("1110")) ==
        std::vector<int>({1, 2, 3, 4}));
}

TEST_CASE("matrix width guardrail") {
  CHECK_THROWS_AS(build_op_matrix(13, MatrixKind::M), WidthTooLarge);
}
