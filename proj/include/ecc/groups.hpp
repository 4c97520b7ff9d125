#pragma once
// Local-operation words and the recursively built operation matrices.
//
// A word assigns one gate symbol per party. The matrices M_m / M'_m tabulate
// the I/H words the parties end up applying for every (row, column) pair of
// same-parity patterns; N_m is M_m with I replaced by H and H by HR. Rows
// are always indexed by the even-parity patterns in ascending numeric order;
// columns are even for kind M and N, odd for kind Mprime. Every cell depends
// only on row XOR column, which is what direct_entry computes without the
// recursion.

#include <string>
#include <vector>

#include "ecc/bitcore.hpp"

namespace ecc {

enum class GateSymbol { I, H, HR };

std::string gate_symbol_name(GateSymbol g);

struct OpWord {
  std::vector<GateSymbol> symbols;

  int length() const { return static_cast<int>(symbols.size()); }
  // Symbols other than I.
  int hcount() const;
  bool has_hr() const;

  // "IHH" for I/H words; comma-joined "H,HR,HR" once HR is involved.
  std::string str() const;
  static OpWord parse(std::string_view text);

  bool operator==(const OpWord& o) const = default;
};

enum class MatrixKind { M, Mprime, N };

std::string matrix_kind_name(MatrixKind kind);

struct OpMatrix {
  int m = 0;
  MatrixKind kind = MatrixKind::M;
  int dim = 0;  // 2^(m-1)
  std::vector<BitString> row_labels;
  std::vector<BitString> col_labels;
  std::vector<OpWord> cells;  // row-major, dim*dim

  const OpWord& cell(int r, int c) const { return cells[static_cast<size_t>(r) * dim + c]; }
  const OpWord& cell(const BitString& row, const BitString& col) const;
};

// Recursive construction:
//   M_1 = [I], M'_1 = [H]
//   M_{i+1}  = [[I.M_i,  H.M'_i], [H.M'_i, I.M_i ]]
//   M'_{i+1} = [[I.M'_i, H.M_i ], [H.M_i,  I.M'_i]]
// where G.X prepends symbol G to every cell of X. Kind N substitutes
// I -> H and H -> HR into M_m.
OpMatrix build_op_matrix(int m, MatrixKind kind);
OpMatrix build_n_matrix(int m);

enum class WordAlphabet {
  IH,    // symbol j is H iff bit j of u^p is 1, else I
  H_HR,  // symbol j is HR iff bit j of u^p is 1, else H
};

OpWord direct_entry(const BitString& u, const BitString& p, WordAlphabet alphabet);

// Klein four-group; the element names follow the usual a,b,c,d table with a
// as identity. Isomorphic to XOR on two bits, which is how the even-parity
// three-bit patterns multiply under tuple succession.
enum class V4Element { a, b, c, d };

std::string v4_name(V4Element e);
V4Element v4_mul(V4Element x, V4Element y);

// 1-based indices of the parties that must complement their vectors to turn
// an instance anchored at u into one anchored at u2 (the support of u^u2).
std::vector<int> reduction_toggles(const BitString& u, const BitString& u2);

}  // namespace ecc
