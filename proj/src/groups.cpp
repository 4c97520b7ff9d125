#include "ecc/groups.hpp"

#include <algorithm>

namespace ecc {

std::string gate_symbol_name(GateSymbol g) {
  switch (g) {
    case GateSymbol::I: return "I";
    case GateSymbol::H: return "H";
    case GateSymbol::HR: return "HR";
  }
  return "?";
}

int OpWord::hcount() const {
  return static_cast<int>(
      std::count_if(symbols.begin(), symbols.end(),
                    [](GateSymbol g) { return g != GateSymbol::I; }));
}

bool OpWord::has_hr() const {
  return std::find(symbols.begin(), symbols.end(), GateSymbol::HR) != symbols.end();
}

std::string OpWord::str() const {
  std::string out;
  bool commas = has_hr();
  for (size_t k = 0; k < symbols.size(); ++k) {
    if (commas && k > 0) out += ',';
    out += gate_symbol_name(symbols[k]);
  }
  return out;
}

OpWord OpWord::parse(std::string_view text) {
  OpWord w;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      std::string_view tok = text.substr(pos, next == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : next - pos);
      if (tok == "I") w.symbols.push_back(GateSymbol::I);
      else if (tok == "H") w.symbols.push_back(GateSymbol::H);
      else if (tok == "HR") w.symbols.push_back(GateSymbol::HR);
      else throw ParseError("bad gate symbol '" + std::string(tok) + "'");
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch == 'I') w.symbols.push_back(GateSymbol::I);
      else if (ch == 'H') w.symbols.push_back(GateSymbol::H);
      else throw ParseError("bad gate symbol '" + std::string(1, ch) + "'");
    }
  }
  if (w.symbols.empty()) throw ParseError("empty gate word");
  return w;
}

std::string matrix_kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::M: return "M";
    case MatrixKind::Mprime: return "Mprime";
    case MatrixKind::N: return "N";
  }
  return "?";
}

const OpWord& OpMatrix::cell(const BitString& row, const BitString& col) const {
  auto rit = std::lower_bound(row_labels.begin(), row_labels.end(), row);
  auto cit = std::lower_bound(col_labels.begin(), col_labels.end(), col);
  if (rit == row_labels.end() || *rit != row)
    throw ParseError("row label " + row.str() + " not in matrix");
  if (cit == col_labels.end() || *cit != col)
    throw ParseError("col label " + col.str() + " not in matrix");
  return cell(static_cast<int>(rit - row_labels.begin()),
              static_cast<int>(cit - col_labels.begin()));
}

namespace {

std::vector<OpWord> prepend_grown(const std::vector<OpWord>& diag,
                                  const std::vector<OpWord>& off, int dim) {
  int nd = dim * 2;
  std::vector<OpWord> out(static_cast<size_t>(nd) * nd);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      OpWord di = diag[static_cast<size_t>(r) * dim + c];
      di.symbols.insert(di.symbols.begin(), GateSymbol::I);
      OpWord of = off[static_cast<size_t>(r) * dim + c];
      of.symbols.insert(of.symbols.begin(), GateSymbol::H);
      out[static_cast<size_t>(r) * nd + c] = di;
      out[static_cast<size_t>(r + dim) * nd + (c + dim)] = di;
      out[static_cast<size_t>(r) * nd + (c + dim)] = of;
      out[static_cast<size_t>(r + dim) * nd + c] = of;
    }
  }
  return out;
}

constexpr int kMaxMatrixWidth = 12;

}  // namespace

OpMatrix build_op_matrix(int m, MatrixKind kind) {
  if (kind == MatrixKind::N) return build_n_matrix(m);
  if (m < 1 || m > kMaxMatrixWidth)
    throw WidthTooLarge("matrix width " + std::to_string(m) + " outside [1, " +
                        std::to_string(kMaxMatrixWidth) + "]");
  std::vector<OpWord> mcur{OpWord{{GateSymbol::I}}};
  std::vector<OpWord> mpri{OpWord{{GateSymbol::H}}};
  for (int i = 1; i < m; ++i) {
    int dim = 1 << (i - 1);
    auto next_m = prepend_grown(mcur, mpri, dim);
    auto next_p = prepend_grown(mpri, mcur, dim);
    mcur = std::move(next_m);
    mpri = std::move(next_p);
  }
  OpMatrix out;
  out.m = m;
  out.kind = kind;
  out.dim = 1 << (m - 1);
  out.row_labels = parity_class(m, 0).members;
  out.col_labels = parity_class(m, kind == MatrixKind::Mprime ? 1 : 0).members;
  out.cells = kind == MatrixKind::Mprime ? std::move(mpri) : std::move(mcur);
  return out;
}

OpMatrix build_n_matrix(int m) {
  OpMatrix out = build_op_matrix(m, MatrixKind::M);
  out.kind = MatrixKind::N;
  for (auto& w : out.cells)
    for (auto& g : w.symbols)
      g = (g == GateSymbol::I) ? GateSymbol::H : GateSymbol::HR;
  return out;
}

OpWord direct_entry(const BitString& u, const BitString& p, WordAlphabet alphabet) {
  BitString d = u ^ p;
  OpWord w;
  w.symbols.reserve(static_cast<size_t>(d.length()));
  for (int j = 1; j <= d.length(); ++j) {
    bool hot = d.bit(j) != 0;
    if (alphabet == WordAlphabet::IH)
      w.symbols.push_back(hot ? GateSymbol::H : GateSymbol::I);
    else
      w.symbols.push_back(hot ? GateSymbol::HR : GateSymbol::H);
  }
  return w;
}

std::string v4_name(V4Element e) {
  switch (e) {
    case V4Element::a: return "a";
    case V4Element::b: return "b";
    case V4Element::c: return "c";
    case V4Element::d: return "d";
  }
  return "?";
}

V4Element v4_mul(V4Element x, V4Element y) {
  static constexpr V4Element table[4][4] = {
      {V4Element::a, V4Element::b, V4Element::c, V4Element::d},
      {V4Element::b, V4Element::a, V4Element::d, V4Element::c},
      {V4Element::c, V4Element::d, V4Element::a, V4Element::b},
      {V4Element::d, V4Element::c, V4Element::b, V4Element::a},
  };
  return table[static_cast<int>(x)][static_cast<int>(y)];
}

std::vector<int> reduction_toggles(const BitString& u, const BitString& u2) {
  BitString d = u ^ u2;
  std::vector<int> out;
  for (int j = 1; j <= d.length(); ++j)
    if (d.bit(j)) out.push_back(j);
  return out;
}

}  // namespace ecc
