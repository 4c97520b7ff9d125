#include "ecc/functions.hpp"

#include <algorithm>
#include <istream>

namespace ecc {

std::string family_name(Family f) {
  switch (f) {
    case Family::Fu: return "F_u";
    case Family::FB: return "F_B";
    case Family::GA: return "G_A";
    case Family::G11: return "G_11";
  }
  return "?";
}

FunctionSpec FunctionSpec::single_minterm(const BitString& u, int n,
                                          PromiseSet promise) {
  FunctionSpec spec;
  spec.family = Family::Fu;
  spec.m = u.length();
  spec.n = n;
  spec.u = u;
  spec.promise = std::move(promise);
  spec.validate();
  return spec;
}

FunctionSpec FunctionSpec::minterm_set(PromiseSet B, int n, PromiseSet promise) {
  FunctionSpec spec;
  spec.family = Family::FB;
  spec.m = B.m;
  spec.n = n;
  spec.minterms = std::move(B);
  spec.promise = std::move(promise);
  spec.validate();
  return spec;
}

FunctionSpec FunctionSpec::mixed(PromiseSet A, int n) {
  FunctionSpec spec;
  spec.family = Family::GA;
  spec.m = A.m;
  spec.n = n;
  spec.promise = mixed_union(A);
  spec.minterms = std::move(A);
  spec.validate();
  return spec;
}

FunctionSpec FunctionSpec::two_party_and(int n) {
  FunctionSpec spec;
  spec.family = Family::G11;
  spec.m = 2;
  spec.n = n;
  spec.promise = explicit_promise(
      {BitString::parse("01"), BitString::parse("10"), BitString::parse("11")});
  spec.validate();
  return spec;
}

void FunctionSpec::validate() const {
  if (n < 1) throw ParseError("n must be at least 1");
  if (n > BitString::kMaxLen)
    throw WidthTooLarge("n exceeds " + std::to_string(BitString::kMaxLen));
  if (promise.m != m) throw LengthMismatch("promise width differs from m");
  if (promise.members.empty()) throw ParseError("empty promise");

  auto uniform_parity = [this]() {
    int p = promise.members.front().parity();
    for (const auto& v : promise.members)
      if (v.parity() != p)
        throw ParityMismatch("promise of " + family_name(family) +
                             " must have uniform parity");
  };

  switch (family) {
    case Family::Fu:
      if (u.length() != m) throw LengthMismatch("u width differs from m");
      if (!promise.contains(u)) throw ParseError("u must belong to the promise");
      uniform_parity();
      break;
    case Family::FB:
      if (minterms.m != m) throw LengthMismatch("B width differs from m");
      if (minterms.members.empty()) throw ParseError("empty minterm set");
      if (!minterms.subset_of(promise))
        throw ParseError("B must be a subset of the promise");
      uniform_parity();
      break;
    case Family::GA: {
      if (minterms.m != m) throw LengthMismatch("A width differs from m");
      if (minterms.members.empty()) throw ParseError("empty minterm set");
      for (const auto& v : minterms.members)
        if (v.parity() != 0)
          throw ParityMismatch("A must contain even-parity patterns only");
      PromiseSet expect = mixed_union(minterms);
      if (!promise.same_members(expect))
        throw ParseError("G_A promise must be A plus the odd class");
      break;
    }
    case Family::G11: {
      if (m != 2) throw LengthMismatch("two-party AND needs m == 2");
      PromiseSet expect = explicit_promise({BitString::parse("01"),
                                            BitString::parse("10"),
                                            BitString::parse("11")});
      if (!promise.same_members(expect))
        throw ParseError("two-party AND promise must be {01, 10, 11}");
      break;
    }
  }
}

int FunctionSpec::term(const BitString& tuple) const {
  switch (family) {
    case Family::Fu: return tuple == u ? 1 : 0;
    case Family::FB: return minterms.contains(tuple) ? 1 : 0;
    case Family::GA: return minterms.contains(tuple) ? 1 : 0;
    case Family::G11: return tuple.bit(1) & tuple.bit(2);
  }
  return 0;
}

InputMatrix InputMatrix::from_rows(std::vector<BitString> rows) {
  if (rows.empty()) throw ParseError("no input rows");
  InputMatrix im;
  im.m = static_cast<int>(rows.size());
  im.n = rows.front().length();
  for (const auto& r : rows)
    if (r.length() != im.n) throw LengthMismatch("input rows of unequal length");
  im.rows = std::move(rows);
  return im;
}

InputMatrix InputMatrix::from_tuples(const std::vector<BitString>& tuples) {
  if (tuples.empty()) throw ParseError("no input tuples");
  int m = tuples.front().length();
  int n = static_cast<int>(tuples.size());
  for (const auto& t : tuples)
    if (t.length() != m) throw LengthMismatch("tuples of unequal length");
  std::vector<BitString> rows;
  rows.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) {
    BitString row = BitString::zeros(n);
    for (int i = 1; i <= n; ++i) row = row.with_bit(i, tuples[static_cast<size_t>(i - 1)].bit(j));
    rows.push_back(row);
  }
  return from_rows(std::move(rows));
}

InputMatrix InputMatrix::parse(std::istream& in) {
  std::vector<BitString> rows;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    rows.push_back(BitString::parse(line));
  }
  return from_rows(std::move(rows));
}

BitString InputMatrix::tuple(int i) const {
  if (i < 1 || i > n) throw LengthMismatch("tuple index out of range");
  BitString t = BitString::zeros(m);
  for (int j = 1; j <= m; ++j) t = t.with_bit(j, rows[static_cast<size_t>(j - 1)].bit(i));
  return t;
}

std::string InputMatrix::str() const {
  std::string out;
  for (const auto& r : rows) {
    out += r.str();
    out += '\n';
  }
  return out;
}

int validate_promise(const FunctionSpec& spec, const InputMatrix& inputs) {
  if (inputs.m != spec.m || inputs.n != spec.n)
    throw LengthMismatch("input matrix shape differs from spec");
  for (int i = 1; i <= inputs.n; ++i)
    if (!spec.promise.contains(inputs.tuple(i))) return i;
  return 0;
}

int oracle_eval(const FunctionSpec& spec, const InputMatrix& inputs) {
  int bad = validate_promise(spec, inputs);
  if (bad)
    throw PromiseViolation("tuple " + std::to_string(bad) + " (" +
                               inputs.tuple(bad).str() + ") outside the promise",
                           bad);
  int acc = 0;
  for (int i = 1; i <= inputs.n; ++i) acc ^= spec.term(inputs.tuple(i));
  return acc;
}

std::vector<InputMatrix> gen_inputs_exhaustive(const FunctionSpec& spec,
                                               uint64_t cap) {
  uint64_t total = 1;
  for (int i = 0; i < spec.n; ++i) {
    if (total > cap / spec.promise.size())
      throw CapExceeded("|promise|^n exceeds cap " + std::to_string(cap));
    total *= spec.promise.size();
  }
  std::vector<InputMatrix> out;
  out.reserve(total);
  std::vector<size_t> digits(static_cast<size_t>(spec.n), 0);
  std::vector<BitString> tuples(static_cast<size_t>(spec.n), spec.promise.members.front());
  for (uint64_t k = 0; k < total; ++k) {
    uint64_t rem = k;
    for (int i = spec.n - 1; i >= 0; --i) {
      digits[static_cast<size_t>(i)] = rem % spec.promise.size();
      rem /= spec.promise.size();
    }
    for (int i = 0; i < spec.n; ++i)
      tuples[static_cast<size_t>(i)] = spec.promise.members[digits[static_cast<size_t>(i)]];
    out.push_back(InputMatrix::from_tuples(tuples));
  }
  return out;
}

std::vector<InputMatrix> gen_inputs_random(const FunctionSpec& spec, int count,
                                           Rng& rng) {
  std::vector<InputMatrix> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<BitString> tuples(static_cast<size_t>(spec.n), spec.promise.members.front());
  for (int k = 0; k < count; ++k) {
    for (int i = 0; i < spec.n; ++i)
      tuples[static_cast<size_t>(i)] =
          spec.promise.members[static_cast<size_t>(rng() % spec.promise.size())];
    out.push_back(InputMatrix::from_tuples(tuples));
  }
  return out;
}

InputMatrix reduce_instance(const BitString& u, const BitString& u2,
                            const InputMatrix& inputs) {
  if (u.length() != inputs.m || u2.length() != inputs.m)
    throw LengthMismatch("anchor width differs from input matrix");
  std::vector<BitString> rows = inputs.rows;
  for (int j : reduction_toggles(u, u2))
    rows[static_cast<size_t>(j - 1)] = rows[static_cast<size_t>(j - 1)].complement();
  return InputMatrix::from_rows(std::move(rows));
}

}  // namespace ecc
