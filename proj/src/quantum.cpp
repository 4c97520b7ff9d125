#include "ecc/quantum.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace ecc {

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string support_parity_name(SupportParity sp) {
  switch (sp) {
    case SupportParity::Even: return "Even";
    case SupportParity::Odd: return "Odd";
    case SupportParity::Mixed: return "Mixed";
  }
  return "?";
}

StateVector::StateVector(int m, std::vector<Amplitude> amps, double tol)
    : m_(m), tol_(tol), amps_(std::move(amps)) {
  if (m < 1 || m > kMaxQubits)
    throw WidthTooLarge("register width " + std::to_string(m) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  if (amps_.size() != (size_t{1} << m))
    throw LengthMismatch("amplitude vector size is not 2^m");
}

Amplitude StateVector::amplitude(const BitString& basis) const {
  if (basis.length() != m_) throw LengthMismatch("basis width differs from register");
  return amps_[basis.value()];
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<BitString> StateVector::support() const {
  std::vector<BitString> out;
  for (size_t idx = 0; idx < amps_.size(); ++idx)
    if (std::abs(amps_[idx]) > tol_)
      out.push_back(BitString(m_, static_cast<uint32_t>(idx)));
  return out;
}

void StateVector::apply_gate(int qubit, GateSymbol g) {
  if (qubit < 1 || qubit > m_) throw LengthMismatch("qubit index out of range");
  if (g == GateSymbol::I) return;

  const double invsqrt2 = 1.0 / std::numbers::sqrt2;
  // Row-major 2x2 entries g[row][col]. HR composes H after R, so the |1>
  // column picks up R's phase i before the Hadamard mix.
  Amplitude g00(invsqrt2, 0), g01(invsqrt2, 0), g10(invsqrt2, 0), g11(-invsqrt2, 0);
  if (g == GateSymbol::HR) {
    g01 = Amplitude(0, invsqrt2);
    g11 = Amplitude(0, -invsqrt2);
  }

  const size_t stride = size_t{1} << (m_ - qubit);
  for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (size_t off = 0; off < stride; ++off) {
      size_t i0 = base + off;
      size_t i1 = i0 + stride;
      Amplitude v0 = amps_[i0], v1 = amps_[i1];
      amps_[i0] = g00 * v0 + g01 * v1;
      amps_[i1] = g10 * v0 + g11 * v1;
    }
  }
}

StateVector ghz(int m, double tol) {
  if (m < 1 || m > StateVector::kMaxQubits)
    throw WidthTooLarge("register width " + std::to_string(m) + " outside [1, " +
                        std::to_string(StateVector::kMaxQubits) + "]");
  std::vector<Amplitude> amps(size_t{1} << m, Amplitude(0, 0));
  const double invsqrt2 = 1.0 / std::numbers::sqrt2;
  amps.front() = Amplitude(invsqrt2, 0);
  amps.back() = Amplitude(invsqrt2, 0);
  return StateVector(m, std::move(amps), tol);
}

StateVector psi3(double tol) {
  std::vector<Amplitude> amps(8, Amplitude(0, 0));
  amps[0b000] = Amplitude(0.5, 0);
  amps[0b011] = Amplitude(-0.5, 0);
  amps[0b101] = Amplitude(-0.5, 0);
  amps[0b110] = Amplitude(-0.5, 0);
  return StateVector(3, std::move(amps), tol);
}

StateVector build_signed_state(int m, const SignAssignment& sg, double tol) {
  if (sg.m != m) throw LengthMismatch("assignment width differs from m");
  std::vector<Amplitude> amps(size_t{1} << m, Amplitude(0, 0));
  const double mag = std::pow(2.0, -(m - 1) / 2.0);
  for (uint32_t v = 0; v < (1u << m); ++v) {
    if ((std::popcount(v) & 1) == 0) continue;
    int s = sg.at(BitString(m, v));  // throws IncompleteAssignment if missing
    amps[v] = Amplitude(s ? -mag : mag, 0);
  }
  return StateVector(m, std::move(amps), tol);
}

StateVector apply_word(const StateVector& s, const OpWord& word) {
  if (word.length() != s.qubit_count())
    throw LengthMismatch("word length differs from register width");
  StateVector out = s;
  for (int j = 1; j <= word.length(); ++j)
    out.apply_gate(j, word.symbols[static_cast<size_t>(j - 1)]);
  return out;
}

SupportParity support_parity(const StateVector& s) {
  bool even = false, odd = false;
  auto amps = s.amplitudes();
  for (size_t idx = 0; idx < amps.size(); ++idx) {
    if (std::abs(amps[idx]) <= s.tol()) continue;
    if (std::popcount(idx) & 1) odd = true; else even = true;
  }
  if (even && odd) return SupportParity::Mixed;
  return odd ? SupportParity::Odd : SupportParity::Even;
}

BitString sample_measurement(const StateVector& s, Rng& rng) {
  double total = 0;
  auto amps = s.amplitudes();
  for (const auto& a : amps) total += std::norm(a);
  double target = uniform_unit(rng) * total;
  double cum = 0;
  size_t picked = amps.size() - 1;
  for (size_t idx = 0; idx < amps.size(); ++idx) {
    cum += std::norm(amps[idx]);
    if (cum > target) { picked = idx; break; }
  }
  return BitString(s.qubit_count(), static_cast<uint32_t>(picked));
}

}  // namespace ecc
