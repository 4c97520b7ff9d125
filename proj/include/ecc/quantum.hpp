#pragma once
// Dense statevector simulation, sized for protocol verification rather than
// scale: one register holds one m-tuple's worth of qubits, m <= 20.
//
// Basis index convention matches BitString: qubit j (party j) is the j-th
// bit from the left of the basis label, so |011> sits at index 3. Gates are
// I, H and HR, where HR means "R first, then H" with R|0> = |0>,
// R|1> = exp(i*pi/2)|1>.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ecc/groups.hpp"
#include "ecc/signsolve.hpp"

namespace ecc {

using Amplitude = std::complex<double>;
using Rng = std::mt19937_64;

// Uniform in [0, 1), built from the top 53 bits so the stream depends only
// on the engine, not on a distribution implementation.
double uniform_unit(Rng& rng);

enum class SupportParity { Even, Odd, Mixed };

std::string support_parity_name(SupportParity sp);

class StateVector {
 public:
  static constexpr int kMaxQubits = 20;
  static constexpr double kDefaultTol = 1e-12;

  StateVector(int m, std::vector<Amplitude> amps, double tol = kDefaultTol);

  int qubit_count() const { return m_; }
  double tol() const { return tol_; }
  size_t dim() const { return amps_.size(); }

  Amplitude amplitude(const BitString& basis) const;
  std::span<const Amplitude> amplitudes() const { return amps_; }

  double norm() const;
  // Basis labels with |amplitude| > tol, ascending.
  std::vector<BitString> support() const;

  void apply_gate(int qubit, GateSymbol g);

 private:
  int m_;
  double tol_;
  std::vector<Amplitude> amps_;
};

StateVector ghz(int m, double tol = StateVector::kDefaultTol);

// (1/2)(|000> - |011> - |101> - |110>), the three-party even-class state.
StateVector psi3(double tol = StateVector::kDefaultTol);

// 2^-((m-1)/2) * sum over odd-parity v of (-1)^sg(v) |v>. The assignment
// must cover the whole odd class of width m.
StateVector build_signed_state(int m, const SignAssignment& sg,
                               double tol = StateVector::kDefaultTol);

StateVector apply_word(const StateVector& s, const OpWord& word);

SupportParity support_parity(const StateVector& s);

// One full-register Born-rule sample.
BitString sample_measurement(const StateVector& s, Rng& rng);

}  // namespace ecc
