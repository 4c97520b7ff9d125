#include "ecc/protocols.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace ecc {

int Transcript::total_cbits() const {
  int total = 0;
  for (const auto& msg : messages) total += static_cast<int>(msg.payload.size());
  return total;
}

GateSymbol party_gate_ih(int u_bit, int x_bit) {
  return (u_bit ^ x_bit) ? GateSymbol::H : GateSymbol::I;
}

GateSymbol party_gate_hhr(int u_bit, int x_bit) {
  return (u_bit ^ x_bit) ? GateSymbol::HR : GateSymbol::H;
}

std::vector<GateSymbol> party_gate_row(int u_bit, const BitString& input,
                                       WordAlphabet alphabet) {
  std::vector<GateSymbol> row;
  row.reserve(static_cast<size_t>(input.length()));
  for (int i = 1; i <= input.length(); ++i)
    row.push_back(alphabet == WordAlphabet::IH
                      ? party_gate_ih(u_bit, input.bit(i))
                      : party_gate_hhr(u_bit, input.bit(i)));
  return row;
}

int party_count_mod4(const BitString& input) { return input.weight() & 3; }

std::vector<int> party_toggle_bits(int m, int j, int u_bit, const BitString& input) {
  // Even m starts from an odd-parity pattern, realized by party 1
  // complementing its anchor bit; odd m ends with the universal toggle.
  int start = u_bit ^ ((m % 2 == 0 && j == 1) ? 1 : 0);
  int final_flip = m % 2;
  std::vector<int> out;
  out.reserve(static_cast<size_t>(input.length()));
  for (int i = 1; i <= input.length(); ++i)
    out.push_back(start ^ (u_bit ^ input.bit(i)) ^ final_flip);
  return out;
}

int xor_bits(const std::vector<int>& bits) {
  int acc = 0;
  for (int b : bits) acc ^= b & 1;
  return acc;
}

std::string backend_name(EntangledBackend b) {
  switch (b) {
    case EntangledBackend::Auto: return "auto";
    case EntangledBackend::Psi3: return "psi3";
    case EntangledBackend::Psi4: return "psi4";
    case EntangledBackend::Ghz: return "ghz";
  }
  return "?";
}

std::string runner_name(Runner r) {
  switch (r) {
    case Runner::Entangled: return "entangled";
    case Runner::ClassicalMod4: return "mod4";
    case Runner::ClassicalMixed: return "mixed";
  }
  return "?";
}

namespace {

void check_inputs(const FunctionSpec& spec, const InputMatrix& inputs) {
  spec.validate();
  int bad = validate_promise(spec, inputs);
  if (bad)
    throw PromiseViolation("tuple " + std::to_string(bad) + " (" +
                               inputs.tuple(bad).str() + ") outside the promise",
                           bad);
}

// Anchor pattern of a minterm set that equals its own even-multiple distance
// set. The set's label usually carries it; otherwise every member is tried.
BitString minterm_set_anchor(const PromiseSet& B) {
  if (B.label == PromiseLabel::HammingEven2 && B.anchor &&
      hamming_promise(*B.anchor, HammingKind::EvenMultipleOf2).same_members(B))
    return *B.anchor;
  for (const auto& v : B.members)
    if (hamming_promise(v, HammingKind::EvenMultipleOf2).same_members(B)) return v;
  throw UnsupportedDispatch(
      "minterm set is not the even-multiple distance set of any member");
}

struct BackendPlan {
  EntangledBackend backend;
  BitString ref;     // anchor pattern u the gate rule compares against
  int match_parity;  // measured parity that flags "term = 1"
};

bool psi3_applicable(const FunctionSpec& spec) {
  return spec.m == 3 && spec.family == Family::Fu && spec.u.parity() == 0;
}

std::optional<BitString> psi4_reference(const FunctionSpec& spec) {
  if (spec.m != 4) return std::nullopt;
  if (spec.family == Family::Fu) {
    if (spec.u.parity() == 1 && !spec.promise.contains(spec.u.complement()))
      return spec.u;
    return std::nullopt;
  }
  if (spec.family == Family::FB) {
    if (spec.minterms.size() != 2) return std::nullopt;
    BitString a = spec.minterms.members[0], b = spec.minterms.members[1];
    if (a.parity() == 1 && b == a.complement()) return a;
  }
  return std::nullopt;
}

std::optional<BitString> ghz_reference(const FunctionSpec& spec) {
  if (spec.m < 3) return std::nullopt;
  if (spec.family == Family::Fu) {
    if (spec.promise.subset_of(hamming_promise(spec.u, HammingKind::OddMultipleOf2)))
      return spec.u;
    return std::nullopt;
  }
  if (spec.family == Family::FB) {
    try {
      return minterm_set_anchor(spec.minterms);
    } catch (const UnsupportedDispatch&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

BackendPlan resolve_backend(const FunctionSpec& spec, EntangledBackend requested) {
  auto want = [&](EntangledBackend b) {
    return requested == EntangledBackend::Auto || requested == b;
  };
  if (want(EntangledBackend::Psi3) && psi3_applicable(spec))
    return {EntangledBackend::Psi3, spec.u, 0};
  if (want(EntangledBackend::Psi4))
    if (auto ref = psi4_reference(spec)) return {EntangledBackend::Psi4, *ref, 1};
  if (want(EntangledBackend::Ghz))
    if (auto ref = ghz_reference(spec)) return {EntangledBackend::Ghz, *ref, 0};
  throw UnsupportedDispatch("no entangled backend accepts " +
                            family_name(spec.family) + " at m=" +
                            std::to_string(spec.m) +
                            (requested == EntangledBackend::Auto
                                 ? ""
                                 : " with backend " + backend_name(requested)));
}

StateVector base_state(const BackendPlan& plan, int m) {
  switch (plan.backend) {
    case EntangledBackend::Psi3:
      return psi3();
    case EntangledBackend::Psi4: {
      auto constraints = gen_constraints(
          plan.ref, hamming_promise(plan.ref, HammingKind::OddMultipleOf2));
      SolveResult solved = solve_signs(4, constraints);
      if (!solved.consistent)
        throw Error("sign constraints for the four-party state are inconsistent");
      return build_signed_state(4, solved.assignment);
    }
    default:
      return ghz(m);
  }
}

std::vector<PartyView> make_views(const InputMatrix& inputs) {
  std::vector<PartyView> views;
  views.reserve(static_cast<size_t>(inputs.m));
  for (int j = 1; j <= inputs.m; ++j)
    views.push_back({j, inputs.rows[static_cast<size_t>(j - 1)], {}, {}});
  return views;
}

}  // namespace

ProtocolOutcome run_entangled(const FunctionSpec& spec, const InputMatrix& inputs,
                              Rng& rng, EntangledBackend backend) {
  check_inputs(spec, inputs);
  BackendPlan plan = resolve_backend(spec, backend);
  WordAlphabet alphabet = plan.backend == EntangledBackend::Ghz
                              ? WordAlphabet::H_HR
                              : WordAlphabet::IH;
  StateVector base = base_state(plan, spec.m);

  std::vector<PartyView> views = make_views(inputs);
  std::vector<std::vector<GateSymbol>> gate_rows;
  gate_rows.reserve(views.size());
  for (const auto& view : views)
    gate_rows.push_back(
        party_gate_row(plan.ref.bit(view.index), view.input, alphabet));

  ProtocolOutcome out;
  for (int i = 1; i <= spec.n; ++i) {
    StateVector reg = base;
    for (const auto& view : views)
      reg.apply_gate(view.index,
                     gate_rows[static_cast<size_t>(view.index - 1)]
                              [static_cast<size_t>(i - 1)]);
    out.support_check.push_back(support_parity(reg));
    BitString result = sample_measurement(reg, rng);
    for (auto& view : views) view.measured.push_back(result.bit(view.index));
  }

  // Party 1 folds the broadcast XOR bits with its own; the constant term
  // n*(1^c) converts "measured parity equals the match parity" into the
  // per-position term value.
  int acc = (spec.n * (1 ^ plan.match_parity)) & 1;
  acc ^= xor_bits(views.front().measured);
  for (int j = 2; j <= spec.m; ++j) {
    int aj = xor_bits(views[static_cast<size_t>(j - 1)].measured);
    out.transcript.messages.push_back({j, 1, {aj}});
    acc ^= aj;
  }
  out.value = acc;
  return out;
}

ProtocolOutcome run_classical_mod4(const FunctionSpec& spec,
                                   const InputMatrix& inputs) {
  check_inputs(spec, inputs);
  if (spec.family != Family::Fu || spec.m < 3)
    throw UnsupportedDispatch("mod-4 counting serves single minterms at m >= 3");
  if (!spec.promise.subset_of(hamming_promise(spec.u, HammingKind::OddMultipleOf2)))
    throw UnsupportedDispatch(
        "mod-4 counting requires the odd-multiple distance promise of u");

  // Anchor at the all-zeros minterm; every surviving nonzero tuple then has
  // weight 2 mod 4, so the total 1-count mod 4 is twice the number of
  // minterm misses (mod 2).
  InputMatrix reduced = reduce_instance(spec.u, BitString::zeros(spec.m), inputs);
  std::vector<PartyView> views = make_views(reduced);
  std::vector<int> counts;
  counts.reserve(views.size());
  for (const auto& view : views) counts.push_back(party_count_mod4(view.input));

  ProtocolOutcome out;
  int known_low = counts[0] & 1;  // party 1's own contribution
  int total = counts[0];
  for (int j = 2; j <= spec.m - 1; ++j) {
    int c = counts[static_cast<size_t>(j - 1)];
    out.transcript.messages.push_back({j, 1, {(c >> 1) & 1, c & 1}});
    total += c;
    known_low ^= c & 1;
  }
  int clast = counts[static_cast<size_t>(spec.m - 1)];
  out.transcript.messages.push_back({spec.m, 1, {(clast >> 1) & 1}});
  // All reduced tuples have even weight, so the global 1-count is even and
  // the last party's low bit is exactly the parity party 1 already holds.
  total += ((clast >> 1) & 1) * 2 + known_low;

  int p = (total & 3) >> 1;
  out.value = (spec.n & 1) ^ p;
  return out;
}

ProtocolOutcome run_classical_mixed(const FunctionSpec& spec,
                                    const InputMatrix& inputs) {
  check_inputs(spec, inputs);
  ProtocolOutcome out;
  std::vector<PartyView> views = make_views(inputs);

  if (spec.family == Family::G11) {
    // Party 1 keeps its bits, party 2 complements; on the promise {01,10,11}
    // the XOR of the two codes is the AND of the tuple.
    for (int i = 1; i <= spec.n; ++i) {
      views[0].toggles.push_back(views[0].input.bit(i));
      views[1].toggles.push_back(1 ^ views[1].input.bit(i));
    }
    int b = xor_bits(views[1].toggles);
    out.transcript.messages.push_back({2, 1, {b}});
    out.value = xor_bits(views[0].toggles) ^ b;
    return out;
  }

  if (spec.family != Family::GA)
    throw UnsupportedDispatch("mixed-parity runner serves G_A and G_11 only");

  BitString u = spec.minterms.smallest();
  for (auto& view : views)
    view.toggles =
        party_toggle_bits(spec.m, view.index, u.bit(view.index), view.input);

  int acc = xor_bits(views.front().toggles);
  for (int j = 2; j <= spec.m; ++j) {
    int lj = xor_bits(views[static_cast<size_t>(j - 1)].toggles);
    out.transcript.messages.push_back({j, 1, {lj}});
    acc ^= lj;
  }
  out.value = acc;
  return out;
}

namespace {

int worker_count() {
  const char* env = std::getenv("ENTANGLE_CC_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 1) return 1;
  return static_cast<int>(std::min<long>(v, 64));
}

}  // namespace

VerifyReport verify(const FunctionSpec& spec, Runner runner, const Coverage& cov,
                    EntangledBackend backend) {
  std::vector<InputMatrix> inputs;
  if (cov.exhaustive) {
    inputs = gen_inputs_exhaustive(spec, cov.cap);
  } else {
    Rng gen(cov.seed);
    inputs = gen_inputs_random(spec, cov.samples, gen);
  }

  struct TrialResult {
    bool mismatch = false;
    int cbits = 0;
    int violations = 0;
  };
  std::vector<TrialResult> results(inputs.size());

  auto run_trial = [&](size_t t) {
    Rng rng(cov.seed + t);
    ProtocolOutcome outcome;
    switch (runner) {
      case Runner::Entangled:
        outcome = run_entangled(spec, inputs[t], rng, backend);
        break;
      case Runner::ClassicalMod4:
        outcome = run_classical_mod4(spec, inputs[t]);
        break;
      case Runner::ClassicalMixed:
        outcome = run_classical_mixed(spec, inputs[t]);
        break;
    }
    TrialResult r;
    r.mismatch = outcome.value != oracle_eval(spec, inputs[t]);
    r.cbits = outcome.transcript.total_cbits();
    for (SupportParity sp : outcome.support_check)
      if (sp == SupportParity::Mixed) ++r.violations;
    results[t] = r;
  };

  int workers = std::min<int>(worker_count(), static_cast<int>(inputs.size()));
  if (workers <= 1) {
    for (size_t t = 0; t < inputs.size(); ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t t = static_cast<size_t>(w); t < inputs.size();
             t += static_cast<size_t>(workers))
          run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  report.trials = inputs.size();
  for (size_t t = 0; t < results.size(); ++t) {
    const auto& r = results[t];
    if (r.mismatch) ++report.mismatches;
    report.support_violations += static_cast<uint64_t>(r.violations);
    if (t == 0) {
      report.min_cbits = report.max_cbits = r.cbits;
    } else {
      report.min_cbits = std::min(report.min_cbits, r.cbits);
      report.max_cbits = std::max(report.max_cbits, r.cbits);
    }
  }
  return report;
}

}  // namespace ecc
