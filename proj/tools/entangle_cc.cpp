// entangle-cc: build, run and verify constant-communication protocols for
// accumulative boolean functions, inspect the shared states and operation
// matrices behind them, and search the related guessing games.
//
// Exit codes: 0 on success (including a searched game coming out
// impossible), 1 on usage errors, 2 when verification finds mismatches or a
// sign system is inconsistent.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ecc/games.hpp"
#include "ecc/protocols.hpp"

using nlohmann::json;
using namespace ecc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

std::string fmt_amp(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.6f", v);
  return buf;
}

std::string fmt_amplitude(const Amplitude& a, double tol) {
  if (std::abs(a.imag()) <= tol) return fmt_amp(a.real());
  return fmt_amp(a.real()) + fmt_amp(a.imag()) + "i";
}

// ---- shared option plumbing -------------------------------------------------

struct CommonOpts {
  std::string format = "text";
  uint64_t seed = 0;
  double tol = StateVector::kDefaultTol;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "Measurement seed")->capture_default_str();
  cmd->add_option("--tol", opts.tol, "Amplitude tolerance")->capture_default_str();
}

void emit(const CommonOpts& opts, const json& doc, const std::string& text) {
  if (opts.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

// ---- family / promise assembly ---------------------------------------------

struct FamilyOpts {
  std::string family;
  int m = 0;
  int n = 1;
  std::string u;
  std::string minterms;  // comma list, or "even2" to derive from --u
  std::string promise;   // even | odd | hamming-odd2 | comma list
  std::string protocol;  // entangled | mod4 | mixed
  std::string backend = "auto";
};

void add_family(CLI::App* cmd, FamilyOpts& opts, bool with_protocol) {
  cmd->add_option("--family", opts.family,
                  "F_u | F_B | G_A | G_11 (or F_<bits> / G_<bits> shorthand)")
      ->required();
  cmd->add_option("--m", opts.m, "Number of parties");
  cmd->add_option("--n", opts.n, "Bits per party")->capture_default_str();
  cmd->add_option("--u", opts.u, "Minterm bit pattern (F_u)");
  cmd->add_option("--B", opts.minterms,
                  "Minterm patterns for F_B / G_A, comma separated; 'even2' "
                  "uses the even-multiple distance set of --u");
  cmd->add_option("--promise", opts.promise,
                  "even | odd | hamming-odd2 | explicit comma list "
                  "(default depends on the family)");
  if (with_protocol) {
    cmd->add_option("--protocol", opts.protocol,
                    "entangled | mod4 | mixed (default by family)");
    cmd->add_option("--backend", opts.backend,
                    "auto | psi3 | psi4 | ghz (entangled runner)")
        ->check(CLI::IsMember({"auto", "psi3", "psi4", "ghz"}))
        ->capture_default_str();
  }
}

std::vector<BitString> parse_pattern_list(const std::string& text) {
  std::vector<BitString> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(BitString::parse(tok));
  }
  if (out.empty()) throw ParseError("empty pattern list");
  return out;
}

struct ResolvedFamily {
  FunctionSpec spec;
  Runner runner = Runner::Entangled;
  EntangledBackend backend = EntangledBackend::Auto;
};

EntangledBackend parse_backend(const std::string& name) {
  if (name == "psi3") return EntangledBackend::Psi3;
  if (name == "psi4") return EntangledBackend::Psi4;
  if (name == "ghz") return EntangledBackend::Ghz;
  return EntangledBackend::Auto;
}

ResolvedFamily resolve_family(const FamilyOpts& opts) {
  ResolvedFamily res;

  std::string family = opts.family;
  std::string u_text = opts.u;
  // F_011 / G_0011 shorthand carries the pattern in the family name.
  if (family.size() > 2 && (family[0] == 'F' || family[0] == 'G') &&
      family[1] == '_' && family != "F_u" && family != "F_B" && family != "G_A" &&
      family != "G_11") {
    u_text = family.substr(2);
    family = family[0] == 'F' ? "F_u" : "G_A";
  }

  auto need_u = [&]() {
    if (u_text.empty()) throw CLI::ValidationError("--u", "pattern required");
    return BitString::parse(u_text);
  };

  if (family == "F_u" || family == "F_B") {
    BitString u = family == "F_u" ? need_u() : BitString();
    PromiseSet minterms;
    if (family == "F_B") {
      if (opts.minterms.empty())
        throw CLI::ValidationError("--B", "minterm set required for F_B");
      minterms = opts.minterms == "even2"
                     ? hamming_promise(need_u(), HammingKind::EvenMultipleOf2)
                     : explicit_promise(parse_pattern_list(opts.minterms));
      u = minterms.smallest();
    }
    PromiseSet promise;
    if (opts.promise == "even")
      promise = parity_class(u.length(), 0);
    else if (opts.promise == "odd")
      promise = parity_class(u.length(), 1);
    else if (opts.promise == "hamming-odd2")
      promise = hamming_promise(u, HammingKind::OddMultipleOf2);
    else if (!opts.promise.empty())
      promise = explicit_promise(parse_pattern_list(opts.promise));
    else if (family == "F_u" && u.length() == 3)
      promise = parity_class(3, u.parity());
    else if (family == "F_u")
      promise = hamming_promise(u, HammingKind::OddMultipleOf2);
    else
      promise = parity_class(u.length(), u.parity());
    res.spec = family == "F_u"
                   ? FunctionSpec::single_minterm(u, opts.n, std::move(promise))
                   : FunctionSpec::minterm_set(std::move(minterms), opts.n,
                                               std::move(promise));
    res.runner = Runner::Entangled;
  } else if (family == "G_A") {
    PromiseSet a = !opts.minterms.empty()
                       ? explicit_promise(parse_pattern_list(opts.minterms))
                       : explicit_promise({need_u()});
    res.spec = FunctionSpec::mixed(std::move(a), opts.n);
    res.runner = Runner::ClassicalMixed;
  } else if (family == "G_11") {
    res.spec = FunctionSpec::two_party_and(opts.n);
    res.runner = Runner::ClassicalMixed;
  } else {
    throw CLI::ValidationError("--family", "unknown family " + family);
  }

  if (opts.m != 0 && opts.m != res.spec.m)
    throw CLI::ValidationError("--m", "does not match the pattern widths");

  if (!opts.protocol.empty()) {
    if (opts.protocol == "entangled") res.runner = Runner::Entangled;
    else if (opts.protocol == "mod4") res.runner = Runner::ClassicalMod4;
    else if (opts.protocol == "mixed") res.runner = Runner::ClassicalMixed;
    else throw CLI::ValidationError("--protocol", "unknown protocol " + opts.protocol);
  }
  res.backend = parse_backend(opts.backend);
  return res;
}

InputMatrix load_inputs(const std::string& path) {
  if (path == "-") return InputMatrix::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file " + path);
  return InputMatrix::parse(in);
}

// ---- subcommand bodies -------------------------------------------------------

int cmd_matrices(const CommonOpts& common, int m, const std::string& kind_name) {
  MatrixKind kind = kind_name == "M" ? MatrixKind::M
                    : kind_name == "Mprime" ? MatrixKind::Mprime
                                            : MatrixKind::N;
  OpMatrix mat = build_op_matrix(m, kind);
  json rows = json::array();
  std::string text;
  for (int r = 0; r < mat.dim; ++r) {
    json row = json::array();
    for (int c = 0; c < mat.dim; ++c) {
      row.push_back(mat.cell(r, c).str());
      if (c) text += ", ";
      text += mat.cell(r, c).str();
    }
    rows.push_back(row);
    text += '\n';
  }
  json labels_r = json::array(), labels_c = json::array();
  for (const auto& b : mat.row_labels) labels_r.push_back(b.str());
  for (const auto& b : mat.col_labels) labels_c.push_back(b.str());
  emit(common,
       {{"m", m},
        {"kind", kind_name},
        {"row_labels", labels_r},
        {"col_labels", labels_c},
        {"cells", rows}},
       text);
  return kExitOk;
}

int print_state(const CommonOpts& common, const StateVector& st) {
  json terms = json::array();
  std::string text;
  for (const auto& basis : st.support()) {
    std::string amp = fmt_amplitude(st.amplitude(basis), st.tol());
    terms.push_back({{"basis", basis.str()}, {"amp", amp}});
    text += amp + " |" + basis.str() + ">\n";
  }
  emit(common, {{"m", st.qubit_count()}, {"terms", terms}}, text);
  return kExitOk;
}

int cmd_state(const CommonOpts& common, const std::string& kind, int m,
              const std::string& u_text, const std::string& apply_text,
              bool solve_only) {
  if (solve_only) {
    BitString u = BitString::parse(u_text);
    auto constraints =
        gen_constraints(u, hamming_promise(u, HammingKind::OddMultipleOf2));
    SolveResult solved = solve_signs(u.length(), constraints);
    if (!solved.consistent) {
      json cycle = json::array();
      std::string text = "INCONSISTENT\ncycle:";
      for (const auto& v : solved.witness_cycle) {
        cycle.push_back(v.str());
        text += " " + v.str();
      }
      text += '\n';
      emit(common, {{"consistent", false}, {"cycle", cycle}}, text);
      return kExitMismatch;
    }
    json assignment = json::array();
    std::string text;
    for (const auto& [basis, sign] : solved.assignment.value) {
      assignment.push_back({{"basis", basis.str()}, {"sign", sign}});
      text += basis.str() + " " + std::to_string(sign) + "\n";
    }
    emit(common, {{"consistent", true}, {"assignment", assignment}}, text);
    return kExitOk;
  }

  StateVector st = [&]() {
    if (kind == "psi3") return psi3(common.tol);
    if (kind == "ghz") return ghz(m, common.tol);
    BitString u = BitString::parse(u_text);
    auto constraints =
        gen_constraints(u, hamming_promise(u, HammingKind::OddMultipleOf2));
    SolveResult solved = solve_signs(u.length(), constraints);
    if (!solved.consistent)
      throw UnsupportedDispatch("sign system inconsistent; use --solve-signs");
    return build_signed_state(u.length(), solved.assignment, common.tol);
  }();
  if (!apply_text.empty()) st = apply_word(st, OpWord::parse(apply_text));
  return print_state(common, st);
}

json transcript_json(const Transcript& tr) {
  json messages = json::array();
  for (const auto& msg : tr.messages) {
    std::string bits;
    for (int b : msg.payload) bits += static_cast<char>('0' + b);
    messages.push_back({{"from", msg.from}, {"to", msg.to}, {"bits", bits}});
  }
  return messages;
}

ProtocolOutcome run_resolved(const ResolvedFamily& fam, const InputMatrix& inputs,
                             Rng& rng) {
  switch (fam.runner) {
    case Runner::Entangled:
      return run_entangled(fam.spec, inputs, rng, fam.backend);
    case Runner::ClassicalMod4:
      return run_classical_mod4(fam.spec, inputs);
    case Runner::ClassicalMixed:
      return run_classical_mixed(fam.spec, inputs);
  }
  throw Error("unreachable");
}

int cmd_run(const CommonOpts& common, const FamilyOpts& fopts,
            const std::string& inputs_path) {
  ResolvedFamily fam = resolve_family(fopts);
  InputMatrix inputs = load_inputs(inputs_path);
  Rng rng(common.seed);
  ProtocolOutcome out = run_resolved(fam, inputs, rng);

  std::string text = "value: " + std::to_string(out.value) + "\n";
  text += "cbits: " + std::to_string(out.transcript.total_cbits()) + "\n";
  text += "messages:";
  for (const auto& msg : out.transcript.messages) {
    text += " " + std::to_string(msg.from) + "->" + std::to_string(msg.to) + ":";
    for (int b : msg.payload) text += static_cast<char>('0' + b);
  }
  text += "\nsupport:";
  json support = json::array();
  for (SupportParity sp : out.support_check) {
    support.push_back(support_parity_name(sp));
    text += " " + support_parity_name(sp);
  }
  text += "\n";
  emit(common,
       {{"value", out.value},
        {"cbits", out.transcript.total_cbits()},
        {"messages", transcript_json(out.transcript)},
        {"support", support}},
       text);
  return kExitOk;
}

int cmd_verify(const CommonOpts& common, const FamilyOpts& fopts, bool exhaustive,
               uint64_t cap, int samples) {
  ResolvedFamily fam = resolve_family(fopts);
  Coverage cov;
  cov.exhaustive = exhaustive;
  cov.cap = cap;
  cov.samples = samples;
  cov.seed = common.seed;
  VerifyReport rep = verify(fam.spec, fam.runner, cov, fam.backend);

  std::string text = "trials: " + std::to_string(rep.trials) + "\n";
  text += "mismatches: " + std::to_string(rep.mismatches) + "\n";
  text += "min_cbits: " + std::to_string(rep.min_cbits) + "\n";
  text += "max_cbits: " + std::to_string(rep.max_cbits) + "\n";
  text += "support_violations: " + std::to_string(rep.support_violations) + "\n";
  emit(common,
       {{"trials", rep.trials},
        {"mismatches", rep.mismatches},
        {"min_cbits", rep.min_cbits},
        {"max_cbits", rep.max_cbits},
        {"support_violations", rep.support_violations}},
       text);
  return rep.mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_game(const CommonOpts& common, int m, const std::string& promise_name,
             const std::string& target_text) {
  PromiseSet ones = explicit_promise(parse_pattern_list(target_text));
  PromiseSet promise;
  if (promise_name == "even") promise = parity_class(m, 0);
  else if (promise_name == "odd") promise = parity_class(m, 1);
  else if (promise_name == "full") {
    std::vector<BitString> all;
    for (uint32_t v = 0; v < (1u << m); ++v) all.push_back(BitString(m, v));
    promise = explicit_promise(all);
  } else if (promise_name == "mixed") {
    promise = mixed_union(ones);
  } else {
    promise = explicit_promise(parse_pattern_list(promise_name));
  }

  GameSpec game = GameSpec::membership(std::move(promise), ones);
  GameResult res = ccf_search(game);
  if (!res.winnable) {
    emit(common, {{"result", "IMPOSSIBLE"}}, "IMPOSSIBLE\n");
    return kExitOk;
  }
  json strategy = json::array();
  std::string text;
  for (size_t j = 0; j < res.witness.size(); ++j) {
    const auto& s = res.witness[j];
    strategy.push_back({{"party", j + 1}, {"a0", s.answer0}, {"a1", s.answer1}});
    text += "a_" + std::to_string(j + 1) + "(0)=" + std::to_string(s.answer0) +
            " a_" + std::to_string(j + 1) + "(1)=" + std::to_string(s.answer1) + "\n";
  }
  emit(common, {{"result", "WINNABLE"}, {"strategy", strategy}}, text);
  return kExitOk;
}

int cmd_reduce(const CommonOpts& common, const std::string& u_text,
               const std::string& u2_text, const std::string& inputs_path) {
  BitString u = BitString::parse(u_text);
  BitString u2 = BitString::parse(u2_text);
  InputMatrix inputs = load_inputs(inputs_path);
  InputMatrix moved = reduce_instance(u, u2, inputs);

  json toggles = json::array();
  std::string text = "toggles:";
  for (int j : reduction_toggles(u, u2)) {
    toggles.push_back(j);
    text += " " + std::to_string(j);
  }
  text += "\n" + moved.str();
  json rows = json::array();
  for (const auto& r : moved.rows) rows.push_back(r.str());
  emit(common, {{"toggles", toggles}, {"inputs", rows}}, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant-communication protocols for accumulative boolean functions"};
  app.require_subcommand(1);

  CommonOpts common;

  // matrices
  auto* matrices = app.add_subcommand("matrices", "Print an operation matrix");
  int mat_m = 3;
  std::string mat_kind = "M";
  matrices->add_option("--m", mat_m, "Width")->required();
  matrices->add_option("--kind", mat_kind, "M | Mprime | N")
      ->check(CLI::IsMember({"M", "Mprime", "N"}))
      ->capture_default_str();
  add_common(matrices, common);

  // state
  auto* state = app.add_subcommand("state", "Print a shared state or sign solution");
  std::string st_kind = "psi3";
  int st_m = 3;
  std::string st_u, st_apply;
  bool st_solve = false;
  state->add_option("--kind", st_kind, "psi3 | ghz | signed")
      ->check(CLI::IsMember({"psi3", "ghz", "signed"}))
      ->capture_default_str();
  state->add_option("--m", st_m, "Width (ghz)")->capture_default_str();
  state->add_option("--u", st_u, "Anchor pattern (signed / --solve-signs)");
  state->add_option("--apply", st_apply, "Apply a gate word before printing");
  state->add_flag("--solve-signs", st_solve, "Print the sign assignment for --u");
  add_common(state, common);

  // run
  auto* run = app.add_subcommand("run", "Run one protocol instance");
  FamilyOpts run_fam;
  std::string run_inputs;
  add_family(run, run_fam, true);
  run->add_option("--inputs", run_inputs, "Input matrix file, or - for stdin")
      ->required();
  add_common(run, common);

  // verify
  auto* ver = app.add_subcommand("verify", "Replay a protocol against the oracle");
  FamilyOpts ver_fam;
  bool ver_exhaustive = false;
  uint64_t ver_cap = 1u << 20;
  int ver_samples = 0;
  add_family(ver, ver_fam, true);
  ver->add_flag("--exhaustive", ver_exhaustive, "Cover every promise input");
  ver->add_option("--cap", ver_cap, "Exhaustive size cap")->capture_default_str();
  ver->add_option("--samples", ver_samples, "Random trial count");
  add_common(ver, common);

  // game
  auto* game = app.add_subcommand("game", "Search deterministic local strategies");
  int game_m = 0;
  std::string game_promise, game_target_u;
  game->add_option("--m", game_m, "Width")->required();
  game->add_option("--promise", game_promise,
                   "even | odd | full | mixed | explicit comma list")
      ->required();
  game->add_option("--target-u", game_target_u,
                   "Comma list of patterns whose membership is the target bit")
      ->required();
  add_common(game, common);

  // reduce
  auto* red = app.add_subcommand("reduce", "Relabel an instance between minterms");
  std::string red_u, red_u2, red_inputs;
  red->add_option("--u", red_u, "Source minterm")->required();
  red->add_option("--u2", red_u2, "Target minterm")->required();
  red->add_option("--inputs", red_inputs, "Input matrix file, or - for stdin")
      ->required();
  add_common(red, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (matrices->parsed()) return cmd_matrices(common, mat_m, mat_kind);
    if (state->parsed())
      return cmd_state(common, st_kind, st_m, st_u, st_apply, st_solve);
    if (run->parsed()) return cmd_run(common, run_fam, run_inputs);
    if (ver->parsed())
      return cmd_verify(common, ver_fam, ver_exhaustive, ver_cap, ver_samples);
    if (game->parsed()) return cmd_game(common, game_m, game_promise, game_target_u);
    if (red->parsed()) return cmd_reduce(common, red_u, red_u2, red_inputs);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
