// gaplab: batch experiments over gap-program collapses, deck reconstruction,
// machine encodings and oracle-stage searches, with reproducible JSON
// reports.
//
// Exit codes: 0 success / zero violations, 1 semantic violation or failed
// search, 2 usage, parse or resource error.

#include <filesystem>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "gaplab/errors.hpp"
#include "gaplab/fixtures.hpp"
#include "gaplab/gapcore/collapse.hpp"
#include "gaplab/gapcore/verify.hpp"
#include "gaplab/io/dsl.hpp"
#include "gaplab/io/json_io.hpp"
#include "gaplab/polyenc/multilinear.hpp"
#include "gaplab/polyenc/primes.hpp"
#include "gaplab/reconstruct/deck.hpp"

namespace {

using gaplab::BigInt;
using gaplab::Domain;
using gaplab::NatPoly;
using Json = gaplab::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// Reports are named by the hash of their config and never silently
// overwritten with different content, so a report directory doubles as a
// regression corpus.
int write_report(const std::string& subcommand, const Json& config, const Json& results,
                 const std::string& out_path, const std::string& report_dir) {
  Json report{{"tool", "gaplab"}, {"subcommand", subcommand}, {"config", config},
              {"results", results}};
  const std::string payload = report.dump(2) + "\n";
  std::string path = out_path;
  if (path.empty()) {
    std::filesystem::create_directories(report_dir);
    path = report_dir + "/" + subcommand + "-" + hex64(fnv1a(config.dump())) + ".json";
  }
  if (std::filesystem::exists(path)) {
    const std::string existing = gaplab::io::read_text_file(path);
    if (existing != payload) {
      std::cerr << "refusing to overwrite " << path
                << ": existing report differs for this config\n";
      return kExitUsage;
    }
    std::cout << "report unchanged: " << path << "\n";
    return kExitOk;
  }
  gaplab::io::write_text_file(path, payload);
  std::cout << "report written: " << path << "\n";
  return kExitOk;
}

gaplab::gapcore::LanguageOracle language_from_set(std::set<std::string> accepted) {
  return [accepted = std::move(accepted)](const std::string& x) {
    return accepted.count(x) > 0;
  };
}

// ---------------------------------------------------------------------------
// collapse

struct CollapseOptions {
  std::string program_path, spec_path, language_path, out_path, report_dir = "reports";
  std::string variant = "lwpp";
  std::uint64_t random_fixtures = 0;
  std::uint64_t seed = 1;
  std::uint64_t max_len = 3;
  std::uint64_t r_exp = 2;
};

int run_collapse_files(const CollapseOptions& opt) {
  using namespace gaplab::gapcore;
  const auto program_text = gaplab::io::read_text_file(opt.program_path);
  const auto spec_text = gaplab::io::read_text_file(opt.spec_path);
  GapProgram g = gaplab::io::parse_gap_program(program_text);
  auto parsed = gaplab::io::parse_spec_file(spec_text);

  std::optional<std::set<std::string>> explicit_language;
  if (!opt.language_path.empty()) {
    auto lang = Json::parse(gaplab::io::read_text_file(opt.language_path));
    std::set<std::string> accepted;
    for (const auto& x : lang) accepted.insert(x.get<std::string>());
    explicit_language = std::move(accepted);
  }

  Json config{{"program", opt.program_path}, {"spec", opt.spec_path},
              {"variant", opt.variant},      {"language", opt.language_path}};

  Json results;
  bool violations = false;
  const Domain dom = g.domain();

  auto derive_language = [&](const TargetSpec& spec) {
    std::set<std::string> accepted;
    for (const std::string& x : dom.enumerate()) {
      const BigInt gap = g.eval(x);
      const auto targets = spec.targets_for(x);
      if (std::find(targets.begin(), targets.end(), gap) != targets.end())
        accepted.insert(x);
    }
    return accepted;
  };

  if (opt.variant == "lwpp" || opt.variant == "wpp") {
    if (parsed.two_sided) throw gaplab::ParseError("spec file is two-sided");
    const TargetSpec& spec = parsed.single;
    const auto accepted =
        explicit_language ? *explicit_language : derive_language(spec);
    auto language = language_from_set(accepted);
    const bool length_indexed = opt.variant == "lwpp";
    // The original indexed promise, then the compiled single-target witness.
    auto original =
        verify_class_membership(g, spec, language,
                                length_indexed ? CountingClass::kRLWPP
                                               : CountingClass::kRWPP);
    auto witness = length_indexed ? collapse_lwpp(g, spec) : collapse_wpp(g, spec);
    auto single = single_target_spec(
        witness.fhat,
        length_indexed ? TargetMode::kLengthIndexed : TargetMode::kInputIndexed, dom);
    auto compiled = verify_class_membership(
        witness.ghat, single, language,
        length_indexed ? CountingClass::kLWPP : CountingClass::kWPP);
    results["original"] = gaplab::io::verify_report_to_json(original);
    results["compiled"] = gaplab::io::verify_report_to_json(compiled);
    violations = !original.ok() || !compiled.ok();
  } else if (opt.variant == "two-sided") {
    if (!parsed.two_sided) throw gaplab::ParseError("spec file is not two-sided");
    const TwoSidedTargetSpec& spec = parsed.both;
    std::set<std::string> accepted;
    if (explicit_language) {
      accepted = *explicit_language;
    } else {
      for (const std::string& x : dom.enumerate()) {
        const BigInt gap = g.eval(x);
        const auto a_targets = spec.accept.targets_for(x);
        if (std::find(a_targets.begin(), a_targets.end(), gap) != a_targets.end())
          accepted.insert(x);
      }
    }
    auto language = language_from_set(accepted);
    auto original =
        verify_class_membership(g, spec, language, CountingClass::kTwoSided);
    auto chained = collapse_two_sided(g, spec);
    auto witness = collapse_lwpp(chained.ghat, chained.indexed);
    auto single = single_target_spec(witness.fhat, TargetMode::kLengthIndexed, dom);
    auto compiled =
        verify_class_membership(witness.ghat, single, language, CountingClass::kLWPP);
    results["original"] = gaplab::io::verify_report_to_json(original);
    results["compiled"] = gaplab::io::verify_report_to_json(compiled);
    violations = !original.ok() || !compiled.ok();
  } else if (opt.variant == "ceqp") {
    if (parsed.two_sided) throw gaplab::ParseError("spec file is two-sided");
    const TargetSpec& spec = parsed.single;
    // The counting machine is the program's realization (or its base machine
    // when the program already is one).
    BaseMachinePtr machine =
        g.node()->kind == GapProgram::Kind::kBase
            ? g.node()->machine
            : std::make_shared<const BaseMachine>(realize(g));
    std::set<std::string> accepted;
    for (const std::string& x : dom.enumerate()) {
      const BigInt acc = enumerate_paths(machine->tree(x)).acc;
      const auto targets = spec.targets_for(x);
      if (std::find(targets.begin(), targets.end(), acc) != targets.end())
        accepted.insert(x);
    }
    if (explicit_language) accepted = *explicit_language;
    auto h2 = collapse_ceqp(machine, spec);
    auto compiled = verify_class_membership(h2, spec, language_from_set(accepted),
                                            CountingClass::kCeqP);
    results["compiled"] = gaplab::io::verify_report_to_json(compiled);
    violations = !compiled.ok();
  } else {
    throw gaplab::ParseError("unknown variant '" + opt.variant + "'");
  }

  int rc = write_report("collapse", config, results, opt.out_path, opt.report_dir);
  if (rc != kExitOk) return rc;
  return violations ? kExitViolation : kExitOk;
}

int run_collapse_random(const CollapseOptions& opt) {
  using namespace gaplab::gapcore;
  gaplab::fixtures::Rng rng(opt.seed);
  const Domain dom{"01", static_cast<std::size_t>(opt.max_len)};
  const NatPoly r = NatPoly::power_plus(opt.r_exp);
  Json config{{"random", opt.random_fixtures}, {"seed", opt.seed},
              {"variant", opt.variant},        {"max_len", opt.max_len},
              {"r_exp", opt.r_exp}};
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < opt.random_fixtures; ++i) {
    const bool length_indexed = opt.variant != "wpp";
    auto inst = gaplab::fixtures::random_promise_instance(
        rng, dom,
        length_indexed ? TargetMode::kLengthIndexed : TargetMode::kInputIndexed, r,
        i % 4 == 0);
    auto witness = length_indexed ? collapse_lwpp(inst.g, inst.spec)
                                  : collapse_wpp(inst.g, inst.spec);
    auto single = single_target_spec(
        witness.fhat,
        length_indexed ? TargetMode::kLengthIndexed : TargetMode::kInputIndexed, dom);
    auto report = verify_class_membership(
        witness.ghat, single,
        language_from_set(inst.accepted),
        length_indexed ? CountingClass::kLWPP : CountingClass::kWPP);
    if (!report.ok()) ++failures;
  }
  Json results{{"fixtures", opt.random_fixtures}, {"failures", failures}};
  int rc = write_report("collapse", config, results, opt.out_path, opt.report_dir);
  if (rc != kExitOk) return rc;
  return failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// reconstruct

struct ReconstructOptions {
  std::uint64_t n_max = 7;
  std::string q_poly = "1";
  std::string deck_path, out_path, report_dir = "reports";
  int class_k = -1;
  bool has_deck = false;
};

NatPoly parse_poly_arg(const std::string& text) {
  std::vector<std::uint64_t> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    coeffs.push_back(std::stoull(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return NatPoly(std::move(coeffs));
}

int run_reconstruct(const ReconstructOptions& opt) {
  using namespace gaplab::reconstruct;
  if (opt.has_deck) {
    Json config{{"deck", opt.deck_path}, {"class_k", opt.class_k}};
    auto deck_json = Json::parse(gaplab::io::read_text_file(opt.deck_path));
    Deck d = gaplab::io::deck_from_json(deck_json);
    Json results{{"cards", d.size()},
                 {"pcount", pcount(d)},
                 {"legitimate", is_legitimate(d)}};
    if (opt.class_k >= 0) {
      auto restricted = restricted_legitimate(d, opt.class_k);
      results["restricted"] = Json{{"k", opt.class_k},
                                   {"reject_gap_zero", restricted.reject_gap_zero},
                                   {"pcount", restricted.preimages}};
    }
    return write_report("reconstruct", config, results, opt.out_path, opt.report_dir);
  }
  if (opt.n_max > static_cast<std::uint64_t>(kMaxVertices)) {
    std::cerr << "n-max " << opt.n_max << " exceeds the bound " << kMaxVertices << "\n";
    return kExitUsage;
  }
  const NatPoly q = parse_poly_arg(opt.q_poly);
  Json config{{"n_max", opt.n_max}, {"q_poly", q.coeffs()}};
  auto report = q_reconstruction_report(static_cast<int>(opt.n_max), q);
  int rc = write_report("reconstruct", config,
                        gaplab::io::qrecon_report_to_json(report), opt.out_path,
                        opt.report_dir);
  if (rc != kExitOk) return rc;
  return report.violation_count() == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// encode

struct EncodeOptions {
  std::string machine_path, input, out_path, report_dir = "reports";
  std::uint64_t max_universe = 14;
  std::uint64_t random_fixtures = 0;
  std::uint64_t seed = 1;
};

int run_encode(const EncodeOptions& opt) {
  using namespace gaplab::polyenc;
  if (opt.random_fixtures > 0) {
    gaplab::fixtures::Rng rng(opt.seed);
    Json config{{"random", opt.random_fixtures}, {"seed", opt.seed},
                {"max_universe", opt.max_universe}};
    std::uint64_t failures = 0;
    for (std::uint64_t i = 0; i < opt.random_fixtures; ++i) {
      auto m = gaplab::fixtures::random_oracle_machine(
          rng, 2 + static_cast<int>(rng() % 7), 5, "rnd" + std::to_string(i));
      if (!verify_encoding(m, "", static_cast<int>(opt.max_universe)).ok()) ++failures;
    }
    Json results{{"fixtures", opt.random_fixtures}, {"failures", failures}};
    int rc = write_report("encode", config, results, opt.out_path, opt.report_dir);
    if (rc != kExitOk) return rc;
    return failures == 0 ? kExitOk : kExitViolation;
  }
  Json config{{"machine", opt.machine_path}, {"input", opt.input},
              {"max_universe", opt.max_universe}};
  auto machine = gaplab::io::oracle_machine_from_json(
      Json::parse(gaplab::io::read_text_file(opt.machine_path)));
  auto report = verify_encoding(machine, opt.input, static_cast<int>(opt.max_universe));
  Json results = gaplab::io::encoding_report_to_json(report);
  results["polynomial"] = gaplab::io::multilinear_to_json(encode(machine, opt.input));
  int rc = write_report("encode", config, results, opt.out_path, opt.report_dir);
  if (rc != kExitOk) return rc;
  return report.ok() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// diag

struct DiagOptions {
  std::string stage_path, out_path, report_dir = "reports";
  std::string variant = "gap";
  std::uint64_t max_candidates = 1u << 20;
};

int run_diag(const DiagOptions& opt) {
  using namespace gaplab::diag;
  Json config{{"stage", opt.stage_path},
              {"variant", opt.variant},
              {"max_candidates", opt.max_candidates}};
  auto fixture = gaplab::io::stage_fixture_from_json(
      Json::parse(gaplab::io::read_text_file(opt.stage_path)));
  auto ctx = make_stage_context(fixture.n_machine, fixture.m_machine, fixture.n_j,
                                fixture.b_prev, fixture.r);
  const bool gap_variant = opt.variant == "gap";
  if (!gap_variant && opt.variant != "acc")
    throw gaplab::ParseError("variant must be gap or acc");

  Json results{{"n_j", ctx.n_j}, {"val", ctx.val.str()}, {"t", ctx.t}};
  results["conditions"] = gaplab::io::stage_conditions_to_json(
      gap_variant ? gap_stage_conditions(ctx) : acc_stage_conditions(ctx), gap_variant);

  auto found = gap_variant ? gap_stage_search(ctx, opt.max_candidates)
                           : acc_stage_search(ctx, opt.max_candidates);
  results["found"] = found.has_value();
  if (found) {
    results["c"] = *found;
    results["confirmed"] =
        gap_variant ? confirm_gap_stage(ctx, *found) : confirm_acc_stage(ctx, *found);
    std::cout << "C = {";
    bool first = true;
    for (const auto& w : *found) {
      std::cout << (first ? "" : ", ") << w;
      first = false;
    }
    std::cout << "}\n";
  } else {
    results["c"] = nullptr;
    std::cout << "None\n";
  }
  int rc = write_report("diag", config, results, opt.out_path, opt.report_dir);
  if (rc != kExitOk) return rc;
  if (!found) return kExitViolation;
  return results["confirmed"].get<bool>() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap-based counting class laboratory"};
  app.require_subcommand(1);

  CollapseOptions collapse_opt;
  auto* collapse = app.add_subcommand(
      "collapse", "compile indexed target lists down to single-target witnesses");
  collapse->add_option("--program", collapse_opt.program_path, "gap program DSL file");
  collapse->add_option("--spec", collapse_opt.spec_path, "target spec DSL file");
  collapse->add_option("--language", collapse_opt.language_path,
                       "JSON array of accepted inputs (default: derived)");
  collapse->add_option("--variant", collapse_opt.variant, "lwpp | wpp | two-sided | ceqp");
  collapse->add_option("--random", collapse_opt.random_fixtures,
                       "verify N randomized fixtures instead of files");
  collapse->add_option("--seed", collapse_opt.seed, "fixture generator seed");
  collapse->add_option("--max-len", collapse_opt.max_len, "domain length bound L");
  collapse->add_option("--r-exp", collapse_opt.r_exp, "multiplicity exponent c in n^c+c");
  collapse->add_option("--out", collapse_opt.out_path, "report file (default: hashed)");
  collapse->add_option("--report-dir", collapse_opt.report_dir, "report directory");

  ReconstructOptions recon_opt;
  auto* recon = app.add_subcommand("reconstruct",
                                   "deck legitimacy, preimage counts and sweeps");
  recon->add_option("--n-max", recon_opt.n_max, "sweep bound (<= 8)");
  recon->add_option("--q-poly", recon_opt.q_poly, "comma coefficients, e.g. 1 or 0,1");
  auto* deck_opt =
      recon->add_option("--deck", recon_opt.deck_path, "JSON deck file to analyze");
  recon->add_option("--class-k", recon_opt.class_k,
                    "restrict cards to minimum degree <= k");
  recon->add_option("--out", recon_opt.out_path, "report file");
  recon->add_option("--report-dir", recon_opt.report_dir, "report directory");

  EncodeOptions encode_opt;
  auto* encode = app.add_subcommand("encode",
                                    "multilinear encodings of oracle machines");
  encode->add_option("--machine", encode_opt.machine_path, "machine JSON file");
  encode->add_option("--input", encode_opt.input, "input string (default empty)");
  encode->add_option("--max-universe", encode_opt.max_universe,
                     "brute-force bound on universe size");
  encode->add_option("--random", encode_opt.random_fixtures,
                     "verify N random machines instead of a file");
  encode->add_option("--seed", encode_opt.seed, "fixture generator seed");
  encode->add_option("--out", encode_opt.out_path, "report file");
  encode->add_option("--report-dir", encode_opt.report_dir, "report directory");

  DiagOptions diag_opt;
  auto* diag = app.add_subcommand("diag", "oracle-construction stage searches");
  diag->add_option("--stage", diag_opt.stage_path, "stage fixture JSON file")
      ->required();
  diag->add_option("--variant", diag_opt.variant, "gap | acc");
  diag->add_option("--max-candidates", diag_opt.max_candidates,
                   "candidate evaluation budget");
  diag->add_option("--out", diag_opt.out_path, "report file");
  diag->add_option("--report-dir", diag_opt.report_dir, "report directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (collapse->parsed()) {
      if (collapse_opt.random_fixtures > 0) return run_collapse_random(collapse_opt);
      if (collapse_opt.program_path.empty() || collapse_opt.spec_path.empty()) {
        std::cerr << "collapse needs --program and --spec (or --random N)\n";
        return kExitUsage;
      }
      return run_collapse_files(collapse_opt);
    }
    if (recon->parsed()) {
      recon_opt.has_deck = deck_opt->count() > 0;
      return run_reconstruct(recon_opt);
    }
    if (encode->parsed()) {
      if (encode_opt.random_fixtures == 0 && encode_opt.machine_path.empty()) {
        std::cerr << "encode needs --machine (or --random N)\n";
        return kExitUsage;
      }
      return run_encode(encode_opt);
    }
    if (diag->parsed()) return run_diag(diag_opt);
  } catch (const gaplab::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gaplab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gaplab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
