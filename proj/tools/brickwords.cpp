// brickwords command line tool.
//
//   brickwords {balance|code|infer|verify|certify|pipeline|render} [flags] [config-file]
//
// Exit codes: 0 pass, 1 verdict fail, 2 input error, 3 cap or bound exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "brickwords/config.hpp"
#include "brickwords/error.hpp"
#include "brickwords/json_io.hpp"
#include "brickwords/pipeline.hpp"
#include "brickwords/return_words.hpp"

namespace bw = brickwords;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kCap = 3;

struct Common {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::string json_path;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("config", c.config_path, "Config file ('-' reads stdin)");
  for (const char* key : {"seeds", "order", "length", "offset-bound", "max-image-len", "horizon", "node-budget",
                          "scan", "power", "bound", "max-pairs", "max-iterations", "derived"}) {
    const std::string k = key;
    sub->add_option_function<std::string>("--" + k, [&c, k](const std::string& v) { c.overrides.emplace_back(k, v); },
                                          "Overrides the config option '" + k + "'");
  }
  sub->add_option("--json", c.json_path, "Write the JSON report here ('-' for stdout)");
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_file(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path);
  if (!in) throw bw::DomainError("cannot read '" + path + "'");
  return read_all(in);
}

bw::RunConfig load(const Common& c) {
  if (c.config_path.empty()) throw bw::DomainError("no config file given");
  return bw::parse_run_config(read_file(c.config_path), c.overrides);
}

void emit(const bw::Json& j, const Common& c, const bw::RunConfig& cfg) {
  std::string path = c.json_path;
  if (path.empty() && cfg.json) path = *cfg.json;
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw bw::DomainError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

bw::Json header(const bw::RunConfig& cfg) {
  bw::Json j;
  j["schema"] = bw::kSchemaVersion;
  j["config"] = bw::config_json(cfg);
  return j;
}

bw::Morphism powered(const bw::Morphism& m, unsigned k) { return k == 1 ? m : bw::power(m, k); }

bw::SimultaneousCoding code(const bw::RunConfig& cfg) {
  return bw::simultaneous_coding(powered(cfg.phi0, cfg.power), powered(cfg.phi1, cfg.power), cfg.seed0, cfg.seed1,
                                 cfg.coding_options());
}

int inference_exit(bw::InferenceStatus s) {
  if (s == bw::InferenceStatus::found) return kPass;
  return s == bw::InferenceStatus::budget_exhausted ? kCap : kFail;
}

void print_mu(const bw::Morphism& mu) {
  for (bw::Letter x = 0; x < mu.source().size(); ++x)
    std::cout << "  " << mu.source().token(x) << " -> " << mu.target().format(mu.image(x)) << "\n";
}

int run_balance(const Common& c) {
  const bw::RunConfig cfg = load(c);
  bw::Json j = header(cfg);
  const bw::InitialPairSearch s =
      bw::find_initial_balanced_pair(cfg.phi0, cfg.phi1, cfg.seed0, cfg.seed1, cfg.bound, cfg.power);
  j["initial_balanced_pair"] = bw::initial_pair_json(s);
  for (const std::string& w : s.warnings) std::cerr << "warning: " << w << "\n";
  int rc = kPass;
  if (!s.length) {
    std::cout << "initial balanced pair: none up to n = " << cfg.bound << "\n";
    rc = kFail;
  } else {
    std::cout << "initial balanced pair: n = " << *s.length << "\n";
    if (cfg.equal_incidence()) {
      const bw::AlgorithmOutcome o = bw::balanced_pair_algorithm(cfg.phi0, cfg.phi1, cfg.seed0, cfg.seed1, cfg.power,
                                                                 cfg.algorithm_caps());
      j["algorithm"] = bw::algorithm_json(o, cfg.phi0.source());
      std::cout << "balanced pair algorithm: " << bw::to_string(o.status) << ", " << o.minimal_pairs.size()
                << " minimal pairs after " << o.iterations << " iterations\n";
      for (const bw::BalancedPair& p : o.minimal_pairs)
        std::cout << "  (" << cfg.phi0.source().format(p.u) << ", " << cfg.phi0.source().format(p.v) << ")\n";
      if (o.status == bw::AlgorithmStatus::cap_exceeded) rc = kCap;
    }
  }
  emit(j, c, cfg);
  return rc;
}

int run_code(const Common& c, std::optional<std::size_t> render) {
  const bw::RunConfig cfg = load(c);
  const bw::SimultaneousCoding coding = code(cfg);
  const bw::Alphabet& a = coding.phi0.source();
  std::cout << coding.bricks.size() << " bricks, offsets [" << coding.min_offset << ", " << coding.max_offset
            << "], last new brick at position " << coding.last_discovery << "\n";
  for (bw::Letter x = 0; x < coding.bricks.size(); ++x)
    std::cout << "  " << x << " " << bw::format_brick(coding.brick(x), a) << "\n";
  if (render) {
    const std::size_t n = std::min(*render, coding.index_word.size());
    const std::vector<bw::Brick> bs =
        bw::bricks_of(coding, std::span<const bw::Letter>(coding.index_word).first(n));
    std::cout << bw::render_diagram(bs, coding.phi0, coding.phi1);
  }
  bw::Json j = header(cfg);
  j["coding"] = bw::coding_json(coding, true);
  emit(j, c, cfg);
  return kPass;
}

int run_infer(const Common& c) {
  const bw::RunConfig cfg = load(c);
  const bw::SimultaneousCoding coding = code(cfg);
  bw::InferenceCaps caps = cfg.inference;
  caps.horizon = std::min(caps.horizon, coding.index_word.size());
  const bw::InferenceResult r = bw::infer_fixing_substitution(coding, caps);
  bw::Json j = header(cfg);
  j["coding"] = bw::coding_json(coding, false);
  j["inference"] = bw::inference_json(r);
  std::cout << coding.bricks.size() << " bricks; inference: " << bw::to_string(r.status) << " (" << r.nodes
            << " nodes)\n";
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (r.candidate) print_mu(r.candidate->mu);
  int rc = inference_exit(r.status);
  if (rc != kPass && cfg.derived) {
    const bw::Word factor = coding.index_alphabet.parse(*cfg.derived);
    const bw::DerivedSequence seq = bw::derived_coding(coding.index_word, factor);
    bw::InferenceCaps dcaps = cfg.inference;
    dcaps.horizon = std::min(dcaps.horizon, seq.coding.size());
    const bw::InferenceResult d = bw::infer_fixing_substitution(seq.coding, seq.alphabet, dcaps);
    bw::Json dj;
    dj["factor"] = *cfg.derived;
    bw::Json returns = bw::Json::array();
    for (const bw::Word& w : seq.return_words) returns.push_back(coding.index_alphabet.format(w));
    dj["return_words"] = std::move(returns);
    dj["inference"] = bw::inference_json(d);
    j["derived"] = std::move(dj);
    std::cout << "derived sequence (" << seq.return_words.size() << " return words to " << *cfg.derived
              << "); inference: " << bw::to_string(d.status) << "\n";
    if (d.candidate) print_mu(d.candidate->mu);
    rc = inference_exit(d.status);
  }
  emit(j, c, cfg);
  return rc;
}

void print_failures(const bw::Verdict& v) {
  for (const bw::CheckFailure& f : v.failures) {
    std::cout << "  " << f.check << " failed at " << f.context << ": " << f.lhs << " != " << f.rhs << "\n";
    if (!f.diagram.empty()) std::cout << f.diagram;
  }
}

bw::Json system_json(const bw::CertifiedSystem& sys) {
  bw::Json j;
  j["verified"] = sys.verified();
  bw::Json failures = bw::Json::array();
  for (const bw::Verdict* v : {&sys.projection, &sys.joins})
    for (const bw::Json& f : bw::verdict_json(*v)["failures"]) failures.push_back(f);
  if (!sys.first_offset_zero)
    failures.push_back({{"check", "first-offset"}, {"context", "seed brick"}, {"lhs", ""}, {"rhs", ""}, {"diagram", ""}});
  j["failures"] = std::move(failures);
  j["projection"] = bw::verdict_json(sys.projection);
  j["joins"] = bw::verdict_json(sys.joins);
  j["first_offset_zero"] = sys.first_offset_zero;
  if (sys.maps)
    j["correction_maps"] =
        bw::correction_maps_json(*sys.maps, sys.coding.index_alphabet, sys.coding.phi0.source());
  return j;
}

void print_system(const bw::CertifiedSystem& sys) {
  std::cout << "projection: " << (sys.projection.passed ? "pass" : "fail") << " (" << sys.projection.instances
            << " instances)\n";
  print_failures(sys.projection);
  std::cout << "joins: " << (sys.joins.passed ? "pass" : "fail") << " (" << sys.joins.instances << " pairs)\n";
  print_failures(sys.joins);
  if (!sys.first_offset_zero) std::cout << "first brick offset is not 0\n";
  std::cout << "verified: " << (sys.verified() ? "yes" : "no") << "\n";
}

int run_verify(const Common& c, const std::string& bundle_path) {
  const bw::RunConfig cfg = load(c);
  if (bundle_path.empty()) throw bw::DomainError("verify needs --bundle FILE");
  bw::Json bundle;
  try {
    bundle = bw::Json::parse(read_file(bundle_path));
  } catch (const bw::Json::parse_error& e) {
    throw bw::ParseError(std::string("bundle is not valid JSON: ") + e.what(), 1, 1);
  }
  const bw::CertifiedSystem sys = bw::certify_bundle(cfg, bw::parse_verify_bundle(bundle, cfg.phi0.source()));
  print_system(sys);
  bw::Json j = header(cfg);
  j.update(system_json(sys));
  emit(j, c, cfg);
  return sys.verified() ? kPass : kFail;
}

int run_certify(const Common& c, const std::string& letter, const std::vector<std::size_t>& windows,
                std::optional<int> row) {
  const bw::RunConfig cfg = load(c);
  const bw::Alphabet& a = cfg.phi0.source();
  if (!windows.empty() && windows.size() != 2) throw bw::DomainError("--windows takes 'back,fwd'");
  if (row && *row != 0 && *row != 1) throw bw::DomainError("--row must be 0 or 1");
  const bw::SimultaneousCoding coding = code(cfg);
  bw::InferenceCaps caps = cfg.inference;
  caps.horizon = std::min(caps.horizon, coding.index_word.size());
  const bw::InferenceResult r = bw::infer_fixing_substitution(coding, caps);
  bw::Json j = header(cfg);
  j["inference"] = bw::inference_json(r);
  if (!r.candidate || r.status != bw::InferenceStatus::found) {
    std::cout << "inference: " << bw::to_string(r.status) << "; nothing to certify\n";
    emit(j, c, cfg);
    return inference_exit(r.status);
  }
  const bw::CertifiedSystem sys = bw::certify_system(coding, *r.candidate);
  print_system(sys);
  j["system"] = system_json(sys);
  if (!sys.verified()) {
    emit(j, c, cfg);
    return kFail;
  }

  std::vector<bw::Letter> letters;
  if (!letter.empty()) {
    letters.push_back(a.at(letter));
  } else {
    for (bw::Letter x = 0; x < a.size(); ++x) letters.push_back(x);
  }
  std::vector<int> rows = row ? std::vector<int>{*row} : std::vector<int>{0, 1};
  bw::Json certs = bw::Json::array();
  bw::Json scans = bw::Json::array();
  bool any = false;
  for (bw::Letter x : letters) {
    for (int d : rows) {
      const bw::DominanceCertificate cert =
          windows.empty() ? bw::search_certificate(sys, x, d)
                          : bw::verify_letter_dominance(sys, x, {windows[0], windows[1]}, d);
      certs.push_back(bw::certificate_json(cert, a));
      std::cout << "letter " << a.token(x) << ", row " << d << " dominating, windows (" << cert.windows.back << ","
                << cert.windows.fwd << "): " << bw::to_string(cert.verdict);
      if (cert.verdict == bw::CertificateVerdict::pass) {
        any = true;
        const bw::PrefixCountScan s = bw::scan_for(cfg, x, d, cfg.scan);
        scans.push_back(bw::scan_json(s, x, d, a));
        std::cout << " (" << cert.checked_factors << "-factors); scan to " << s.length << ": min "
                  << s.min_diff << " at n = " << s.argmin << "\n";
      } else {
        std::cout << ": " << cert.failure << "\n" << cert.failure_diagram;
      }
    }
  }
  if (!any) std::cout << "no certificate found\n";
  j["certificates"] = std::move(certs);
  j["scans"] = std::move(scans);
  emit(j, c, cfg);
  return any ? kPass : kFail;
}

int run_pipeline(const Common& c) {
  const bw::RunConfig cfg = load(c);
  const bw::PipelineReport r = bw::run_pipeline(cfg);
  std::cout << r.summary();
  emit(r.json, c, cfg);
  return r.exit_code;
}

int run_render(const Common& c, const std::string& word, bool table) {
  const bw::RunConfig cfg = load(c);
  const bw::SimultaneousCoding coding = code(cfg);
  if (word.empty() || table) {
    for (bw::Letter x = 0; x < coding.bricks.size(); ++x) {
      std::cout << x << " " << bw::format_brick(coding.brick(x), coding.phi0.source()) << "\n";
      std::cout << bw::render_diagram(std::span<const bw::Brick>(&coding.brick(x), 1), coding.phi0, coding.phi1);
    }
    if (word.empty()) return kPass;
  }
  const std::vector<bw::Brick> bs = bw::bricks_of(coding, coding.index_alphabet.parse(word));
  try {
    std::cout << bw::render_diagram(bs, coding.phi0, coding.phi1);
  } catch (const bw::DomainError& e) {
    std::cerr << e.what() << "\n";
    std::cout << bw::render_separately(bs, coding.phi0, coding.phi1);
    return kFail;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous brick codings of two substitution fixed points"};
  app.require_subcommand(1);
  Common common;

  auto* balance = app.add_subcommand("balance", "Initial balanced pair and the balanced pair algorithm");
  add_common(balance, common);

  auto* code_cmd = app.add_subcommand("code", "Simultaneous coding by bricks");
  add_common(code_cmd, common);
  std::optional<std::size_t> render;
  code_cmd->add_option("--render", render, "Draw the first N bricks")->expected(0, 1)->default_str("16");

  auto* infer = app.add_subcommand("infer", "Search for a substitution fixing the index word");
  add_common(infer, common);

  auto* verify = app.add_subcommand("verify", "Check a {mu, pi, s0?, s1?} bundle");
  add_common(verify, common);
  std::string bundle;
  verify->add_option("--bundle", bundle, "JSON bundle")->required();

  auto* certify = app.add_subcommand("certify", "Dominance certificates");
  add_common(certify, common);
  std::string letter;
  std::vector<std::size_t> windows;
  std::optional<int> row;
  certify->add_option("--letter", letter, "Letter to certify (default: all)");
  certify->add_option("--windows", windows, "back,fwd")->delimiter(',')->expected(2);
  certify->add_option("--row", row, "Dominating row (default: both)");

  auto* pipeline = app.add_subcommand("pipeline", "code -> infer -> verify -> certify -> scan");
  add_common(pipeline, common);

  auto* render_cmd = app.add_subcommand("render", "Brick diagrams");
  add_common(render_cmd, common);
  std::string word;
  bool table = false;
  render_cmd->add_option("--word", word, "Index word to draw, e.g. 0.1.2");
  render_cmd->add_flag("--table", table, "Draw every brick");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }

  try {
    if (*balance) return run_balance(common);
    if (*code_cmd) {
      if (code_cmd->count("--render") > 0 && !render) render = 16;
      return run_code(common, render);
    }
    if (*infer) return run_infer(common);
    if (*verify) return run_verify(common, bundle);
    if (*certify) return run_certify(common, letter, windows, row);
    if (*pipeline) return run_pipeline(common);
    if (*render_cmd) return run_render(common, word, table);
  } catch (const bw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool cap = e.kind() == bw::ErrorKind::offset_bound || e.kind() == bw::ErrorKind::cap_exceeded;
    return cap ? kCap : kInput;
  }
  return kInput;
}
