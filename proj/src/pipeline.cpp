#include "brickwords/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"
#include "brickwords/return_words.hpp"

namespace brickwords {
namespace {

Morphism powered(const Morphism& m, unsigned k) { return k == 1 ? m : power(m, k); }

std::vector<DominanceWindows> window_order(std::int64_t max_abs_offset) {
  const auto top = static_cast<std::size_t>(std::max<std::int64_t>(1, max_abs_offset));
  std::vector<DominanceWindows> out{{1, 1}};
  for (std::size_t fwd = 0; fwd <= top; ++fwd)
    for (std::size_t back = 0; back <= fwd; ++back)
      if (!(back == 1 && fwd == 1)) out.push_back({back, fwd});
  return out;
}

}  // namespace

std::string to_string(StageVerdict v) {
  switch (v) {
    case StageVerdict::pass:
      return "pass";
    case StageVerdict::fail:
      return "fail";
    case StageVerdict::cap_exceeded:
      return "cap-exceeded";
    case StageVerdict::skipped:
      return "skipped";
  }
  return "fail";
}

int exit_code(const std::vector<std::pair<std::string, StageVerdict>>& stages) {
  bool failed = false;
  for (const auto& [name, v] : stages) {
    if (v == StageVerdict::cap_exceeded) return 3;
    if (v != StageVerdict::pass) failed = true;
  }
  return failed ? 1 : 0;
}

DominanceCertificate search_certificate(const CertifiedSystem& system, Letter letter, int dominating_row) {
  std::optional<DominanceCertificate> first;
  for (const DominanceWindows& w : window_order(system.coding.max_abs_offset())) {
    DominanceCertificate c = verify_letter_dominance(system, letter, w, dominating_row);
    if (c.verdict == CertificateVerdict::pass) return c;
    if (!first) first = std::move(c);
  }
  return *first;
}

std::vector<DominanceCertificate> search_certificates(const CertifiedSystem& system) {
  std::vector<DominanceCertificate> out;
  for (Letter x = 0; x < system.coding.phi0.source().size(); ++x)
    for (int row = 0; row < 2; ++row) out.push_back(search_certificate(system, x, row));
  return out;
}

PrefixCountScan scan_for(const RunConfig& c, Letter letter, int dominating_row, std::size_t length) {
  if (dominating_row == 1) return scan_prefix_counts(c.phi0, c.phi1, c.seed0, c.seed1, letter, length, c.power);
  return scan_prefix_counts(c.phi1, c.phi0, c.seed1, c.seed0, letter, length, c.power);
}

CertifiedSystem certify_bundle(const RunConfig& config, const VerifyBundle& bundle) {
  SimultaneousCoding coding;
  coding.phi0 = powered(config.phi0, config.power);
  coding.phi1 = powered(config.phi1, config.power);
  coding.seed0 = config.seed0;
  coding.seed1 = config.seed1;
  coding.order = bundle.pi.front().order();
  for (const Brick& b : bundle.pi)
    if (b.order() != coding.order) throw DomainError("bundle bricks have different orders");
  coding.bricks = bundle.pi;
  coding.index_alphabet = Alphabet::indices(bundle.pi.size());
  for (const Brick& b : bundle.pi) {
    coding.min_offset = std::min(coding.min_offset, b.offset);
    coding.max_offset = std::max(coding.max_offset, b.offset);
  }

  CandidateSubstitution cand;
  cand.mu = bundle.mu;
  cand.seed = bundle.seed.value_or(0);
  if (!is_prolongable(cand.mu, cand.seed))
    throw DomainError("mu(" + cand.mu.source().token(cand.seed) + ") must start with the seed and have length >= 2");
  coding.index_word = fixed_point_prefix(cand.mu, cand.seed, 64);

  std::optional<CorrectionMaps> maps;
  if (bundle.s0 && bundle.s1) {
    maps = CorrectionMaps{{*bundle.s0, *bundle.s1}};
  } else if (bundle.s0 || bundle.s1) {
    try {
      maps = derive_correction_maps(cand, coding);
      if (bundle.s0) maps->maps[0] = *bundle.s0;
      if (bundle.s1) maps->maps[1] = *bundle.s1;
    } catch (const RefutationError&) {
      maps.reset();
    }
  }
  return certify_system(std::move(coding), std::move(cand), std::move(maps));
}

std::string PipelineReport::summary() const {
  std::ostringstream out;
  for (const auto& [name, v] : stages) out << name << ": " << to_string(v) << "\n";
  out << "exit: " << exit_code << "\n";
  return out.str();
}

PipelineReport run_pipeline(const RunConfig& config) {
  PipelineReport r;
  Json& j = r.json;
  j["schema"] = kSchemaVersion;
  j["config"] = config_json(config);
  const Alphabet& letters = config.phi0.source();
  auto stage = [&](const std::string& name, StageVerdict v) { r.stages.emplace_back(name, v); };
  auto finish = [&]() {
    static const std::vector<std::string> order{"coding", "inference", "derived", "projection",
                                                "joins",  "certificate", "scan"};
    for (const std::string& name : order) {
      if (name == "derived" && !config.derived) continue;
      const bool present = std::any_of(r.stages.begin(), r.stages.end(), [&](const auto& s) { return s.first == name; });
      if (!present) stage(name, StageVerdict::skipped);
    }
    Json stages = Json::object();
    for (const auto& [name, v] : r.stages) stages[name] = to_string(v);
    j["stages"] = std::move(stages);
    r.exit_code = exit_code(r.stages);
    j["exit_code"] = r.exit_code;
    return r;
  };

  j["initial_balanced_pair"] =
      initial_pair_json(find_initial_balanced_pair(config.phi0, config.phi1, config.seed0, config.seed1, config.bound,
                                                   config.power));

  SimultaneousCoding coding;
  try {
    coding = simultaneous_coding(powered(config.phi0, config.power), powered(config.phi1, config.power),
                                 config.seed0, config.seed1, config.coding_options());
  } catch (const OffsetBoundExceeded& e) {
    j["coding"] = Json{{"error", e.what()}, {"position", e.position()}, {"offset", e.offset()}};
    stage("coding", StageVerdict::cap_exceeded);
    return finish();
  }
  j["coding"] = coding_json(coding, false);
  stage("coding", StageVerdict::pass);

  InferenceCaps caps = config.inference;
  caps.horizon = std::min(caps.horizon, coding.index_word.size());
  const InferenceResult inf = infer_fixing_substitution(coding, caps);
  j["inference"] = inference_json(inf);
  stage("inference", inf.status == InferenceStatus::found              ? StageVerdict::pass
                     : inf.status == InferenceStatus::budget_exhausted ? StageVerdict::cap_exceeded
                                                                        : StageVerdict::fail);

  if (config.derived) {
    Json d;
    try {
      const Word factor = coding.index_alphabet.parse(*config.derived);
      const DerivedSequence seq = derived_coding(coding.index_word, factor);
      Json returns = Json::array();
      for (const Word& rw : seq.return_words) returns.push_back(coding.index_alphabet.format(rw));
      d["factor"] = *config.derived;
      d["return_words"] = std::move(returns);
      InferenceCaps dcaps = config.inference;
      dcaps.horizon = std::min(dcaps.horizon, seq.coding.size());
      const InferenceResult dinf = infer_fixing_substitution(seq.coding, seq.alphabet, dcaps);
      d["inference"] = inference_json(dinf);
      stage("derived", dinf.status == InferenceStatus::found              ? StageVerdict::pass
                       : dinf.status == InferenceStatus::budget_exhausted ? StageVerdict::cap_exceeded
                                                                           : StageVerdict::fail);
    } catch (const DomainError& e) {
      d["error"] = e.what();
      stage("derived", StageVerdict::fail);
    }
    j["derived"] = std::move(d);
  }
  if (!inf.candidate || inf.status != InferenceStatus::found) return finish();

  const CertifiedSystem sys = certify_system(coding, *inf.candidate);
  if (sys.maps) j["correction_maps"] = correction_maps_json(*sys.maps, coding.index_alphabet, letters);
  Json l2 = Json::array();
  for (const Word& f : sys.l2.factors) l2.push_back(coding.index_alphabet.format(f));
  j["l2"] = std::move(l2);
  j["first_offset_zero"] = sys.first_offset_zero;
  j["projection"] = verdict_json(sys.projection);
  j["joins"] = verdict_json(sys.joins);
  stage("projection", sys.projection.passed && sys.first_offset_zero ? StageVerdict::pass : StageVerdict::fail);
  stage("joins", sys.joins.passed ? StageVerdict::pass : StageVerdict::fail);
  if (!sys.verified()) return finish();

  const std::vector<DominanceCertificate> certs = search_certificates(sys);
  Json cj = Json::array();
  bool any = false;
  for (const DominanceCertificate& c : certs) {
    cj.push_back(certificate_json(c, letters));
    any = any || c.verdict == CertificateVerdict::pass;
  }
  j["certificates"] = std::move(cj);
  if (!any) j["certificate_note"] = "no certificate found";
  stage("certificate", any ? StageVerdict::pass : StageVerdict::fail);
  if (!any) return finish();

  Json sj = Json::array();
  bool scans_ok = true;
  for (const DominanceCertificate& c : certs) {
    if (c.verdict != CertificateVerdict::pass) continue;
    const PrefixCountScan s = scan_for(config, c.letter, c.dominating_row, config.scan);
    sj.push_back(scan_json(s, c.letter, c.dominating_row, letters));
    scans_ok = scans_ok && s.all_positive;
  }
  j["scans"] = std::move(sj);
  stage("scan", scans_ok ? StageVerdict::pass : StageVerdict::fail);
  return finish();
}

}  // namespace brickwords
