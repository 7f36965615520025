#include "brickwords/json_io.hpp"

#include "brickwords/error.hpp"
#include "brickwords/spec_parser.hpp"

namespace brickwords {
namespace {

[[noreturn]] void bad_bundle(const std::string& msg) { throw ParseError(msg, 1, 1); }

Word word_field(const Json& j, const Alphabet& a, const std::string& what) {
  if (!j.is_string()) bad_bundle(what + " must be a string");
  try {
    return a.parse(j.get<std::string>());
  } catch (const DomainError& e) {
    bad_bundle(what + ": " + e.what());
  }
}

std::vector<Word> map_field(const Json& j, const Alphabet& index, const Alphabet& letters, const std::string& what) {
  if (!j.is_object()) bad_bundle(what + " must be an object");
  std::vector<Word> out(index.size());
  std::vector<bool> given(index.size(), false);
  for (const auto& [k, v] : j.items()) {
    auto x = index.find(k);
    if (!x) bad_bundle(what + ": unknown index letter '" + k + "'");
    if (!v.is_string()) bad_bundle(what + "(" + k + ") must be a string");
    out[*x] = v.get<std::string>().empty() ? Word{} : word_field(v, letters, what + "(" + k + ")");
    given[*x] = true;
  }
  for (Letter x = 0; x < index.size(); ++x)
    if (!given[x]) bad_bundle(what + " has no value for '" + index.token(x) + "'");
  return out;
}

}  // namespace

Json brick_json(const Brick& b, const Alphabet& letters) {
  return Json{{"row0", letters.format(b.row0)}, {"row1", letters.format(b.row1)}, {"offset", b.offset}};
}

Json bricks_json(const std::vector<Brick>& bricks, const Alphabet& letters) {
  Json out = Json::array();
  for (const Brick& b : bricks) out.push_back(brick_json(b, letters));
  return out;
}

Json morphism_json(const Morphism& m) {
  Json out = Json::object();
  for (Letter x = 0; x < m.source().size(); ++x) out[m.source().token(x)] = m.target().format(m.image(x));
  return out;
}

Json coding_json(const SimultaneousCoding& c, bool with_word) {
  const Alphabet& a = c.phi0.source();
  Json out{{"order", c.order},
           {"length", c.index_word.size()},
           {"size", c.bricks.size()},
           {"min_offset", c.min_offset},
           {"max_offset", c.max_offset},
           {"last_discovery", c.last_discovery},
           {"bricks", bricks_json(c.bricks, a)}};
  if (with_word) {
    Json word = Json::array();
    for (Letter x : c.index_word) word.push_back(x);
    out["word"] = std::move(word);
  }
  return out;
}

Json inference_json(const InferenceResult& r) {
  Json out{{"status", to_string(r.status)}, {"nodes", r.nodes}, {"length_cap_reached", r.length_cap_reached}};
  if (r.candidate) {
    const CandidateSubstitution& c = *r.candidate;
    out["mu"] = morphism_json(c.mu);
    out["seed"] = c.mu.source().token(c.seed);
    out["horizon"] = c.horizon;
    out["decoded"] = c.decoded;
  } else {
    out["mu"] = nullptr;
  }
  out["warnings"] = r.warnings;
  return out;
}

Json correction_maps_json(const CorrectionMaps& maps, const Alphabet& index, const Alphabet& letters) {
  Json out = Json::object();
  for (int i = 0; i < 2; ++i) {
    Json m = Json::object();
    for (Letter x = 0; x < index.size(); ++x) m[index.token(x)] = letters.format(maps.s(i, x));
    out["s" + std::to_string(i)] = std::move(m);
  }
  return out;
}

Json verdict_json(const Verdict& v) {
  Json failures = Json::array();
  for (const CheckFailure& f : v.failures)
    failures.push_back(
        {{"check", f.check}, {"context", f.context}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"diagram", f.diagram}});
  return Json{{"verified", v.passed}, {"instances", v.instances}, {"failures", std::move(failures)}};
}

Json certificate_json(const DominanceCertificate& c, const Alphabet& letters) {
  Json out{{"letter", letters.token(c.letter)},
           {"dominating_row", c.dominating_row},
           {"window_back", c.windows.back},
           {"window_fwd", c.windows.fwd},
           {"checked_factors", c.checked_factors},
           {"occurrence_classes", c.occurrence_classes},
           {"verdict", to_string(c.verdict)}};
  out["initial_unpaired"] = c.initial_unpaired ? Json(*c.initial_unpaired) : Json(nullptr);
  if (c.verdict != CertificateVerdict::pass) {
    out["failure"] = c.failure;
    out["diagram"] = c.failure_diagram;
  }
  return out;
}

Json scan_json(const PrefixCountScan& s, Letter letter, int dominating_row, const Alphabet& letters) {
  return Json{{"letter", letters.token(letter)},
              {"dominating_row", dominating_row},
              {"length", s.length},
              {"min_diff", s.min_diff},
              {"argmin", s.argmin},
              {"all_positive", s.all_positive}};
}

Json initial_pair_json(const InitialPairSearch& s) {
  Json out{{"bound", s.bound}};
  out["length"] = s.length ? Json(*s.length) : Json(nullptr);
  out["warnings"] = s.warnings;
  return out;
}

Json algorithm_json(const AlgorithmOutcome& o, const Alphabet& letters) {
  Json pairs = Json::array();
  for (const BalancedPair& p : o.minimal_pairs) pairs.push_back(Json::array({letters.format(p.u), letters.format(p.v)}));
  Json out{{"status", to_string(o.status)}};
  out["initial_length"] = o.initial_length ? Json(*o.initial_length) : Json(nullptr);
  out["iterations"] = o.iterations;
  out["size"] = o.minimal_pairs.size();
  out["pairs"] = std::move(pairs);
  return out;
}

Json config_json(const RunConfig& c) {
  const Alphabet& a = c.phi0.source();
  Json out{{"phi0", c.phi0.to_spec()},
           {"phi1", c.phi1.to_spec()},
           {"seeds", Json::array({a.token(c.seed0), a.token(c.seed1)})},
           {"power", c.power},
           {"order", c.order},
           {"length", c.length},
           {"offset_bound", c.offset_bound},
           {"max_image_len", c.inference.max_image_len},
           {"horizon", c.inference.horizon},
           {"node_budget", c.inference.node_budget},
           {"scan", c.scan},
           {"bound", c.bound},
           {"max_pairs", c.max_pairs},
           {"max_iterations", c.max_iterations},
           {"equal_incidence", c.equal_incidence()}};
  out["derived"] = c.derived ? Json(*c.derived) : Json(nullptr);
  return out;
}

VerifyBundle parse_verify_bundle(const Json& j, const Alphabet& letters) {
  if (!j.is_object()) bad_bundle("bundle must be a JSON object");
  if (!j.contains("pi") || !j["pi"].is_array() || j["pi"].empty()) bad_bundle("bundle needs a nonempty 'pi' array");
  if (!j.contains("mu")) bad_bundle("bundle needs 'mu'");
  VerifyBundle b;
  for (const Json& e : j["pi"]) {
    if (!e.is_object() || !e.contains("row0") || !e.contains("row1") || !e.contains("offset") ||
        !e["offset"].is_number_integer())
      bad_bundle("each brick needs row0, row1 and an integer offset");
    Brick brick{word_field(e["row0"], letters, "row0"), word_field(e["row1"], letters, "row1"),
                e["offset"].get<std::int64_t>()};
    if (brick.row0.empty() || brick.row0.size() != brick.row1.size())
      bad_bundle("brick rows must be nonempty and of equal length");
    b.pi.push_back(std::move(brick));
  }
  const Alphabet index = Alphabet::indices(b.pi.size());
  std::vector<Word> images;
  const Json& mu = j["mu"];
  if (mu.is_string()) {
    Morphism parsed = parse_morphism(mu.get<std::string>());
    images.assign(index.size(), Word{});
    if (parsed.source().size() != index.size()) bad_bundle("mu needs one rule per brick");
    std::vector<Letter> to_index(parsed.source().size());
    for (Letter x = 0; x < parsed.source().size(); ++x) {
      auto i = index.find(parsed.source().token(x));
      if (!i) bad_bundle("mu: unknown index letter '" + parsed.source().token(x) + "'");
      to_index[x] = *i;
    }
    for (Letter x = 0; x < parsed.source().size(); ++x)
      for (Letter y : parsed.image(x)) images[to_index[x]].push_back(to_index[y]);
  } else {
    images = map_field(mu, index, index, "mu");
    for (Letter x = 0; x < index.size(); ++x)
      if (images[x].empty()) bad_bundle("mu(" + index.token(x) + ") is empty");
  }
  b.mu = Morphism::endo(index, std::move(images));
  if (j.contains("s0")) b.s0 = map_field(j["s0"], index, letters, "s0");
  if (j.contains("s1")) b.s1 = map_field(j["s1"], index, letters, "s1");
  if (j.contains("seed")) {
    const Json& s = j["seed"];
    std::optional<Letter> seed;
    if (s.is_string()) seed = index.find(s.get<std::string>());
    if (s.is_number_unsigned() && s.get<std::size_t>() < index.size()) seed = s.get<Letter>();
    if (!seed) bad_bundle("seed must name an index letter");
    b.seed = seed;
  }
  return b;
}

}  // namespace brickwords
