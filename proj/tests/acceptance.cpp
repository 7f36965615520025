// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "brickwords/balance.hpp"
#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace brickwords;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const Morphism& m, const Word& w) { return m.target().format(w); }

Outcome criterion1() {
  const auto p = fixtures::main_pair();
  const Morphism mu = fixtures::index_morphism(fixtures::kMainMu, 9);
  const std::string u0 = fmt(p.phi0, fixed_point_prefix(p.phi0, 0, 34));
  const std::string u1 = fmt(p.phi1, fixed_point_prefix(p.phi1, 2, 34));
  const std::string w = fmt(mu, fixed_point_prefix(mu, 0, 42));
  const bool ok = u0 == "abcaacabcabcacabcaacabcaacabcacabc" && u1 == "cacbacaacbacacbacbacaacbacacbacaac" &&
                  w == "012345412312623123454123454784541234541231";
  return {ok, "u0=" + u0 + " u1=" + u1 + " w=" + w};
}

Outcome criterion2() {
  const SimultaneousCoding c = fixtures::coding(fixtures::main_pair());
  std::string list;
  for (const Brick& b : c.bricks) list += format_brick(b, c.phi0.source());
  const bool ok = list == "(a,c,0)(b,a,-1)(c,c,1)(a,b,1)(a,a,-1)(c,c,-1)(a,a,1)(b,c,-1)(c,b,0)";
  return {ok, std::to_string(c.bricks.size()) + " bricks " + list};
}

Outcome criterion3() {
  const InferenceResult main = infer_fixing_substitution(fixtures::coding(fixtures::main_pair()), {4, 1000, 10'000'000});
  const InferenceResult ex1 = infer_fixing_substitution(fixtures::coding(fixtures::binary_pair()), {4, 500, 10'000'000});
  const InferenceResult ex2 = infer_fixing_substitution(fixtures::coding(fixtures::ternary_pair()), {8, 5000, 10'000'000});
  const auto matches = [](const InferenceResult& r, const Morphism& expected) {
    return r.status == InferenceStatus::found && r.candidate->mu == expected;
  };
  const bool a = matches(main, fixtures::index_morphism(fixtures::kMainMu, 9));
  const bool b = matches(ex1, fixtures::index_morphism("0->01;1->201;2->202", 3));
  const bool c = matches(ex2, fixtures::index_morphism("0->0.1.2.3;1->0;2->4.0.5.6.7.8;3->0.4;4->0.9.10;5->0.4.0.11.0.4;"
                                                       "6->0;7->0.4.0.11;8->0.4;9->0;10->1.2.7.6.2.3;11->0.4",
                                                       12));
  return {a && b && c, std::string("main=") + (a ? "ok" : "mismatch") + " binary_pair=" + (b ? "ok" : "mismatch") +
                           " ternary_pair=" + (c ? "ok" : "mismatch")};
}

Outcome criterion4() {
  const Morphism mu = fixtures::index_morphism(fixtures::kMainMu, 9);
  std::set<std::string> got;
  for (const Word& f : factor_closure(mu, 0, 2).factors) got.insert(mu.source().format(f));
  const std::set<std::string> expected{"01", "66", "12", "31", "23", "34", "26", "45", "62", "47", "84", "78", "54", "41"};
  return {got == expected, std::to_string(got.size()) + " factors"};
}

Outcome criterion5() {
  const CertifiedSystem sys = fixtures::certified(fixtures::main_pair());
  const Alphabet& a = sys.coding.phi0.source();
  std::string s0;
  std::string s1;
  for (Letter x = 0; x < 9; ++x) {
    s0 += (x ? "," : "") + a.format(sys.maps->s(0, x));
    s1 += (x ? "," : "") + a.format(sys.maps->s(1, x));
  }
  const bool maps_ok = s0 == "c,,,c,c,c,,a,c" && s1 == ",a,a,,,,a,a,";
  const bool checks_ok = sys.projection.passed && sys.projection.instances == 28 && sys.joins.passed &&
                         sys.joins.instances == 14;

  CorrectionMaps bad = *sys.maps;
  bad.maps[0][7] = {};
  const Verdict v1 = verify_projection(sys.candidate, sys.coding, bad, sys.l2);
  const bool m1 = !v1.passed && !v1.failures.empty() && v1.failures[0].context.find('7') != std::string::npos;

  CandidateSubstitution cand;
  cand.mu = fixtures::index_morphism("0->01;1->23;2->45;3->41;4->231;5->26;6->478;7->3;8->66", 9);
  const CertifiedSystem mutated = certify_system(sys.coding, cand);
  const bool m2 = !mutated.verified() && !mutated.projection.failures.empty() &&
                  mutated.projection.failures[0].context.find('7') != std::string::npos;
  return {maps_ok && checks_ok && m1 && m2,
          "s0=" + s0 + " s1=" + s1 + " projection " + std::to_string(sys.projection.instances) + " joins " +
              std::to_string(sys.joins.instances) + " mutations " + (m1 && m2 ? "located" : "not located")};
}

Outcome criterion6() {
  const auto start = std::chrono::steady_clock::now();
  const auto p = fixtures::main_pair();
  const CertifiedSystem sys = fixtures::certified(p);
  const DominanceCertificate cert = verify_letter_dominance(sys, 2, {1, 1}, 1);
  const PrefixCountScan scan = scan_prefix_counts(p.phi0, p.phi1, 0, 2, 2, 1'000'000);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = cert.verdict == CertificateVerdict::pass && scan.all_positive && scan.min_diff >= 1 && secs < 10.0;
  return {ok, "certificate " + to_string(cert.verdict) + ", min_diff " + std::to_string(scan.min_diff) + " at n=" +
                  std::to_string(scan.argmin) + ", " + std::to_string(secs) + " s"};
}

Outcome criterion7() {
  const auto ex1 = fixtures::binary_pair("a");
  const auto ex2 = fixtures::ternary_pair();
  const auto main = fixtures::main_pair();
  const auto s = fixtures::closing_pair();
  const auto n1 = find_initial_balanced_pair(ex1.phi0, ex1.phi1, 0, 0, 10'000).length;
  const auto n2 = find_initial_balanced_pair(ex2.phi0, ex2.phi1, 0, 0, 10'000).length;
  const auto n3 = find_initial_balanced_pair(main.phi0, main.phi1, 0, 2, 10'000).length;
  const AlgorithmOutcome o = balanced_pair_algorithm(s.phi0, s.phi1, s.seed0, s.seed1);
  const bool ok = n1 == std::optional<std::size_t>{1} && n2 == std::optional<std::size_t>{1} && !n3 &&
                  o.status == AlgorithmStatus::closed && o.minimal_pairs.size() == 4;
  return {ok, "binary_pair n=" + (n1 ? std::to_string(*n1) : "none") + " ternary_pair n=" + (n2 ? std::to_string(*n2) : "none") +
                  " main " + (n3 ? std::to_string(*n3) : "none up to 10000") + ", closing pair algorithm " +
                  to_string(o.status) + " with " + std::to_string(o.minimal_pairs.size()) + " minimal pairs"};
}

Outcome criterion8() {
  const SimultaneousCoding c = fixtures::coding(fixtures::family(2), 10'000, 2);
  const InferenceResult r = infer_fixing_substitution(c, {});
  const bool ok = c.bricks.size() == 21 && r.status == InferenceStatus::found && r.candidate->mu.source().size() == 21;
  return {ok, "|B|=" + std::to_string(c.bricks.size()) + " inference " + to_string(r.status)};
}

Outcome criterion9() {
  const auto np = fixtures::non_primitive();
  std::string bound;
  bool exceeded = false;
  try {
    simultaneous_coding(np.phi0, np.phi1, np.seed0, np.seed1, {100'000, 1, 64});
  } catch (const OffsetBoundExceeded& e) {
    exceeded = true;
    bound = "offset " + std::to_string(e.offset()) + " at n=" + std::to_string(e.position());
  }
  const InferenceCaps caps{8, 5000, 10'000'000};
  const InferenceResult k3 = infer_fixing_substitution(fixtures::coding(fixtures::family(3)), caps);
  const InferenceResult s2 = infer_fixing_substitution(fixtures::coding(fixtures::unfixed_pair()), caps);
  const bool ok = exceeded && k3.status == InferenceStatus::absent && s2.status == InferenceStatus::absent;
  return {ok, "non-primitive " + (exceeded ? bound : std::string("bound not exceeded")) + ", k=3 " +
                  to_string(k3.status) + ", unfixed pair " + to_string(s2.status)};
}

Outcome criterion10() {
  constexpr std::size_t kCases = 1000;
  const std::vector<properties::Result> results{
      properties::parikh_incidence(1, kCases),
      properties::offset_telescoping(7, kCases),
      properties::decomposition(4, kCases),
      properties::inference_soundness(9, kCases),
      properties::certificate_scan_agreement(11, kCases, 100'000),
  };
  bool ok = true;
  std::string detail;
  for (const properties::Result& r : results) {
    ok = ok && r.cases >= kCases && r.failures == 0 && r.applicable > 0;
    detail += (detail.empty() ? "" : "; ") + r.name + " " + std::to_string(r.cases) + " cases (" +
              std::to_string(r.applicable) + " checked) " + std::to_string(r.failures) + " failures";
    if (r.failures) detail += " first: " + r.first_failure;
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %zu: %s - %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  return failures;
}
