#pragma once

#include <string>

#include "brickwords/config.hpp"
#include "brickwords/pipeline.hpp"
#include "brickwords/spec_parser.hpp"

namespace fixtures {

using namespace brickwords;

struct Pair {
  Morphism phi0;
  Morphism phi1;
  Letter seed0;
  Letter seed1;
};

inline Pair pair(const std::string& s0, const std::string& s1, const std::string& x0, const std::string& x1) {
  Morphism p0 = parse_morphism(s0);
  Morphism p1 = parse_morphism(s1);
  const Letter a = p0.source().at(x0);
  const Letter b = p1.source().at(x1);
  return {std::move(p0), std::move(p1), a, b};
}

inline const std::string kPhi0 = "a->abc;b->a;c->ac";
inline const std::string kPhi1 = "a->cba;b->a;c->ca";
inline const std::string kMainConfig = kPhi0 + " | " + kPhi1 + " seeds=a,c";

inline Pair main_pair() { return pair(kPhi0, kPhi1, "a", "c"); }

// Seeds (a,b) give the three-brick coding; (a,a) is the trivial initial pair.
inline Pair binary_pair(const std::string& seed1 = "b") { return pair("a->aab;b->ab", "a->aba;b->ba", "a", seed1); }

inline Pair ternary_pair() { return pair("a->abac;b->aba;c->ab", "a->acab;b->aab;c->ab", "a", "a"); }
inline std::string ternary_config() {
  return "a->abac;b->aba;c->ab | a->acab;b->aab;c->ab seeds=a,a max-image-len=8 horizon=5000";
}

inline std::string family_spec0(int k) { return "a->a^" + std::to_string(k) + "bc;b->a;c->ac"; }
inline std::string family_spec1(int k) { return "a->cba^" + std::to_string(k) + ";b->a;c->ca"; }
inline Pair family(int k) { return pair(family_spec0(k), family_spec1(k), "a", "c"); }
inline std::string family_config(int k) { return family_spec0(k) + " | " + family_spec1(k) + " seeds=a,c"; }

inline Pair closing_pair() { return pair("a->aba;b->ab", "a->aab;b->ba", "a", "a"); }
inline Pair unfixed_pair() { return pair("a->ab;b->ac;c->a", "a->ab;b->ca;c->a", "a", "a"); }
inline Pair non_primitive() { return pair("a->abacaa;b->cbb;c->bcc", "a->baacaa;b->bbc;c->bcc", "a", "b"); }

inline SimultaneousCoding coding(const Pair& p, std::size_t length = 10'000, std::size_t order = 1) {
  return simultaneous_coding(p.phi0, p.phi1, p.seed0, p.seed1, {length, order, 64});
}

inline CertifiedSystem certified(const Pair& p, InferenceCaps caps = {4, 1000, 10'000'000}) {
  SimultaneousCoding c = coding(p);
  InferenceResult r = infer_fixing_substitution(c, caps);
  return certify_system(std::move(c), *r.candidate);
}

// mu over {0..n-1} from a spec such as "0->01;1->23".
inline Morphism index_morphism(const std::string& spec, std::size_t n) {
  const Morphism parsed = parse_morphism(spec);
  const Alphabet idx = Alphabet::indices(n);
  std::vector<Word> images(n);
  for (Letter x = 0; x < parsed.source().size(); ++x)
    images[idx.at(parsed.source().token(x))] = idx.parse(parsed.target().format(parsed.image(x)));
  return Morphism::endo(idx, std::move(images));
}

inline const std::string kMainMu = "0->01;1->23;2->45;3->41;4->231;5->26;6->478;7->2;8->66";

}  // namespace fixtures
