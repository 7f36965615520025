#include "properties.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "brickwords/balance.hpp"
#include "brickwords/dominance.hpp"
#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"
#include "brickwords/pipeline.hpp"

namespace properties {

using namespace brickwords;
using Rng = std::mt19937_64;

namespace {

const std::vector<std::string> kTokens{"a", "b", "c", "d"};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Alphabet letters(std::size_t n) { return Alphabet(std::vector<std::string>(kTokens.begin(), kTokens.begin() + n)); }

Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t lo, std::size_t hi) {
  Word w(uniform(rng, lo, hi));
  for (Letter& x : w) x = static_cast<Letter>(uniform(rng, 0, alphabet_size - 1));
  return w;
}

Morphism random_morphism(Rng& rng, std::size_t n, std::size_t max_len) {
  std::vector<Word> images(n);
  for (Word& w : images) w = random_word(rng, n, 1, max_len);
  return Morphism::endo(letters(n), std::move(images));
}

// Random substitution with a prolongable seed.
struct Substitution {
  Morphism m;
  Letter seed = 0;
};

Substitution random_substitution(Rng& rng, std::size_t n, std::size_t max_len) {
  const Letter seed = static_cast<Letter>(uniform(rng, 0, n - 1));
  std::vector<Word> images(n);
  for (Word& w : images) w = random_word(rng, n, 1, max_len);
  if (images[seed].size() < 2) images[seed].push_back(static_cast<Letter>(uniform(rng, 0, n - 1)));
  images[seed][0] = seed;
  return {Morphism::endo(letters(n), std::move(images)), seed};
}

struct Pair {
  Morphism phi0;
  Morphism phi1;
  Letter seed0 = 0;
  Letter seed1 = 0;
};

// Two substitutions with equal incidence matrices and prolongable seeds.
// phi1 reverses phi0's images half of the time and shuffles them otherwise.
Pair random_pair(Rng& rng) {
  const std::size_t n = uniform(rng, 2, 3);
  const Letter s0 = static_cast<Letter>(uniform(rng, 0, n - 1));
  const Letter s1 = static_cast<Letter>(uniform(rng, 0, n - 1));
  const bool reverse = uniform(rng, 0, 1) == 0;
  std::vector<Word> img0(n);
  for (Word& w : img0) w = random_word(rng, n, 1, 4);
  for (Letter s : {s0, s1})
    if (img0[s].size() < 2) img0[s].push_back(static_cast<Letter>(uniform(rng, 0, n - 1)));
  img0[s0].front() = s0;
  if (reverse) {
    img0[s1].back() = s1;
  } else if (std::find(img0[s1].begin(), img0[s1].end(), s1) == img0[s1].end()) {
    img0[s1].back() = s1;
  }
  std::vector<Word> img1 = img0;
  for (Letter x = 0; x < n; ++x) {
    if (reverse) {
      std::reverse(img1[x].begin(), img1[x].end());
    } else {
      std::shuffle(img1[x].begin(), img1[x].end(), rng);
    }
  }
  if (!reverse) {
    Word& w = img1[s1];
    std::iter_swap(w.begin(), std::find(w.begin(), w.end(), s1));
  }
  return {Morphism::endo(letters(n), std::move(img0)), Morphism::endo(letters(n), std::move(img1)), s0, s1};
}

void fail(Result& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

std::string describe(const Pair& p) {
  return p.phi0.to_spec() + " | " + p.phi1.to_spec() + " seeds=" + p.phi0.source().token(p.seed0) + "," +
         p.phi0.source().token(p.seed1);
}

bool is_prefix(const Word& p, const Word& w) { return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin()); }

std::size_t image_length(const Morphism& m, std::span<const Letter> w) {
  std::size_t n = 0;
  for (Letter x : w) n += m.image_length(x);
  return n;
}

}  // namespace

Result parikh_incidence(std::uint64_t seed, std::size_t cases) {
  Result r{"parikh/incidence commutation"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const std::size_t n = uniform(rng, 1, 4);
    const Morphism m = random_morphism(rng, n, 5);
    const Word u = random_word(rng, n, 0, 40);
    ++r.applicable;
    // Oracle: matrix-vector product written out from the images.
    const ParikhVector pu = parikh(u, n);
    std::vector<std::uint64_t> expected(n, 0);
    for (Letter j = 0; j < n; ++j)
      for (Letter i : m.image(j)) expected[i] += pu.counts[j];
    const ParikhVector got = parikh(m.apply(u), n);
    if (got.counts != expected || incidence_matrix(m) * pu != got) fail(r, m.to_spec());
  }
  return r;
}

Result fixed_point_prefixes(std::uint64_t seed, std::size_t cases) {
  Result r{"fixed-point prefixes"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const Substitution s = random_substitution(rng, uniform(rng, 1, 4), 4);
    const std::size_t n = uniform(rng, 1, 200);
    const std::size_t n2 = n + uniform(rng, 0, 200);
    const Word a = fixed_point_prefix(s.m, s.seed, n);
    const Word b = fixed_point_prefix(s.m, s.seed, n2);
    ++r.applicable;
    if (a.size() != n || !is_prefix(a, b) || !is_prefix(a, s.m.apply(a))) fail(r, s.m.to_spec());
  }
  return r;
}

Result power_composition(std::uint64_t seed, std::size_t cases) {
  Result r{"power composition"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const std::size_t n = uniform(rng, 1, 3);
    const Morphism m = random_morphism(rng, n, 3);
    const unsigned j = static_cast<unsigned>(uniform(rng, 1, 3));
    const unsigned k = static_cast<unsigned>(uniform(rng, 1, 3));
    const Morphism lhs = power(m, j + k);
    const Morphism rhs = compose(power(m, j), power(m, k));
    ++r.applicable;
    bool ok = true;
    for (Letter x = 0; x < n; ++x) {
      // Oracle: apply m letter by letter j + k times.
      Word w{x};
      for (unsigned t = 0; t < j + k; ++t) w = m.apply(w);
      ok = ok && lhs.image(x) == w && rhs.image(x) == w;
    }
    if (!ok) fail(r, m.to_spec());
  }
  return r;
}

Result decomposition(std::uint64_t seed, std::size_t cases) {
  Result r{"decomposition reassembly and minimality"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const std::size_t n = uniform(rng, 1, 4);
    const Word u = random_word(rng, n, 1, 30);
    Word v = u;
    std::shuffle(v.begin(), v.end(), rng);
    ++r.applicable;
    Word cu;
    Word cv;
    bool ok = true;
    for (const BalancedPair& p : minimal_decomposition(u, v, n)) {
      cu.insert(cu.end(), p.u.begin(), p.u.end());
      cv.insert(cv.end(), p.v.begin(), p.v.end());
      ok = ok && !p.u.empty() && p.u.size() == p.v.size() && parikh(p.u, n) == parikh(p.v, n);
      for (std::size_t l = 1; l < p.u.size(); ++l)
        ok = ok && parikh(std::span(p.u).first(l), n) != parikh(std::span(p.v).first(l), n);
    }
    if (!ok || cu != u || cv != v) fail(r, letters(n).format(u) + "/" + letters(n).format(v));
  }
  return r;
}

Result image_preservation(std::uint64_t seed, std::size_t cases) {
  Result r{"image preservation of balance"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const Pair p = random_pair(rng);
    const std::size_t n = p.phi0.source().size();
    const Word u = random_word(rng, n, 1, 30);
    Word v = u;
    std::shuffle(v.begin(), v.end(), rng);
    ++r.applicable;
    if (!is_balanced(p.phi0.apply(u), p.phi1.apply(v), n)) fail(r, describe(p));
  }
  return r;
}

Result initial_pair(std::uint64_t seed, std::size_t cases) {
  Result r{"initial balanced pair minimality"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const Pair p = random_pair(rng);
    const std::size_t n = p.phi0.source().size();
    const std::size_t bound = 200;
    const InitialPairSearch s = find_initial_balanced_pair(p.phi0, p.phi1, p.seed0, p.seed1, bound);
    const Word u = fixed_point_prefix(p.phi0, p.seed0, bound);
    const Word v = fixed_point_prefix(p.phi1, p.seed1, bound);
    std::optional<std::size_t> expected;
    for (std::size_t l = 1; l <= bound && !expected; ++l)
      if (parikh(std::span(u).first(l), n) == parikh(std::span(v).first(l), n)) expected = l;
    if (expected) ++r.applicable;
    if (s.length != expected) fail(r, describe(p));
  }
  return r;
}

Result offset_telescoping(std::uint64_t seed, std::size_t cases) {
  Result r{"offset telescoping"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const Pair p = random_pair(rng);
    const std::size_t len = 300;
    const SimultaneousCoding c = simultaneous_coding(p.phi0, p.phi1, p.seed0, p.seed1, {len, 1, 1 << 20});
    const Word u0 = fixed_point_prefix(p.phi0, p.seed0, len);
    const Word u1 = fixed_point_prefix(p.phi1, p.seed1, len);
    ++r.applicable;
    bool ok = c.index_word.size() == len;
    for (std::size_t i = 0; ok && i < len; ++i) {
      const Brick& b = c.brick(c.index_word[i]);
      const auto t = static_cast<std::int64_t>(image_length(p.phi1, std::span(u1).first(i))) -
                     static_cast<std::int64_t>(image_length(p.phi0, std::span(u0).first(i)));
      ok = b.offset == t && b.row0 == Word{u0[i]} && b.row1 == Word{u1[i]};
    }
    if (!ok) fail(r, describe(p));
  }
  return r;
}

Result coding_structure(std::uint64_t seed, std::size_t cases) {
  Result r{"joins, projections and stable numbering"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const Pair p = random_pair(rng);
    const std::size_t order = uniform(rng, 1, 2);
    const SimultaneousCoding a = simultaneous_coding(p.phi0, p.phi1, p.seed0, p.seed1, {100, order, 1 << 20});
    const SimultaneousCoding b = simultaneous_coding(p.phi0, p.phi1, p.seed0, p.seed1, {400, order, 1 << 20});
    ++r.applicable;
    const std::vector<Brick> bs = bricks_of(b, b.index_word);
    bool ok = bs.front().offset == 0 && a.bricks.size() <= b.bricks.size();
    for (std::size_t i = 0; ok && i < a.bricks.size(); ++i) ok = a.bricks[i] == b.bricks[i];
    for (std::size_t i = 0; ok && i + 1 < bs.size(); ++i) ok = joins_with(bs[i], bs[i + 1], p.phi0, p.phi1);
    ok = ok && is_prefix(tau(b, 0), fixed_point_prefix(p.phi0, p.seed0, 401)) &&
         is_prefix(tau(b, 1), fixed_point_prefix(p.phi1, p.seed1, 401));
    if (!ok) fail(r, describe(p) + " order=" + std::to_string(order));
  }
  return r;
}

Result inference_soundness(std::uint64_t seed, std::size_t cases) {
  Result r{"inference soundness"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const std::size_t n = uniform(rng, 2, 4);
    const Substitution s = random_substitution(rng, n, 3);
    const Word w = fixed_point_prefix(s.m, s.seed, 400);
    const InferenceResult res = infer_fixing_substitution(w, s.m.source(), {4, 150, 20'000});
    if (res.status != InferenceStatus::found) continue;
    ++r.applicable;
    const CandidateSubstitution& c = *res.candidate;
    const Word img = c.mu.apply(std::span(w).first(c.decoded));
    bool ok = img.size() >= c.horizon && c.horizon == 150 && c.seed == w[0] && is_prefix(img, w) &&
              c.mu.image(w[0]).size() >= 2 && c.mu.image(w[0])[0] == w[0];
    // Independent check: the candidate's own fixed point agrees with w.
    ok = ok && fixed_point_prefix(c.mu, c.seed, img.size()) == Word(w.begin(), w.begin() + img.size());
    if (!ok) fail(r, s.m.to_spec());
  }
  return r;
}

Result factor_closure_stability(std::uint64_t seed, std::size_t cases) {
  Result r{"factor closure stability"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const Substitution s = random_substitution(rng, uniform(rng, 1, 4), 3);
    const std::size_t k = uniform(rng, 2, 3);
    const FactorSet f = factor_closure(s.m, s.seed, k);
    ++r.applicable;
    std::set<Word> next = f.factors;
    for (const Word& x : f.factors) {
      const Word img = s.m.apply(x);
      for (std::size_t i = 0; i + k <= img.size(); ++i) next.insert(Word(img.begin() + i, img.begin() + i + k));
    }
    const Word w = fixed_point_prefix(s.m, s.seed, 300);
    bool ok = next == f.factors;
    for (std::size_t i = 0; ok && i + k <= w.size(); ++i) ok = f.factors.count(Word(w.begin() + i, w.begin() + i + k)) == 1;
    if (!ok) fail(r, s.m.to_spec() + " k=" + std::to_string(k));
  }
  return r;
}

Result certificate_scan_agreement(std::uint64_t seed, std::size_t cases, std::size_t scan_length) {
  Result r{"certificate/scan agreement"};
  Rng rng(seed);
  const std::vector<DominanceWindows> windows{{1, 1}, {0, 0}, {0, 1}, {1, 2}, {2, 2}};
  for (; r.cases < cases; ++r.cases) {
    const Pair p = random_pair(rng);
    SimultaneousCoding c;
    try {
      c = simultaneous_coding(p.phi0, p.phi1, p.seed0, p.seed1, {600, 1, 16});
    } catch (const OffsetBoundExceeded&) {
      continue;
    }
    const InferenceResult res = infer_fixing_substitution(c, {4, 200, 20'000});
    if (res.status != InferenceStatus::found) continue;
    const CertifiedSystem sys = certify_system(c, *res.candidate);
    if (!sys.verified()) continue;
    for (Letter x = 0; x < p.phi0.source().size(); ++x) {
      for (int row : {0, 1}) {
        const bool passed = std::any_of(windows.begin(), windows.end(), [&](const DominanceWindows& win) {
          return verify_letter_dominance(sys, x, win, row).verdict == CertificateVerdict::pass;
        });
        if (!passed) continue;
        ++r.applicable;
        const PrefixCountScan scan = row == 1
                                         ? scan_prefix_counts(p.phi0, p.phi1, p.seed0, p.seed1, x, scan_length)
                                         : scan_prefix_counts(p.phi1, p.phi0, p.seed1, p.seed0, x, scan_length);
        if (!scan.all_positive || scan.min_diff < 1)
          fail(r, describe(p) + " letter=" + p.phi0.source().token(x) + " row=" + std::to_string(row));
      }
    }
  }
  return r;
}

Result config_round_trip(std::uint64_t seed, std::size_t cases) {
  Result r{"config round trip"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const Pair p = random_pair(rng);
    std::ostringstream text;
    text << describe(p);
    if (uniform(rng, 0, 1)) text << "\norder=" << uniform(rng, 1, 3);
    if (uniform(rng, 0, 1)) text << " length=" << uniform(rng, 1, 100000);
    if (uniform(rng, 0, 1)) text << " horizon=" << uniform(rng, 1, 5000) << " max-image-len=" << uniform(rng, 1, 9);
    if (uniform(rng, 0, 1)) text << " # comment\npower=" << uniform(rng, 1, 3);
    if (uniform(rng, 0, 1)) text << " derived=0";
    if (uniform(rng, 0, 1)) text << " scan=" << uniform(rng, 1, 1000000) << " offset-bound=" << uniform(rng, 1, 99);
    const RunConfig c = parse_run_config(text.str());
    ++r.applicable;
    if (parse_run_config(format_run_config(c)) != c) fail(r, text.str());
  }
  return r;
}

Result pipeline_contract(std::uint64_t seed, std::size_t cases) {
  Result r{"pipeline exit code and determinism"};
  Rng rng(seed);
  for (; r.cases < cases; ++r.cases) {
    const Pair p = random_pair(rng);
    const RunConfig c = parse_run_config(describe(p) +
                                         " length=400 offset-bound=8 horizon=150 max-image-len=4 node-budget=5000"
                                         " scan=500 bound=200 max-pairs=200 max-iterations=10");
    const PipelineReport a = run_pipeline(c);
    const PipelineReport b = run_pipeline(c);
    ++r.applicable;
    bool all_pass = true;
    bool any_cap = false;
    for (const auto& [name, v] : a.json["stages"].items()) {
      all_pass = all_pass && v == "pass";
      any_cap = any_cap || v == "cap-exceeded";
    }
    const bool ok = a.json.dump() == b.json.dump() && (a.exit_code == 0) == all_pass &&
                    (a.exit_code == 3) == any_cap && a.json["exit_code"] == a.exit_code;
    if (!ok) fail(r, describe(p));
  }
  return r;
}

}  // namespace properties
