#include "brickwords/inference.hpp"

#include <algorithm>
#include <deque>

#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"

namespace brickwords {

std::string to_string(CandidateStatus status) {
  switch (status) {
    case CandidateStatus::unverified:
      return "unverified";
    case CandidateStatus::verified:
      return "verified";
    case CandidateStatus::refuted:
      return "refuted";
  }
  return "unknown";
}

std::string to_string(InferenceStatus status) {
  switch (status) {
    case InferenceStatus::found:
      return "found";
    case InferenceStatus::absent:
      return "absent";
    case InferenceStatus::budget_exhausted:
      return "budget-exhausted";
    case InferenceStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

// Depth-first decoder. Images are stored as (start, length) windows into w
// since every image is a factor of w.
class FixingSearch {
 public:
  enum class Result { fail, found, budget, inconclusive };

  FixingSearch(std::span<const Letter> w, std::size_t alphabet_size, std::size_t horizon, std::uint64_t budget)
      : w_(w), horizon_(horizon), budget_(budget), images_(alphabet_size) {
    std::vector<char> seen(alphabet_size, 0);
    for (Letter x : w_) {
      if (x >= alphabet_size) throw DomainError("index word letter outside alphabet");
      if (!seen[x]) {
        seen[x] = 1;
        ++unassigned_;
      }
    }
  }

  Result run(std::size_t length_cap) {
    cap_ = length_cap;
    return descend(0, 0);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::size_t decoded() const noexcept { return decoded_; }

  std::vector<Word> images() const {
    std::vector<Word> out;
    for (const Image& img : images_) {
      if (img.length == 0) {
        out.emplace_back();
      } else {
        out.emplace_back(w_.begin() + static_cast<std::ptrdiff_t>(img.start),
                         w_.begin() + static_cast<std::ptrdiff_t>(img.start + img.length));
      }
    }
    return out;
  }

 private:
  struct Image {
    std::size_t start = 0;
    std::size_t length = 0;
  };

  Result descend(std::size_t j, std::size_t p) {
    const std::size_t n = w_.size();
    while (p < horizon_ || (unassigned_ > 0 && p < n)) {
      const Letter x = w_[j];
      const Image img = images_[x];
      if (img.length > 0) {
        const std::size_t stop = std::min(img.length, n - p);
        for (std::size_t q = 0; q < stop; ++q)
          if (w_[p + q] != w_[img.start + q]) return Result::fail;
        p += img.length;
        ++j;
        continue;
      }
      for (std::size_t len = (j == 0 ? 2 : 1); len <= cap_ && p + len <= n; ++len) {
        if (++nodes_ > budget_) return Result::budget;
        images_[x] = {p, len};
        --unassigned_;
        const Result r = descend(j + 1, p + len);
        if (r != Result::fail) return r;
        ++unassigned_;
        images_[x] = {};
      }
      return Result::fail;
    }
    decoded_ = j;
    return unassigned_ > 0 ? Result::inconclusive : Result::found;
  }

  std::span<const Letter> w_;
  std::size_t horizon_;
  std::uint64_t budget_;
  std::vector<Image> images_;
  std::size_t unassigned_ = 0;
  std::size_t cap_ = 0;
  std::uint64_t nodes_ = 0;
  std::size_t decoded_ = 0;
};

}  // namespace

InferenceResult infer_fixing_substitution(std::span<const Letter> w, const Alphabet& alphabet,
                                          const InferenceCaps& caps) {
  if (caps.horizon == 0) throw DomainError("inference horizon must be positive");
  if (w.size() < caps.horizon)
    throw DomainError("index word has " + std::to_string(w.size()) + " letters, horizon needs " +
                      std::to_string(caps.horizon));
  InferenceResult result;
  std::vector<char> present(alphabet.size(), 0);
  for (Letter x : w) present[x] = 1;
  for (Letter x = 0; x < alphabet.size(); ++x)
    if (!present[x]) result.warnings.push_back("inconclusive-horizon: letter " + alphabet.token(x) + " does not occur");

  // Smallest-first DFS under the full cap. When that runs out of budget the
  // search restarts with iterative deepening on the cap and a fresh budget.
  FixingSearch search(w, alphabet.size(), caps.horizon, caps.node_budget);
  result.length_cap_reached = caps.max_image_len;
  FixingSearch::Result outcome = search.run(caps.max_image_len);
  result.nodes = search.nodes();
  if (outcome == FixingSearch::Result::budget) {
    search = FixingSearch(w, alphabet.size(), caps.horizon, caps.node_budget);
    for (std::size_t cap = 1; cap <= caps.max_image_len; ++cap) {
      result.length_cap_reached = cap;
      outcome = search.run(cap);
      if (outcome != FixingSearch::Result::fail) break;
    }
    result.nodes += search.nodes();
  }

  switch (outcome) {
    case FixingSearch::Result::fail:
      result.status = InferenceStatus::absent;
      return result;
    case FixingSearch::Result::budget:
      result.status = InferenceStatus::budget_exhausted;
      return result;
    case FixingSearch::Result::inconclusive:
      result.status = InferenceStatus::inconclusive;
      result.warnings.push_back("inconclusive-horizon: some letters never received an image");
      return result;
    case FixingSearch::Result::found:
      break;
  }
  if (!result.warnings.empty()) {
    result.status = InferenceStatus::inconclusive;
    return result;
  }

  CandidateSubstitution cand{Morphism::endo(alphabet, search.images()), w[0], caps.horizon, search.decoded(),
                             CandidateStatus::unverified};
  // Soundness: mu(w[:decoded]) is a prefix of w (compared where w is known).
  const Word image = cand.mu.apply(w.first(cand.decoded));
  const std::size_t common = std::min(image.size(), w.size());
  if (!std::equal(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(common), w.begin()))
    throw std::logic_error("inferred substitution does not reproduce the index word");

  std::vector<std::size_t> occurrences(alphabet.size(), 0);
  for (std::size_t j = 0; j < cand.decoded; ++j) ++occurrences[w[j]];
  for (Letter x = 0; x < alphabet.size(); ++x)
    if (occurrences[x] < 2)
      result.warnings.push_back("inconclusive-horizon: letter " + alphabet.token(x) + " decoded " +
                                std::to_string(occurrences[x]) + " time(s)");
  result.status = InferenceStatus::found;
  result.candidate = std::move(cand);
  return result;
}

InferenceResult infer_fixing_substitution(const SimultaneousCoding& coding, const InferenceCaps& caps) {
  return infer_fixing_substitution(coding.index_word, coding.index_alphabet, caps);
}

namespace {

void add_factors(std::span<const Letter> word, std::size_t k, std::size_t first, std::set<Word>& into,
                 std::deque<Word>* fresh) {
  for (std::size_t i = first; i + k <= word.size(); ++i) {
    Word f(word.begin() + static_cast<std::ptrdiff_t>(i), word.begin() + static_cast<std::ptrdiff_t>(i + k));
    if (into.insert(f).second && fresh) fresh->push_back(std::move(f));
  }
}

FactorSet close_under(const Morphism& mu, std::size_t k, FactorSet set) {
  std::deque<Word> work(set.factors.begin(), set.factors.end());
  while (!work.empty()) {
    const Word f = std::move(work.front());
    work.pop_front();
    add_factors(mu.apply(f), k, 0, set.factors, &work);
  }
  return set;
}

}  // namespace

FactorSet factor_closure(const Morphism& mu, Letter seed, std::size_t k) {
  if (k == 0) throw DomainError("factor length must be positive");
  FactorSet set{k, {}};
  set.factors.insert(fixed_point_prefix(mu, seed, k));
  return close_under(mu, k, std::move(set));
}

FactorSet interior_factor_closure(const Morphism& mu, Letter seed, std::size_t k) {
  if (k == 0) throw DomainError("factor length must be positive");
  const Word head = fixed_point_prefix(mu, seed, k);
  const std::size_t span = mu.image_length(head);
  const Word prefix = fixed_point_prefix(mu, seed, span + k);
  FactorSet set{k, {}};
  add_factors(prefix, k, 1, set.factors, nullptr);
  return close_under(mu, k, std::move(set));
}

namespace {

Word projected_image(const SimultaneousCoding& coding, const Morphism& mu, Letter x, int row) {
  return head_projection(coding, mu.image(x), row);
}

Word phi_of_head(const SimultaneousCoding& coding, Letter x, int row) {
  const Morphism& phi = row == 0 ? coding.phi0 : coding.phi1;
  return phi.image(coding.brick(x).head(row));
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_candidate_shape(const CandidateSubstitution& cand, const SimultaneousCoding& coding) {
  if (!(cand.mu.source() == coding.index_alphabet) || !cand.mu.is_endomorphism())
    throw DomainError("candidate substitution is not over the coding's index alphabet");
  if (!is_prolongable(cand.mu, cand.seed)) throw DomainError("candidate seed is not prolongable");
}

}  // namespace

CorrectionMaps derive_correction_maps(const CandidateSubstitution& cand, const SimultaneousCoding& coding) {
  check_candidate_shape(cand, coding);
  const std::size_t letters = coding.index_alphabet.size();
  CorrectionMaps maps;
  for (auto& m : maps.maps) m.assign(letters, Word{});

  FixedPointStream w(cand.mu, cand.seed);
  std::vector<char> seen(letters, 0);
  std::size_t remaining = letters;
  constexpr std::size_t kScanLimit = 1'000'000;
  std::array<Word, 2> lhs;  // tau_i pi mu(w[:j+1])
  std::array<Word, 2> rhs;  // phi_i tau_i pi(w[:j+1])
  for (std::size_t j = 0; remaining > 0 && j < kScanLimit; ++j) {
    const Letter x = w.next();
    for (int i = 0; i < 2; ++i) {
      const Word a = projected_image(coding, cand.mu, x, i);
      const Word b = phi_of_head(coding, x, i);
      lhs[i].insert(lhs[i].end(), a.begin(), a.end());
      rhs[i].insert(rhs[i].end(), b.begin(), b.end());
    }
    if (seen[x]) continue;
    seen[x] = 1;
    --remaining;
    for (int i = 0; i < 2; ++i) {
      const Word& a = lhs[i];
      const Word& b = rhs[i];
      const Alphabet& abc = coding.phi0.source();
      if (a.size() > b.size() || !std::equal(a.begin(), a.end(), b.begin())) {
        throw RefutationError(coding.index_alphabet.token(x), i,
                              "tau pi mu(w[:" + std::to_string(j + 1) + "]) has length " + std::to_string(a.size()) +
                                  " and is not a prefix of phi tau pi(w[:" + std::to_string(j + 1) +
                                  "]) (length " + std::to_string(b.size()) + "); first letters " +
                                  abc.format(std::span(a).first(std::min<std::size_t>(a.size(), 12))) + " vs " +
                                  abc.format(std::span(b).first(std::min<std::size_t>(b.size(), 12))));
      }
      maps.maps[i][x] = Word(b.begin() + static_cast<std::ptrdiff_t>(a.size()), b.end());
    }
  }
  return maps;
}

Verdict verify_projection(const CandidateSubstitution& cand, const SimultaneousCoding& coding,
                          const CorrectionMaps& maps, const FactorSet& l2) {
  check_candidate_shape(cand, coding);
  if (l2.length != 2) throw DomainError("verify_projection() needs a set of 2-factors");
  const Alphabet& abc = coding.phi0.source();
  Verdict verdict;
  auto fail = [&](std::string context, int row, const Word& lhs, const Word& rhs) {
    verdict.passed = false;
    verdict.failures.push_back({"projection", "row " + std::to_string(row) + " " + std::move(context),
                                abc.format(lhs), abc.format(rhs), {}});
  };
  const Letter w0 = cand.seed;
  const std::array<Letter, 2> seeds{coding.seed0, coding.seed1};
  for (int i = 0; i < 2; ++i) {
    if (coding.brick(w0).head(i) != seeds[i])
      fail("head: first brick row does not start with the seed", i, Word{coding.brick(w0).head(i)}, Word{seeds[i]});
    const Word lhs = concat(projected_image(coding, cand.mu, w0, i), maps.s(i, w0));
    const Word rhs = phi_of_head(coding, w0, i);
    if (lhs != rhs) fail("base " + coding.index_alphabet.token(w0), i, lhs, rhs);
  }
  for (const Word& f : l2.factors) {
    const Letter y = f[0];
    const Letter x = f[1];
    for (int i = 0; i < 2; ++i) {
      ++verdict.instances;
      const Word lhs = concat(projected_image(coding, cand.mu, x, i), maps.s(i, x));
      const Word rhs = concat(maps.s(i, y), phi_of_head(coding, x, i));
      if (lhs != rhs) fail("factor " + coding.index_alphabet.format(f), i, lhs, rhs);
    }
  }
  return verdict;
}

Verdict verify_joins(const SimultaneousCoding& coding, const FactorSet& l2) {
  if (l2.length != 2) throw DomainError("verify_joins() needs a set of 2-factors");
  Verdict verdict;
  const Alphabet& abc = coding.phi0.source();
  for (const Word& f : l2.factors) {
    ++verdict.instances;
    const std::vector<Brick> pair = bricks_of(coding, f);
    if (!joins_with(pair[0], pair[1], coding.phi0, coding.phi1)) {
      verdict.passed = false;
      verdict.failures.push_back({"joins", "factor " + coding.index_alphabet.format(f),
                                  format_brick(pair[0], abc), format_brick(pair[1], abc),
                                  render_separately(pair, coding.phi0, coding.phi1)});
    }
  }
  return verdict;
}

CertifiedSystem certify_system(SimultaneousCoding coding, CandidateSubstitution candidate,
                               std::optional<CorrectionMaps> maps) {
  CertifiedSystem sys{std::move(coding), std::move(candidate), {}, std::nullopt, {}, {}, false};
  sys.l2 = factor_closure(sys.candidate.mu, sys.candidate.seed, 2);
  sys.first_offset_zero = sys.coding.brick(sys.candidate.seed).offset == 0;
  try {
    sys.maps = maps ? std::move(*maps) : derive_correction_maps(sys.candidate, sys.coding);
    sys.projection = verify_projection(sys.candidate, sys.coding, *sys.maps, sys.l2);
  } catch (const RefutationError& e) {
    sys.projection.passed = false;
    sys.projection.failures.push_back({"projection", "letter " + e.letter(), e.what(), {}, {}});
  }
  sys.joins = verify_joins(sys.coding, sys.l2);
  const bool ok = sys.projection.passed && sys.joins.passed && sys.first_offset_zero;
  sys.candidate.status = ok ? CandidateStatus::verified : CandidateStatus::refuted;
  return sys;
}

}  // namespace brickwords
