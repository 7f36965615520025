#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "brickwords/bricks.hpp"
#include "brickwords/morphism.hpp"

namespace brickwords {

struct InferenceCaps {
  std::size_t max_image_len = 8;
  std::size_t horizon = 5000;
  std::uint64_t node_budget = 10'000'000;

  friend bool operator==(const InferenceCaps&, const InferenceCaps&) = default;
};

enum class CandidateStatus { unverified, verified, refuted };

std::string to_string(CandidateStatus status);

/// A substitution mu over the index alphabet that fixes the index word on
/// the decoded horizon.
struct CandidateSubstitution {
  Morphism mu;
  Letter seed = 0;              // w[0]; mu(seed) starts with seed
  std::size_t horizon = 0;      // requested horizon H
  std::size_t decoded = 0;      // letters j with mu(w[:j]) checked against w
  CandidateStatus status = CandidateStatus::unverified;
};

enum class InferenceStatus {
  found,             // complete consistent assignment
  absent,            // search space exhausted within the length cap
  budget_exhausted,  // node budget ran out first
  inconclusive,      // consistent, but some letter never got an image
};

std::string to_string(InferenceStatus status);

struct InferenceResult {
  InferenceStatus status = InferenceStatus::absent;
  std::optional<CandidateSubstitution> candidate;
  std::uint64_t nodes = 0;
  std::size_t length_cap_reached = 0;  // image-length level the search stopped at
  std::vector<std::string> warnings;
};

/// Backtracking search for mu with mu(w) = w on the horizon.
///
/// w is decoded as mu(w[0]) mu(w[1]) ...; an unseen letter's image is the
/// next l symbols of w for a guessed length l. Lengths are tried smallest
/// first and letters are resolved left to right, and the first solution is
/// returned. If the node budget runs out, the search is repeated once with
/// a fresh budget and the cap deepened 1, 2, ..., max_image_len, which
/// reaches solutions with short images sooner. Deterministic. Throws
/// DomainError when w is shorter than the horizon.
InferenceResult infer_fixing_substitution(std::span<const Letter> w, const Alphabet& alphabet,
                                          const InferenceCaps& caps);
InferenceResult infer_fixing_substitution(const SimultaneousCoding& coding, const InferenceCaps& caps);

/// Set of factors of one length.
struct FactorSet {
  std::size_t length = 0;
  std::set<Word> factors;

  bool contains(const Word& f) const { return factors.contains(f); }
  std::size_t size() const noexcept { return factors.size(); }
};

/// k-factors of the fixed point of mu from `seed`: least set containing the
/// k-prefix and closed under taking k-factors of mu-images.
FactorSet factor_closure(const Morphism& mu, Letter seed, std::size_t k);

/// k-factors that occur at some position >= 1 of the fixed point.
FactorSet interior_factor_closure(const Morphism& mu, Letter seed, std::size_t k);

/// s0, s1: index letter -> word over A.
struct CorrectionMaps {
  std::array<std::vector<Word>, 2> maps;

  const Word& s(int row, Letter x) const { return maps[static_cast<std::size_t>(row)].at(x); }
};

/// s_i(x) is what remains after removing tau_i pi mu(p x) from the front of
/// phi_i tau_i pi(p x), where p x is the first-occurrence prefix of x in the
/// fixed point of mu. Throws RefutationError when the prefix relation fails.
CorrectionMaps derive_correction_maps(const CandidateSubstitution& cand, const SimultaneousCoding& coding);

struct CheckFailure {
  std::string check;    // "projection", "joins", ...
  std::string context;  // factor or letter that failed
  std::string lhs;
  std::string rhs;
  std::string diagram;
};

struct Verdict {
  bool passed = true;
  std::size_t instances = 0;  // identities checked over factors
  std::vector<CheckFailure> failures;
};

/// For i in {0,1} and every yx in l2:
///   tau_i pi mu(x) s_i(x) == s_i(y) phi_i tau_i pi(x)
/// plus the base case at the seed. tau_i pi is the head projection.
Verdict verify_projection(const CandidateSubstitution& cand, const SimultaneousCoding& coding,
                          const CorrectionMaps& maps, const FactorSet& l2);

/// Every b0 b1 in pi(l2) joins.
Verdict verify_joins(const SimultaneousCoding& coding, const FactorSet& l2);

/// Coding plus a candidate with both identity checks run on its 2-factors.
struct CertifiedSystem {
  SimultaneousCoding coding;
  CandidateSubstitution candidate;
  FactorSet l2;
  std::optional<CorrectionMaps> maps;
  Verdict projection;
  Verdict joins;
  bool first_offset_zero = false;

  bool verified() const noexcept { return candidate.status == CandidateStatus::verified; }
};

/// Derives the correction maps unless given (a refutation becomes a
/// projection failure), runs both checks and sets candidate.status.
CertifiedSystem certify_system(SimultaneousCoding coding, CandidateSubstitution candidate,
                               std::optional<CorrectionMaps> maps = std::nullopt);

}  // namespace brickwords
