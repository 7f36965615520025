#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brickwords/morphism.hpp"

namespace brickwords {

/// Two words over the same alphabet with equal Parikh vectors.
struct BalancedPair {
  Word u;
  Word v;

  friend auto operator<=>(const BalancedPair&, const BalancedPair&) = default;
};

bool is_balanced(std::span<const Letter> u, std::span<const Letter> v, std::size_t alphabet_size);

/// Cuts a balanced pair at every interior length where the prefixes are
/// balanced. Each piece is minimal. Throws DomainError if (u, v) is not
/// balanced.
std::vector<BalancedPair> minimal_decomposition(std::span<const Letter> u, std::span<const Letter> v,
                                                std::size_t alphabet_size);

struct InitialPairSearch {
  std::optional<std::size_t> length;  // smallest n with balanced n-prefixes
  std::size_t bound = 0;
  std::vector<std::string> warnings;
};

/// Streams the fixed points of phi0^power and phi1^power from the seeds and
/// keeps a running Parikh difference, so the scan is O(bound) time and O(1)
/// extra memory beyond the fixed-point buffers.
InitialPairSearch find_initial_balanced_pair(const Morphism& phi0, const Morphism& phi1, Letter seed0,
                                             Letter seed1, std::size_t bound, unsigned power = 1);

enum class AlgorithmStatus { closed, cap_exceeded, no_initial_pair };

std::string to_string(AlgorithmStatus status);

struct AlgorithmCaps {
  std::size_t max_pairs = 10'000;
  std::size_t max_iterations = 100;
  std::size_t seed_bound = 10'000;  // bound handed to find_initial_balanced_pair
};

struct AlgorithmOutcome {
  AlgorithmStatus status = AlgorithmStatus::no_initial_pair;
  std::optional<std::size_t> initial_length;
  std::vector<BalancedPair> minimal_pairs;  // first-seen order
  std::size_t iterations = 0;
};

/// One image-then-decompose step applied to `pair`.
std::vector<BalancedPair> balanced_pair_step(const Morphism& phi0, const Morphism& phi1, const BalancedPair& pair);

/// Balanced pair algorithm for phi0^power and phi1^power. Throws DomainError
/// when the incidence matrices differ.
AlgorithmOutcome balanced_pair_algorithm(const Morphism& phi0, const Morphism& phi1, Letter seed0, Letter seed1,
                                         unsigned power = 1, const AlgorithmCaps& caps = {});

}  // namespace brickwords
