#include "brickwords/balance.hpp"

#include <map>

#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"

namespace brickwords {

bool is_balanced(std::span<const Letter> u, std::span<const Letter> v, std::size_t alphabet_size) {
  return u.size() == v.size() && parikh(u, alphabet_size) == parikh(v, alphabet_size);
}

std::vector<BalancedPair> minimal_decomposition(std::span<const Letter> u, std::span<const Letter> v,
                                                std::size_t alphabet_size) {
  if (!is_balanced(u, v, alphabet_size)) throw DomainError("minimal_decomposition() needs a balanced pair");
  std::vector<BalancedPair> pieces;
  std::vector<std::int64_t> diff(alphabet_size, 0);
  std::size_t nonzero = 0;
  std::size_t start = 0;
  auto bump = [&](Letter l, std::int64_t delta) {
    const std::int64_t before = diff[l];
    diff[l] += delta;
    if (before == 0 && diff[l] != 0) ++nonzero;
    if (before != 0 && diff[l] == 0) --nonzero;
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    bump(u[i], 1);
    bump(v[i], -1);
    if (nonzero == 0) {
      pieces.push_back({Word(u.begin() + start, u.begin() + i + 1), Word(v.begin() + start, v.begin() + i + 1)});
      start = i + 1;
    }
  }
  return pieces;
}

InitialPairSearch find_initial_balanced_pair(const Morphism& phi0, const Morphism& phi1, Letter seed0,
                                             Letter seed1, std::size_t bound, unsigned power) {
  if (!(phi0.source() == phi1.source())) throw DomainError("morphisms are over different alphabets");
  InitialPairSearch result;
  result.bound = bound;
  if (!(incidence_matrix(phi0) == incidence_matrix(phi1)))
    result.warnings.push_back("incidence matrices differ; balanced prefixes are not preserved by the morphisms");
  FixedPointStream s0(power == 1 ? phi0 : brickwords::power(phi0, power), seed0);
  FixedPointStream s1(power == 1 ? phi1 : brickwords::power(phi1, power), seed1);
  const std::size_t d = phi0.source().size();
  std::vector<std::int64_t> diff(d, 0);
  std::size_t nonzero = 0;
  auto bump = [&](Letter l, std::int64_t delta) {
    const std::int64_t before = diff[l];
    diff[l] += delta;
    if (before == 0) ++nonzero;
    if (diff[l] == 0) --nonzero;
  };
  for (std::size_t n = 1; n <= bound; ++n) {
    const Letter a = s0.next();
    const Letter b = s1.next();
    if (a != b) {
      bump(a, 1);
      bump(b, -1);
    }
    if (nonzero == 0) {
      result.length = n;
      return result;
    }
  }
  return result;
}

std::string to_string(AlgorithmStatus status) {
  switch (status) {
    case AlgorithmStatus::closed:
      return "closed";
    case AlgorithmStatus::cap_exceeded:
      return "cap-exceeded";
    case AlgorithmStatus::no_initial_pair:
      return "no-initial-pair";
  }
  return "unknown";
}

std::vector<BalancedPair> balanced_pair_step(const Morphism& phi0, const Morphism& phi1, const BalancedPair& pair) {
  const Word u = phi0.apply(pair.u);
  const Word v = phi1.apply(pair.v);
  return minimal_decomposition(u, v, phi0.source().size());
}

AlgorithmOutcome balanced_pair_algorithm(const Morphism& phi0, const Morphism& phi1, Letter seed0, Letter seed1,
                                         unsigned power, const AlgorithmCaps& caps) {
  if (!(phi0.source() == phi1.source())) throw DomainError("morphisms are over different alphabets");
  if (!(incidence_matrix(phi0) == incidence_matrix(phi1)))
    throw DomainError("balanced pair algorithm needs equal incidence matrices");
  AlgorithmOutcome outcome;
  const InitialPairSearch search = find_initial_balanced_pair(phi0, phi1, seed0, seed1, caps.seed_bound, power);
  if (!search.length) {
    outcome.status = AlgorithmStatus::no_initial_pair;
    return outcome;
  }
  outcome.initial_length = search.length;
  const Morphism f0 = power == 1 ? phi0 : brickwords::power(phi0, power);
  const Morphism f1 = power == 1 ? phi1 : brickwords::power(phi1, power);
  const std::size_t n = *search.length;
  const Word u = fixed_point_prefix(f0, seed0, n);
  const Word v = fixed_point_prefix(f1, seed1, n);

  std::map<BalancedPair, std::size_t> seen;
  std::vector<std::size_t> frontier;
  auto add = [&](BalancedPair p) {
    if (seen.contains(p)) return;
    seen.emplace(p, outcome.minimal_pairs.size());
    frontier.push_back(outcome.minimal_pairs.size());
    outcome.minimal_pairs.push_back(std::move(p));
  };
  for (BalancedPair& p : minimal_decomposition(u, v, phi0.source().size())) add(std::move(p));

  while (!frontier.empty()) {
    if (outcome.iterations >= caps.max_iterations || outcome.minimal_pairs.size() > caps.max_pairs) {
      outcome.status = AlgorithmStatus::cap_exceeded;
      return outcome;
    }
    ++outcome.iterations;
    std::vector<std::size_t> current;
    current.swap(frontier);
    for (std::size_t idx : current) {
      const BalancedPair pair = outcome.minimal_pairs[idx];
      for (BalancedPair& p : balanced_pair_step(f0, f1, pair)) add(std::move(p));
      if (outcome.minimal_pairs.size() > caps.max_pairs) break;
    }
  }
  outcome.status = AlgorithmStatus::closed;
  return outcome;
}

}  // namespace brickwords
