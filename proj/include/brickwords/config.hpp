#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brickwords/balance.hpp"
#include "brickwords/inference.hpp"
#include "brickwords/morphism.hpp"

namespace brickwords {

/// One run of the tool: a morphism pair over a common alphabet plus bounds.
///
/// Text form:
///
///     config  := morphism "|" morphism option*
///     option  := key "=" value
///
/// Options are separated by whitespace; '#' starts a comment. phi1 is
/// re-indexed to phi0's letter order.
struct RunConfig {
  Morphism phi0;
  Morphism phi1;
  Letter seed0 = 0;
  Letter seed1 = 0;
  unsigned power = 1;
  std::size_t order = 1;
  std::size_t length = 10'000;       // bricks generated by the coding
  std::int64_t offset_bound = 64;
  InferenceCaps inference;
  std::size_t scan = 100'000;        // prefix-count scan length
  std::size_t bound = 10'000;        // initial balanced pair search bound
  std::size_t max_pairs = 10'000;
  std::size_t max_iterations = 100;
  std::optional<std::string> derived;  // factor over the index alphabet
  std::optional<std::string> json;     // report path

  bool equal_incidence() const { return incidence_matrix(phi0) == incidence_matrix(phi1); }

  CodingOptions coding_options() const { return {length, order, offset_bound}; }
  AlgorithmCaps algorithm_caps() const { return {max_pairs, max_iterations, bound}; }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Seeds may be omitted when each morphism has exactly one prolongable
/// letter. Throws ParseError (with line/column) on grammar errors, unknown
/// keys or letters, erasing images, alphabet mismatches, non-positive bounds
/// and unusable seeds. `overrides` are (key, value) options applied after
/// the text ones, replacing them; their errors are DomainErrors.
RunConfig parse_run_config(std::string_view text,
                           const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Canonical text form; parse_run_config(format_run_config(c)) == c.
std::string format_run_config(const RunConfig& config);

}  // namespace brickwords
