#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "brickwords/inference.hpp"

namespace brickwords {

/// Pairing windows, in columns. An occurrence of the letter in the
/// dominated row at column n is paired inside the dominating row's columns
/// [n - back, n]; an occurrence in the dominating row at column n is paired
/// inside the dominated row's columns [n, n + fwd].
struct DominanceWindows {
  std::size_t back = 1;
  std::size_t fwd = 1;

  friend bool operator==(const DominanceWindows&, const DominanceWindows&) = default;
};

enum class CertificateVerdict { pass, fail, inconclusive };

std::string to_string(CertificateVerdict verdict);

/// Local pairing data over the brick diagrams of short factors of w.
///
/// A pass requires, over every context in which an occurrence can appear:
///  (i)   each occurrence in the dominated row has exactly one partner in
///        the dominating row's back window;
///  (ii)  each non-initial occurrence in the dominating row has exactly one
///        partner in the dominated row's forward window;
///  (iii) the dominating row starts with the letter and that initial
///        occurrence has no partner.
/// With back <= fwd, (i) and (ii) give an injection from dominated
/// occurrences into dominating ones that never moves right and misses
/// column 0, so the dominating row has strictly more occurrences in every
/// nonempty prefix.
struct DominanceCertificate {
  Letter letter = 0;
  int dominating_row = 1;
  DominanceWindows windows;
  std::size_t checked_factors = 0;  // longest factor length that was needed (2 or 3)
  std::optional<std::int64_t> initial_unpaired;
  std::size_t occurrence_classes = 0;
  CertificateVerdict verdict = CertificateVerdict::inconclusive;
  std::string failure;
  std::string failure_diagram;
};

/// Checks the pairing conditions on the diagrams of pi(L2), escalating to
/// 3-factors for occurrences whose window leaves the 2-factor diagram.
/// When `dominating_row` is not given the row that starts with the letter
/// is used (row 1 when both or neither do).
/// Throws PreconditionError when the system is not verified and DomainError
/// when windows.back > windows.fwd.
DominanceCertificate verify_letter_dominance(const CertifiedSystem& system, Letter letter,
                                             DominanceWindows windows = {},
                                             std::optional<int> dominating_row = std::nullopt);

struct PrefixCountScan {
  std::size_t length = 0;
  std::int64_t min_diff = 0;  // min over 1 <= n <= N of |u1[:n]|_a - |u0[:n]|_a
  std::size_t argmin = 0;     // first n attaining it
  bool all_positive = false;
};

/// Streams both fixed points. Numeric evidence only.
PrefixCountScan scan_prefix_counts(const Morphism& phi0, const Morphism& phi1, Letter seed0, Letter seed1,
                                   Letter letter, std::size_t length, unsigned power = 1);

}  // namespace brickwords
