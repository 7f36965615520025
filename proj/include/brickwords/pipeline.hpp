#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brickwords/config.hpp"
#include "brickwords/dominance.hpp"
#include "brickwords/json_io.hpp"

namespace brickwords {

enum class StageVerdict { pass, fail, cap_exceeded, skipped };

std::string to_string(StageVerdict verdict);

/// Process exit code for a list of stage verdicts: 3 if some stage hit a
/// cap or bound, otherwise 1 if some stage did not pass, otherwise 0.
int exit_code(const std::vector<std::pair<std::string, StageVerdict>>& stages);

/// Best certificate per (letter, dominating row), tried with windows (1,1)
/// first and then every 0 <= back <= fwd <= max(1, max |offset|).
std::vector<DominanceCertificate> search_certificates(const CertifiedSystem& system);

/// Dominance certificate search for one letter and row over the same windows.
DominanceCertificate search_certificate(const CertifiedSystem& system, Letter letter, int dominating_row);

/// |u_D[:n]|_a - |u_d[:n]|_a scan for the certificate's direction.
PrefixCountScan scan_for(const RunConfig& config, Letter letter, int dominating_row, std::size_t length);

/// A candidate and bricks read from a bundle, checked against the config's pair.
CertifiedSystem certify_bundle(const RunConfig& config, const VerifyBundle& bundle);

struct PipelineReport {
  Json json;
  std::vector<std::pair<std::string, StageVerdict>> stages;
  int exit_code = 0;

  /// One line per stage.
  std::string summary() const;
};

/// coding -> inference -> projection -> joins -> certificate -> scan, plus
/// the derived-sequence retry when the config names a factor. Stages after
/// a failing one are skipped. The report holds no timestamp, so equal
/// configs give byte-identical dumps.
PipelineReport run_pipeline(const RunConfig& config);

}  // namespace brickwords
