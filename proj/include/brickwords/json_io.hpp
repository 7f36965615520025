#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brickwords/balance.hpp"
#include "brickwords/config.hpp"
#include "brickwords/dominance.hpp"
#include "brickwords/inference.hpp"

namespace brickwords {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Words are strings of tokens; bricks are {row0, row1, offset}.
Json brick_json(const Brick& brick, const Alphabet& letters);
Json bricks_json(const std::vector<Brick>& bricks, const Alphabet& letters);
Json morphism_json(const Morphism& m);  // {"x": "image", ...} in letter order
Json coding_json(const SimultaneousCoding& coding, bool with_word);
Json inference_json(const InferenceResult& result);
Json correction_maps_json(const CorrectionMaps& maps, const Alphabet& index, const Alphabet& letters);
Json verdict_json(const Verdict& verdict);
Json certificate_json(const DominanceCertificate& cert, const Alphabet& letters);
Json scan_json(const PrefixCountScan& scan, Letter letter, int dominating_row, const Alphabet& letters);
Json initial_pair_json(const InitialPairSearch& search);
Json algorithm_json(const AlgorithmOutcome& outcome, const Alphabet& letters);
Json config_json(const RunConfig& config);

/// Input of `verify`: a candidate mu over the brick indices, the bricks pi
/// and optionally the correction maps and the seed of mu.
struct VerifyBundle {
  Morphism mu;
  std::vector<Brick> pi;
  std::optional<std::vector<Word>> s0;
  std::optional<std::vector<Word>> s1;
  std::optional<Letter> seed;
};

/// mu is either a spec string "0->01;1->23;..." or an object {"0": "01", ...};
/// maps are objects {"0": "c", "1": "", ...}. Throws ParseError on malformed
/// bundles.
VerifyBundle parse_verify_bundle(const Json& bundle, const Alphabet& letters);

}  // namespace brickwords
