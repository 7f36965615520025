#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace properties {

struct Result {
  std::string name;
  std::size_t cases = 0;       // random instances drawn
  std::size_t applicable = 0;  // instances where the property had something to check
  std::size_t failures = 0;
  std::string first_failure;
};

Result parikh_incidence(std::uint64_t seed, std::size_t cases);
Result fixed_point_prefixes(std::uint64_t seed, std::size_t cases);
Result power_composition(std::uint64_t seed, std::size_t cases);
Result decomposition(std::uint64_t seed, std::size_t cases);
Result image_preservation(std::uint64_t seed, std::size_t cases);
Result initial_pair(std::uint64_t seed, std::size_t cases);
Result offset_telescoping(std::uint64_t seed, std::size_t cases);
Result coding_structure(std::uint64_t seed, std::size_t cases);
Result inference_soundness(std::uint64_t seed, std::size_t cases);
Result factor_closure_stability(std::uint64_t seed, std::size_t cases);
Result certificate_scan_agreement(std::uint64_t seed, std::size_t cases, std::size_t scan_length);
Result config_round_trip(std::uint64_t seed, std::size_t cases);
Result pipeline_contract(std::uint64_t seed, std::size_t cases);

}  // namespace properties
