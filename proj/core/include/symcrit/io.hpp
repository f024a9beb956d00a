#ifndef SYMCRIT_IO_HPP
#define SYMCRIT_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcrit/driver.hpp"

namespace symcrit {

/// One row of the "pruned" list in a result file.
struct PrunedNote {
  Partition lambda;
  std::string reason;
};

/// Parsed result file: either per-type entries or one whole-space
/// parametrization under "naive".
struct LoadedOutput {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<OrbitEntry> entries;
  std::optional<ZeroDimParam> naive;
  std::vector<PrunedNote> pruned;
};

ProblemInstance parse_problem(const std::string& text);
ProblemInstance load_problem(const std::string& path);
std::string problem_to_json(const ProblemInstance& prob);

LoadedOutput parse_output(const std::string& text);
LoadedOutput load_output(const std::string& path);
std::string representation_to_json(const SymmetricRepresentation& rep,
                                   const PrimeField& field);
std::string naive_to_json(const ZeroDimParam& param, std::uint64_t seed,
                          const PrimeField& field);

/// "1^2 2^1" form, as printed by Partition::str().
Partition partition_from_text(const std::string& text);

}  // namespace symcrit

#endif
