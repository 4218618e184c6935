#pragma once

// JSON and Graphviz renderings of M_w. Output is byte-stable for a given
// permutation and schema version.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mposet/join_irr.hpp"

namespace mposet {

inline constexpr std::string_view kSchemaVersion = "1";

struct ExportWitness {
  std::string kind;
  std::vector<Label> labels;
  friend bool operator==(const ExportWitness&, const ExportWitness&) = default;
};

struct ExportDocument {
  std::string schema_version{kSchemaVersion};
  std::vector<int> omega;
  std::vector<MElement> elements;
  /// (lower, upper) indices into elements; the transitive reduction.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  bool b2_free = true;
  std::optional<ExportWitness> witness;

  friend bool operator==(const ExportDocument&, const ExportDocument&) = default;
};

ExportDocument make_export(const MPoset& m);
std::string to_json(const ExportDocument& doc);
/// Throws InvalidInput on malformed documents.
ExportDocument export_from_json(std::string_view text);

/// Hasse diagram, edges pointing from lower to upper element.
std::string to_dot(const MPoset& m);

}  // namespace mposet
