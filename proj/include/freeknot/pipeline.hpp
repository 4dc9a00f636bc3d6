#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freeknot/planarity.hpp"

namespace freeknot {

struct PipelineSource {
  enum class Kind { builtin, tg_file, random_cubic, qr };

  Kind kind = Kind::builtin;
  std::string label;  // how the row names itself
  std::string value;  // builtin name or file path
  int number = 0;     // qr prime or random vertex count
};

// One report row per family member. Rows produced from a graph carry the
// full inequality chain; quadratic-residue rows have no graph below them.
// cl_upper always equals chords_gamma: putting any classical crossing
// structure on the certified diagram yields a diagram with that many
// classical crossings.
struct ReportRow {
  std::string source;
  std::string status;  // "ok", "refused: ...", "error[kind]: ..."
  int v_L = 0;
  int chords_gamma_prime = 0;
  int chords_gamma = 0;
  int cl_upper = 0;
  int attempts = 0;
  std::string gamma;        // canonical word of the certified diagram
  std::string certificate;  // certificate basis, empty when refused
  std::optional<CrossingBound> cr_L;
  std::optional<CrossingBound> vi_lower;
  std::vector<std::string> chain;  // provenance, one line per link
};

struct CertifiedReport {
  std::vector<ReportRow> rows;
};

// Builds, certifies and bounds each family member in input order. Per-row
// failures land in the row's status and the run continues. Deterministic
// for a fixed seed: row k uses a seed derived from `seed` and k alone.
CertifiedReport run_pipeline(const std::vector<PipelineSource>& sources,
                             std::uint64_t seed, std::uint64_t budget);

// Human-readable table followed by the per-row inequality chains.
std::string render_text(const CertifiedReport& report);

}  // namespace freeknot
