#include "freeknot/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "freeknot/bracket.hpp"
#include "freeknot/errors.hpp"
#include "freeknot/io.hpp"

namespace freeknot {

namespace {

std::uint64_t row_seed(std::uint64_t seed, std::uint64_t row) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (row + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TrivalentGraph load_graph(const PipelineSource& src, std::uint64_t seed) {
  switch (src.kind) {
    case PipelineSource::Kind::builtin: {
      auto g = builtin_trivalent(src.value);
      if (!g) throw ValidationError("unknown builtin graph '" + src.value + "'");
      return *g;
    }
    case PipelineSource::Kind::tg_file: {
      std::ifstream in(src.value);
      if (!in) throw ValidationError("cannot open '" + src.value + "'");
      return read_tg(in, src.value);
    }
    case PipelineSource::Kind::random_cubic:
      return random_cubic(src.number, seed);
    default:
      throw InternalError("not a graph source");
  }
}

void fill_graph_row(ReportRow& row, const PipelineSource& src,
                    std::uint64_t seed, std::uint64_t budget) {
  TrivalentGraph L = load_graph(src, seed);
  Lemma2Output built = lemma2(L, seed);
  row.v_L = built.stats.v_L;
  row.chords_gamma_prime = built.stats.chords_gamma_prime;
  row.chords_gamma = built.stats.chords_gamma;
  row.cl_upper = built.stats.chords_gamma;
  row.attempts = built.stats.attempts;
  row.gamma = canonical_word(built.gamma).to_string();

  CertifyOutcome cert = certify_minimal(built.gamma);
  if (!cert.ok()) {
    row.status = "refused: " + cert.refused_predicate;
    return;
  }
  row.certificate = cert.certificate->basis;

  row.cr_L = cr_graph_exact(L.graph, budget);

  ChainEvidence chain{built.gamma_prime, built.recovery, L};
  ViLowerResult vi = vi_lower_bound(chord_diagram_to_framed(built.gamma),
                                    built.gamma, chain, budget);
  row.vi_lower = vi.bound;
  row.chain = vi.links;
  row.status = "ok";
}

void fill_qr_row(ReportRow& row, const PipelineSource& src,
                 std::uint64_t budget) {
  ChordDiagram gamma = qr_diagram(src.number);
  row.chords_gamma = gamma.chord_count();
  row.cl_upper = gamma.chord_count();
  row.gamma = canonical_word(gamma).to_string();

  CertifyOutcome cert = certify_minimal(gamma);
  if (!cert.ok()) {
    row.status = "refused: " + cert.refused_predicate;
    return;
  }
  row.certificate = cert.certificate->basis;

  ViLowerResult vi = vi_lower_bound(chord_diagram_to_framed(gamma), gamma,
                                    std::nullopt, budget);
  row.vi_lower = vi.bound;
  row.chain = vi.links;
  row.status = "ok";
}

}  // namespace

CertifiedReport run_pipeline(const std::vector<PipelineSource>& sources,
                             std::uint64_t seed, std::uint64_t budget) {
  CertifiedReport report;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const PipelineSource& src = sources[k];
    ReportRow row;
    row.source = src.label;
    try {
      if (src.kind == PipelineSource::Kind::qr)
        fill_qr_row(row, src, budget);
      else
        fill_graph_row(row, src, row_seed(seed, k), budget);
    } catch (const ValidationError& e) {
      row.status = std::string("error[validation]: ") + e.what();
    } catch (const BudgetError& e) {
      row.status = std::string("error[budget]: ") + e.what();
    } catch (const InternalError& e) {
      row.status = std::string("error[internal]: ") + e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_text(const CertifiedReport& report) {
  std::vector<std::vector<std::string>> table;
  table.push_back({"source", "v_L", "chords", "cl_upper", "cr_L", "vi_lower",
                   "status"});
  for (const ReportRow& row : report.rows) {
    table.push_back(
        {row.source, std::to_string(row.v_L), std::to_string(row.chords_gamma),
         std::to_string(row.cl_upper),
         row.cr_L ? to_string(*row.cr_L) : std::string("-"),
         row.vi_lower ? to_string(*row.vi_lower) : std::string("-"),
         row.status});
  }
  std::vector<std::size_t> width(table[0].size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c)
      width[c] = std::max(width[c], line[c].size());

  std::ostringstream out;
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size())
        out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  }
  for (const ReportRow& row : report.rows) {
    if (row.chain.empty() && row.gamma.empty()) continue;
    out << row.source << ":\n";
    if (!row.gamma.empty()) out << "  diagram: " << row.gamma << '\n';
    if (!row.certificate.empty())
      out << "  certificate: " << row.certificate << '\n';
    for (const auto& link : row.chain) out << "  chain: " << link << '\n';
  }
  return out.str();
}

}  // namespace freeknot
