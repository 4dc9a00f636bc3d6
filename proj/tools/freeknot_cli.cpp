#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "freeknot/bracket.hpp"
#include "freeknot/chord_diagram.hpp"
#include "freeknot/construct.hpp"
#include "freeknot/errors.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/io.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/multigraph.hpp"
#include "freeknot/parity.hpp"
#include "freeknot/pipeline.hpp"
#include "freeknot/planarity.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
  std::string format = "text";

  bool records() const { return format == "records"; }
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--seed", opt.seed, "seed for every random choice")
      ->capture_default_str();
  cmd->add_option("--budget", opt.budget, "work budget for searches")
      ->capture_default_str();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

freeknot::ChordDiagram diagram_from(const std::vector<std::string>& words) {
  return freeknot::parse_dow(join(words));
}

std::string show_word(const freeknot::ChordDiagram& cd) {
  return cd.empty() ? "circle" : cd.to_string();
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw freeknot::ValidationError("cannot open '" + path + "'");
  return in;
}

const char* kind_name(freeknot::BoundKind kind) {
  switch (kind) {
    case freeknot::BoundKind::exact:
      return "exact";
    case freeknot::BoundKind::lower_bound:
      return "lower-bound";
    case freeknot::BoundKind::upper_bound:
      return "upper-bound";
    case freeknot::BoundKind::exhausted:
      return "exhausted";
  }
  return "?";
}

json bound_json(const freeknot::CrossingBound& b) {
  return json{{"kind", kind_name(b.kind)},
              {"value", b.value},
              {"witness", b.witness}};
}

int run_parity(const freeknot::ChordDiagram& cd, const Options& opt) {
  bool odd = freeknot::is_odd(cd);
  bool irr = freeknot::is_irreducibly_odd(cd);
  for (int c = 0; c < cd.chord_count(); ++c) {
    bool chord_odd =
        freeknot::chord_parity(cd, c) == freeknot::Parity::odd;
    int deg = freeknot::interlacement_degree(cd, c);
    if (opt.records())
      std::cout << json{{"chord", cd.chord_name(c)},
                        {"parity", chord_odd ? "odd" : "even"},
                        {"degree", deg}}
                << '\n';
    else
      std::cout << cd.chord_name(c) << ' ' << (chord_odd ? "odd" : "even")
                << ' ' << deg << '\n';
  }
  if (opt.records())
    std::cout << json{{"odd", odd}, {"irreducibly_odd", irr}} << '\n';
  else
    std::cout << "odd " << (odd ? "yes" : "no") << "\nirreducibly-odd "
              << (irr ? "yes" : "no") << '\n';
  return 0;
}

int run_moves(const freeknot::ChordDiagram& cd, const Options& opt) {
  for (const freeknot::MoveSite& site : freeknot::find_moves(cd)) {
    if (opt.records())
      std::cout << json{{"site", site.to_spec(cd)}} << '\n';
    else
      std::cout << site.to_spec(cd) << '\n';
  }
  return 0;
}

int run_apply(const freeknot::ChordDiagram& cd, const std::string& spec,
              const Options& opt) {
  freeknot::MoveSite site = freeknot::parse_move_site(cd, spec);
  freeknot::ChordDiagram out = freeknot::apply_move(cd, site);
  if (opt.records())
    std::cout << json{{"word", out.to_string()}} << '\n';
  else
    std::cout << show_word(out) << '\n';
  return 0;
}

int run_reduce(const freeknot::ChordDiagram& cd, const Options& opt) {
  freeknot::ChordDiagram out = freeknot::reduce_r2(cd);
  if (opt.records())
    std::cout << json{{"word", out.to_string()}} << '\n';
  else
    std::cout << show_word(out) << '\n';
  return 0;
}

int run_bracket(const freeknot::ChordDiagram& cd, const Options& opt) {
  freeknot::BracketValue value = freeknot::bracket(cd);
  if (opt.records()) {
    json classes = json::array();
    for (const auto& cls : value.classes) classes.push_back(cls);
    std::cout << json{{"classes", classes}} << '\n';
  } else {
    std::cout << value.to_string() << '\n';
  }
  return 0;
}

int run_certify(const freeknot::ChordDiagram& cd, const Options& opt) {
  freeknot::CertifyOutcome outcome = freeknot::certify_minimal(cd);
  if (opt.records()) {
    json row{{"certified", outcome.ok()}};
    if (outcome.ok()) {
      row["diagram"] = outcome.certificate->diagram;
      row["vertices"] = outcome.certificate->vertex_count;
      row["basis"] = outcome.certificate->basis;
      row["checked"] = outcome.certificate->checked;
    } else {
      row["refused"] = outcome.refused_predicate;
    }
    std::cout << row << '\n';
    return 0;
  }
  if (!outcome.ok()) {
    std::cout << "refused: " << outcome.refused_predicate << '\n';
    return 0;
  }
  std::cout << "certified\n";
  std::cout << "diagram: " << outcome.certificate->diagram << '\n';
  std::cout << "vertices: " << outcome.certificate->vertex_count << '\n';
  std::cout << "basis: " << outcome.certificate->basis << '\n';
  for (const auto& line : outcome.certificate->checked)
    std::cout << "checked: " << line << '\n';
  return 0;
}

int run_fuzz(const freeknot::ChordDiagram& cd, int moves, int max_chords,
             const Options& opt) {
  freeknot::FuzzReport report =
      freeknot::fuzz_invariance(cd, moves, opt.seed, max_chords);
  if (opt.records()) {
    std::cout << json{{"moves_requested", report.moves_requested},
                      {"moves_applied", report.moves_applied},
                      {"invariant_held", report.invariant_held},
                      {"first_mismatch", report.first_mismatch},
                      {"reference", report.reference},
                      {"final_diagram", report.final_diagram},
                      {"stuck", report.stuck}}
              << '\n';
  } else {
    std::cout << "moves requested: " << report.moves_requested << '\n';
    std::cout << "moves applied: " << report.moves_applied << '\n';
    std::cout << "reference bracket: " << report.reference << '\n';
    std::cout << "final diagram: " << report.final_diagram << '\n';
    if (report.stuck) std::cout << "stuck: no applicable move fit the cap\n";
    if (report.invariant_held)
      std::cout << "invariant held: yes\n";
    else
      std::cout << "invariant held: NO, first mismatch at step "
                << report.first_mismatch << '\n';
  }
  if (!report.invariant_held) {
    std::cerr << "error: bracket changed along the walk\n";
    return 4;
  }
  return 0;
}

int run_lemma2(const freeknot::TrivalentGraph& L, int retries,
               const Options& opt) {
  freeknot::Lemma2Output out = freeknot::lemma2(L, opt.seed, retries);
  auto variant_name = [](freeknot::SmoothVariant v) {
    return v == freeknot::SmoothVariant::join_01_23 ? "join-01-23"
                                                    : "join-03-12";
  };
  if (opt.records()) {
    json pairing = json::array();
    for (auto [a, b] : out.pairing)
      pairing.push_back(std::to_string(a) + "-" + std::to_string(b));
    json flanking = json::object();
    for (const auto& [host, smalls] : out.small_chords)
      flanking[host] = smalls;
    json recovery = json::array();
    for (const auto& choice : out.recovery)
      recovery.push_back(out.gamma.chord_name(choice.vertex) + ":" +
                         variant_name(choice.variant));
    std::cout << json{{"vertices", out.stats.v_L},
                      {"gamma_prime", out.gamma_prime.to_string()},
                      {"gamma", out.gamma.to_string()},
                      {"chords_gamma_prime", out.stats.chords_gamma_prime},
                      {"chords_gamma", out.stats.chords_gamma},
                      {"attempts", out.stats.attempts},
                      {"pairing", pairing},
                      {"flanking", flanking},
                      {"recovery", recovery}}
              << '\n';
    return 0;
  }
  std::cout << "graph vertices: " << out.stats.v_L << '\n';
  std::cout << "gamma_prime: " << out.gamma_prime.to_string() << '\n';
  std::cout << "gamma: " << out.gamma.to_string() << '\n';
  std::cout << "chords: " << out.stats.chords_gamma << " (cap "
            << 3 * out.stats.v_L << ")\n";
  std::cout << "attempts: " << out.stats.attempts << '\n';
  std::cout << "pairing:";
  for (auto [a, b] : out.pairing) std::cout << ' ' << a << '-' << b;
  std::cout << '\n';
  for (const auto& [host, smalls] : out.small_chords) {
    std::cout << "flanking " << host << ":";
    for (const auto& s : smalls) std::cout << ' ' << s;
    std::cout << '\n';
  }
  std::cout << "recovery:";
  for (const auto& choice : out.recovery)
    std::cout << ' ' << out.gamma.chord_name(choice.vertex) << ':'
              << variant_name(choice.variant);
  std::cout << '\n';
  return 0;
}

int run_crossing(const std::string& path, const Options& opt) {
  std::ifstream in = open_file(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  std::string head;
  {
    std::istringstream peek(text);
    std::string line;
    while (std::getline(peek, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream toks(line);
      if (toks >> head) break;
    }
  }
  freeknot::CrossingBound bound;
  if (head == "fg") {
    std::istringstream body(text);
    freeknot::FramedFourGraph g = freeknot::read_fg(body, path);
    bound = freeknot::cr_framed_exact(g, opt.budget);
  } else if (head == "tg") {
    std::istringstream body(text);
    freeknot::MultiGraph g = freeknot::read_graph(body, path);
    bound = freeknot::cr_graph_exact(g, opt.budget);
  } else {
    throw freeknot::ValidationError(path +
                                    ": expected an 'fg' or 'tg' header");
  }
  if (opt.records())
    std::cout << bound_json(bound) << '\n';
  else
    std::cout << freeknot::to_string(bound) << '\n';
  return bound.kind == freeknot::BoundKind::exhausted ? 3 : 0;
}

int run_vibound(const freeknot::ChordDiagram& gamma,
                const std::optional<std::string>& graph_path,
                const Options& opt) {
  std::optional<freeknot::ChainEvidence> chain;
  if (graph_path) {
    std::ifstream in = open_file(*graph_path);
    freeknot::TrivalentGraph L = freeknot::read_tg(in, *graph_path);
    auto [gamma_prime, recovery] = freeknot::reconstruct_descent(gamma, L);
    chain = freeknot::ChainEvidence{std::move(gamma_prime),
                                    std::move(recovery), std::move(L)};
  }
  freeknot::ViLowerResult res = freeknot::vi_lower_bound(
      freeknot::chord_diagram_to_framed(gamma), gamma, chain, opt.budget);
  if (opt.records()) {
    std::cout << json{{"bound", res.bound.value},
                      {"witness", res.bound.witness},
                      {"links", res.links}}
              << '\n';
  } else {
    std::cout << "vi lower bound: " << res.bound.value << '\n';
    for (const auto& link : res.links) std::cout << "chain: " << link << '\n';
  }
  return 0;
}

int run_pipeline_cmd(const std::vector<std::string>& builtins,
                     const std::vector<std::string>& files,
                     const std::vector<int>& qr_primes,
                     const std::vector<int>& randoms, const Options& opt) {
  std::vector<freeknot::PipelineSource> sources;
  for (const auto& name : builtins)
    sources.push_back({freeknot::PipelineSource::Kind::builtin, name, name, 0});
  for (const auto& path : files)
    sources.push_back({freeknot::PipelineSource::Kind::tg_file, path, path, 0});
  for (int p : qr_primes)
    sources.push_back({freeknot::PipelineSource::Kind::qr,
                       "qr" + std::to_string(p), "", p});
  for (int n : randoms)
    sources.push_back({freeknot::PipelineSource::Kind::random_cubic,
                       "random" + std::to_string(n), "", n});

  freeknot::CertifiedReport report =
      freeknot::run_pipeline(sources, opt.seed, opt.budget);
  if (opt.records()) {
    for (const auto& row : report.rows) {
      json rec{{"source", row.source},
               {"status", row.status},
               {"v_L", row.v_L},
               {"chords_gamma_prime", row.chords_gamma_prime},
               {"chords_gamma", row.chords_gamma},
               {"cl_upper", row.cl_upper},
               {"gamma", row.gamma},
               {"certificate", row.certificate},
               {"chain", row.chain},
               {"attempts", row.attempts}};
      rec["cr_L"] = row.cr_L ? bound_json(*row.cr_L) : json();
      rec["vi_lower"] = row.vi_lower ? bound_json(*row.vi_lower) : json();
      std::cout << rec << '\n';
    }
  } else {
    std::cout << freeknot::render_text(report);
  }
  return 0;
}

int run_export_dot(const std::vector<std::string>& dow,
                   const std::string& fg_path,
                   const std::vector<std::string>& inter,
                   const Options& opt) {
  (void)opt;
  int given = (!dow.empty() ? 1 : 0) + (!fg_path.empty() ? 1 : 0) +
              (!inter.empty() ? 1 : 0);
  if (given != 1)
    throw freeknot::ValidationError(
        "pass exactly one of --dow, --fg, --interlacement");
  if (!dow.empty()) {
    std::cout << freeknot::export_dot(diagram_from(dow));
  } else if (!fg_path.empty()) {
    std::ifstream in = open_file(fg_path);
    std::cout << freeknot::export_dot(freeknot::read_fg(in, fg_path));
  } else {
    std::cout << freeknot::export_dot(
        freeknot::interlacement(diagram_from(inter)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parity invariants, minimality certificates and crossing "
               "bounds for free knots"};
  app.require_subcommand(1);
  Options opt;
  add_common(&app, opt);

  std::vector<std::string> word;
  std::string site_spec;
  int fuzz_moves = 100;
  int fuzz_cap = 10;
  int qr_prime = 0;
  std::string graph_file;
  int random_n = 0;
  std::string builtin_name;
  int retries = 64;
  std::string path_arg;
  std::string vibound_gamma;
  std::string vibound_graph;
  std::vector<std::string> pipe_builtins, pipe_files;
  std::vector<int> pipe_qr, pipe_random;
  std::vector<std::string> dot_dow, dot_inter;
  std::string dot_fg;
  std::string gauss_code;

  CLI::App* parity = app.add_subcommand(
      "parity", "per-chord parity table and the odd verdicts");
  parity->add_option("word", word, "double occurrence word")->required();
  add_common(parity, opt);

  CLI::App* moves = app.add_subcommand("moves", "list applicable move sites");
  moves->add_option("word", word, "double occurrence word");
  add_common(moves, opt);

  CLI::App* apply =
      app.add_subcommand("apply", "apply one move site to a diagram");
  apply->add_option("word", word,
                    "double occurrence word, then the site spec unless "
                    "--site is given")
      ->required();
  apply->add_option("--site", site_spec, "site spec such as r2-:A,B");
  add_common(apply, opt);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "canonical minimal representative under decreasing R2");
  reduce->add_option("word", word, "double occurrence word");
  add_common(reduce, opt);

  CLI::App* bracket =
      app.add_subcommand("bracket", "smoothing-sum invariant of a diagram");
  bracket->add_option("word", word, "double occurrence word");
  add_common(bracket, opt);

  CLI::App* certify = app.add_subcommand(
      "certify", "minimality certificate or the failing predicate");
  certify->add_option("word", word, "double occurrence word")->required();
  add_common(certify, opt);

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "random move walk checking bracket invariance");
  fuzz->add_option("word", word, "double occurrence word")->required();
  fuzz->add_option("--moves", fuzz_moves, "moves to attempt")
      ->capture_default_str();
  fuzz->add_option("--max-chords", fuzz_cap, "size cap for additions")
      ->capture_default_str();
  add_common(fuzz, opt);

  CLI::App* qr = app.add_subcommand(
      "qr", "inverse-pair diagram on the residues of a prime");
  qr->add_option("p", qr_prime, "prime, at least 7")->required();
  add_common(qr, opt);

  CLI::App* lemma2 = app.add_subcommand(
      "lemma2", "odd diagram construction from a trivalent graph");
  lemma2->add_option("--graph", graph_file, "tg file");
  lemma2->add_option("--random", random_n, "random cubic graph size");
  lemma2->add_option("--builtin", builtin_name, "k4, prism3 or petersen");
  lemma2->add_option("--retries", retries, "pairing attempts")
      ->capture_default_str();
  add_common(lemma2, opt);

  CLI::App* import_virtual = app.add_subcommand(
      "import-virtual", "forget decorations of a signed Gauss code");
  import_virtual->add_option("code", word, "tokens such as O1+ U2- O2- U1+")
      ->required();
  add_common(import_virtual, opt);

  CLI::App* planar =
      app.add_subcommand("planar", "framed planarity of an fg file");
  planar->add_option("file", path_arg, "fg file")->required();
  add_common(planar, opt);

  CLI::App* genus =
      app.add_subcommand("genus", "minimal genus over rotation systems");
  genus->add_option("file", path_arg, "fg file")->required();
  add_common(genus, opt);

  CLI::App* crossing = app.add_subcommand(
      "crossing", "exact crossing number of an fg or tg file");
  crossing->add_option("file", path_arg, "fg or tg file")->required();
  add_common(crossing, opt);

  CLI::App* vibound = app.add_subcommand(
      "vibound", "lower bound for virtual crossings over a certified "
                 "diagram");
  vibound->add_option("--gamma", vibound_gamma, "double occurrence word")
      ->required();
  vibound->add_option("--graph", vibound_graph,
                      "tg file under the diagram, chord names must name its "
                      "vertices");
  add_common(vibound, opt);

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "build, certify and bound a family of examples");
  pipeline->add_option("--builtin", pipe_builtins, "builtin graph names")
      ->delimiter(',');
  pipeline->add_option("--graphs", pipe_files, "tg files")->delimiter(',');
  pipeline->add_option("--qr", pipe_qr, "primes")->delimiter(',');
  pipeline->add_option("--random", pipe_random, "random cubic sizes")
      ->delimiter(',');
  add_common(pipeline, opt);

  CLI::App* export_dot_cmd =
      app.add_subcommand("export-dot", "DOT text for a diagram, framed "
                                       "graph or interlacement graph");
  export_dot_cmd->add_option("--dow", dot_dow, "double occurrence word");
  export_dot_cmd->add_option("--fg", dot_fg, "fg file");
  export_dot_cmd->add_option("--interlacement", dot_inter,
                             "double occurrence word");
  add_common(export_dot_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (parity->parsed()) return run_parity(diagram_from(word), opt);
    if (moves->parsed()) return run_moves(diagram_from(word), opt);
    if (apply->parsed()) {
      std::vector<std::string> tokens = word;
      std::string spec = site_spec;
      if (spec.empty()) {
        if (tokens.empty())
          throw freeknot::ValidationError("missing site spec");
        spec = tokens.back();
        tokens.pop_back();
      }
      return run_apply(diagram_from(tokens), spec, opt);
    }
    if (reduce->parsed()) return run_reduce(diagram_from(word), opt);
    if (bracket->parsed()) return run_bracket(diagram_from(word), opt);
    if (certify->parsed()) return run_certify(diagram_from(word), opt);
    if (fuzz->parsed())
      return run_fuzz(diagram_from(word), fuzz_moves, fuzz_cap, opt);
    if (qr->parsed()) {
      std::cout << freeknot::qr_diagram(qr_prime).to_string() << '\n';
      return 0;
    }
    if (lemma2->parsed()) {
      int picked = (graph_file.empty() ? 0 : 1) + (random_n > 0 ? 1 : 0) +
                   (builtin_name.empty() ? 0 : 1);
      if (picked != 1)
        throw freeknot::ValidationError(
            "pass exactly one of --graph, --random, --builtin");
      freeknot::TrivalentGraph L = [&] {
        if (!graph_file.empty()) {
          std::ifstream in = open_file(graph_file);
          return freeknot::read_tg(in, graph_file);
        }
        if (random_n > 0) return freeknot::random_cubic(random_n, opt.seed);
        auto g = freeknot::builtin_trivalent(builtin_name);
        if (!g)
          throw freeknot::ValidationError("unknown builtin graph '" +
                                          builtin_name + "'");
        return *g;
      }();
      return run_lemma2(L, retries, opt);
    }
    if (import_virtual->parsed()) {
      freeknot::ChordDiagram cd = freeknot::virtual_to_free(join(word));
      if (opt.records())
        std::cout << json{{"word", cd.to_string()}} << '\n';
      else
        std::cout << show_word(cd) << '\n';
      return 0;
    }
    if (planar->parsed()) {
      std::ifstream in = open_file(path_arg);
      bool flat = freeknot::is_planar_framed(freeknot::read_fg(in, path_arg));
      if (opt.records())
        std::cout << json{{"planar", flat}} << '\n';
      else
        std::cout << "planar " << (flat ? "yes" : "no") << '\n';
      return 0;
    }
    if (genus->parsed()) {
      std::ifstream in = open_file(path_arg);
      int g = freeknot::genus_min(freeknot::read_fg(in, path_arg));
      if (opt.records())
        std::cout << json{{"genus", g}} << '\n';
      else
        std::cout << "genus " << g << '\n';
      return 0;
    }
    if (crossing->parsed()) return run_crossing(path_arg, opt);
    if (vibound->parsed()) {
      std::optional<std::string> graph;
      if (!vibound_graph.empty()) graph = vibound_graph;
      return run_vibound(freeknot::parse_dow(vibound_gamma), graph, opt);
    }
    if (pipeline->parsed())
      return run_pipeline_cmd(pipe_builtins, pipe_files, pipe_qr, pipe_random,
                              opt);
    if (export_dot_cmd->parsed())
      return run_export_dot(dot_dow, dot_fg, dot_inter, opt);
    throw freeknot::InternalError("no subcommand dispatched");
  } catch (const freeknot::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const freeknot::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const freeknot::InternalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
