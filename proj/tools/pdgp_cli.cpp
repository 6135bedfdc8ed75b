// pdgp: command-line front end for the partial-dual genus polynomial library.
//
// Exit codes: 0 ok, 2 bad input, 3 size cap exceeded, 4 coefficient overflow,
// 5 verification mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdgp/pdgp.hpp"
#include "pdgp/polynomial_json.hpp"

namespace {

using namespace pdgp;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitOverflow = 4;
constexpr int kExitMismatch = 5;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeCapExceeded: return kExitCap;
    case ErrorKind::Overflow: return kExitOverflow;
    default: return kExitParse;
  }
}

struct GraphSource {
  std::string file;
  std::optional<int> n;
  std::string edges;
  std::string gen;
  std::string word;
};

struct Globals {
  unsigned threads = 0;
  std::optional<int> cap;
  bool json = false;

  EnumOptions options() const { return EnumOptions{threads, cap}; }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

template <typename T>
T parse_number(const std::string& s, const std::string& context) {
  std::istringstream in(s);
  T v;
  if (!(in >> v) || !(in >> std::ws).eof()) throw Error(ErrorKind::ParseError, "bad number '" + s + "' in " + context);
  return v;
}

/// kn:n, kmn:m,n, path:n, cycle:n, empty:n, random:n,p,seed
SimpleGraph generate(const std::string& desc) {
  const auto colon = desc.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "generator '" + desc + "' lacks ':'");
  const std::string kind = desc.substr(0, colon);
  const std::vector<std::string> args = split(desc.substr(colon + 1), ',');
  auto want = [&](std::size_t count) {
    if (args.size() != count)
      throw Error(ErrorKind::ParseError, "generator '" + kind + "' takes " + std::to_string(count) + " argument(s)");
  };
  auto int_arg = [&](std::size_t i) { return parse_number<int>(args[i], desc); };
  if (kind == "kn") return want(1), complete_graph(int_arg(0));
  if (kind == "kmn") return want(2), complete_bipartite(int_arg(0), int_arg(1));
  if (kind == "path") return want(1), path_graph(int_arg(0));
  if (kind == "cycle") return want(1), cycle_graph(int_arg(0));
  if (kind == "empty") return want(1), empty_graph(int_arg(0));
  if (kind == "random") {
    want(3);
    return random_graph(int_arg(0), parse_number<double>(args[1], desc), parse_number<std::uint64_t>(args[2], desc));
  }
  throw Error(ErrorKind::ParseError, "unknown generator '" + kind + "'");
}

SimpleGraph load_graph(const GraphSource& src) {
  const int sources = !src.file.empty() + src.n.has_value() + !src.gen.empty() + !src.word.empty();
  if (sources != 1)
    throw Error(ErrorKind::ParseError, "give exactly one input: --file, --n/--edges, --gen or --word");
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + src.file);
    return read_graph(in);
  }
  if (src.n) return parse_inline_edges(*src.n, src.edges);
  if (!src.gen.empty()) return generate(src.gen);
  return intersection_graph(parse_word(src.word));
}

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--file", src.file, "Graph file (first line n, then 'u v' per edge)");
  cmd->add_option("--n", src.n, "Vertex count for --edges");
  cmd->add_option("--edges", src.edges, "Inline edges 'u-v,u-v,...' (0-indexed)");
  cmd->add_option("--gen", src.gen, "Generator: kn:n, kmn:m,n, path:n, cycle:n, empty:n, random:n,p,seed");
  cmd->add_option("--word", src.word, "Chord word; the graph is its intersection graph");
}

std::string render(const InvariantValue& v, char var, bool json) {
  if (!json) return to_string(v, var);
  if (const auto* u = std::get_if<UniPoly>(&v)) return to_json(*u, var).dump();
  return to_json(std::get<BiPoly>(v)).dump();
}

std::string sweep_line(const SweepReport& r, const std::string& what) {
  std::string line = what + ", " + std::to_string(r.failures) + (r.failures == 1 ? " defect" : " defects");
  if (!r.failures_by_label.empty()) {
    std::string parts;
    for (const auto& [label, count] : r.failures_by_label)
      parts += (parts.empty() ? "" : ", ") + label + ": " + std::to_string(count);
    line += " (" + parts + ")";
  }
  if (!r.ok()) line += "\n  first: " + r.first_failure;
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-dual genus polynomial of graphs and chord diagrams"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  int cap_override = 0;
  app.add_option("--threads", globals.threads, "Worker threads (default: available parallelism)")
      ->envname("PDGP_THREADS")
      ->check(CLI::PositiveNumber);
  auto* cap_opt = app.add_option("--cap", cap_override, "Override every size cap")->check(CLI::Range(0, kMaxVertices));
  app.add_flag("--json", globals.json, "JSON output");

  // compute
  GraphSource compute_src;
  std::string compute_invariant_name = "pdgp";
  int compute_k = 2;
  bool compute_unordered = false;
  auto* compute = app.add_subcommand("compute", "Compute a graph invariant");
  add_graph_source(compute, compute_src);
  compute->add_option("--invariant", compute_invariant_name, "pdgp, refined, skew, refined-skew, skew-nd, kpart, rank, recursive");
  compute->add_option("--k", compute_k, "Block count for kpart");
  compute->add_flag("--unordered", compute_unordered, "kpart over unordered partitions (divides by k!)");

  // chord
  std::string chord_word;
  std::string chord_via = "both";
  auto* chord = app.add_subcommand("chord", "Partial-dual genus polynomial of a chord diagram");
  chord->add_option("--word", chord_word, "Double-occurrence word, e.g. ABAB or '1 2 1 2'")->required();
  chord->add_option("--via", chord_via, "rank, ribbon or both")->check(CLI::IsMember({"rank", "ribbon", "both"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive and seeded verification sweeps");
  verify->require_subcommand(1);
  int ft_nmax = 5, ft_random = 0, ft_random_nmax = 10;
  std::uint64_t seed = 1;
  verify->add_option("--seed", seed, "Seed for randomized sweeps");
  auto* fourterm = verify->add_subcommand("fourterm", "Four-term relation for pdgp, refined, skew, refined-skew");
  fourterm->add_option("--nmax", ft_nmax, "Largest order swept exhaustively")->check(CLI::Range(2, 8));
  fourterm->add_option("--random", ft_random, "Additional random graphs");
  fourterm->add_option("--random-nmax", ft_random_nmax, "Largest order of random graphs")->check(CLI::Range(2, 24));
  int chords_max = 5;
  auto* theorem1 = verify->add_subcommand("theorem1", "Ribbon face tracing against the rank formula");
  theorem1->add_option("--chords-max", chords_max, "Largest chord count")->check(CLI::Range(0, 7));
  auto* beck = verify->add_subcommand("beck", "Boundary components of a bouquet against corank + 1");
  beck->add_option("--chords-max", chords_max, "Largest chord count")->check(CLI::Range(0, 7));
  int rec_nmax = 6, rec_random = 0, rec_random_nmax = 14;
  auto* recurrence = verify->add_subcommand("recurrence", "Degree-one recursion against direct enumeration");
  recurrence->add_option("--nmax", rec_nmax, "Largest order swept exhaustively")->check(CLI::Range(0, 8));
  recurrence->add_option("--random", rec_random, "Additional random graphs with a leaf");
  recurrence->add_option("--random-nmax", rec_random_nmax, "Largest order of random graphs")->check(CLI::Range(2, 24));

  // project
  GraphSource project_src;
  std::string project_invariant_name = "pdgp";
  auto* project = app.add_subcommand("project", "Evaluate a multiplicative invariant on the primitive projection");
  add_graph_source(project, project_src);
  project->add_option("--invariant", project_invariant_name, "pdgp, refined, skew, refined-skew, skew-nd, rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  if (*cap_opt) {
    globals.cap = cap_override;
    std::cerr << "warning: size caps overridden to " << cap_override << "\n";
  }

  // Everything is rendered into `out` first so failures print nothing on stdout.
  std::string out;
  int status = kExitOk;
  try {
    if (*compute) {
      const auto f = parse_invariant(compute_invariant_name);
      if (!f) throw Error(ErrorKind::ParseError, "unknown invariant '" + compute_invariant_name + "'");
      if (!compute_src.gen.empty() && compute_src.gen.rfind("random:", 0) == 0)
        std::cerr << "# " << compute_src.gen << " rng=" << Rng::kVersion << "\n";
      const SimpleGraph g = load_graph(compute_src);
      const auto value = compute_invariant(*f, g, globals.options(), compute_k,
                                           compute_unordered ? BlockOrder::unordered : BlockOrder::ordered);
      out = render(value, variable_of(*f), globals.json) + "\n";
    } else if (*chord) {
      const ChordDiagram d = parse_word(chord_word);
      const EnumOptions opts = globals.options();
      std::optional<UniPoly> by_rank, by_ribbon;
      if (chord_via != "ribbon") by_rank = pdgp::pdgp(intersection_graph(d), opts);
      if (chord_via != "rank") by_ribbon = pdgp_via_ribbon(d, opts.threads, opts.cap_or(kDefaultRibbonChordCap));
      const bool both = by_rank && by_ribbon;
      const bool match = both && *by_rank == *by_ribbon;
      if (globals.json) {
        nlohmann::ordered_json j;
        j["word"] = d.to_string();
        if (by_rank) j["rank"] = to_json(*by_rank);
        if (by_ribbon) j["ribbon"] = to_json(*by_ribbon);
        if (both) j["match"] = match;
        out = j.dump() + "\n";
      } else if (both) {
        out = "rank:   " + to_string(*by_rank) + "\nribbon: " + to_string(*by_ribbon) + "\n" +
              (match ? "MATCH" : "MISMATCH") + "\n";
      } else {
        out = to_string(by_rank ? *by_rank : *by_ribbon) + "\n";
      }
      if (both && !match) status = kExitMismatch;
    } else if (*verify) {
      SweepReport total;
      if (*fourterm) {
        for (int n = 2; n <= ft_nmax; ++n) {
          const SweepReport r = verify_four_term_exhaustive(n);
          out += "n=" + std::to_string(n) + ": " +
                 sweep_line(r, std::to_string(r.items) + " graphs × " + std::to_string(n * (n - 1)) + " pairs × " +
                                   std::to_string(kFourTermInvariants.size()) + " invariants") +
                 "\n";
          total.absorb(r);
        }
        if (ft_random > 0) {
          const SweepReport r = verify_four_term_random(ft_random, ft_random_nmax, seed);
          out += "random: " +
                 sweep_line(r, std::to_string(r.items) + " graphs (n ≤ " + std::to_string(ft_random_nmax) + ", seed " +
                                   std::to_string(seed) + ") × 1 pair × " +
                                   std::to_string(kFourTermInvariants.size()) + " invariants") +
                 "\n";
          total.absorb(r);
        }
      } else if (*theorem1 || *beck) {
        const bool is_beck = beck->parsed();
        for (int m = 1; m <= chords_max; ++m) {
          const SweepReport r = is_beck ? verify_beck(m) : verify_theorem1(m);
          out += "m=" + std::to_string(m) + ": " + std::to_string(r.items) + " diagrams, " +
                 std::to_string(r.failures) + (r.failures == 1 ? " mismatch" : " mismatches") + "\n";
          if (!r.ok()) out += "  first: " + r.first_failure + "\n";
          total.absorb(r);
        }
      } else if (*recurrence) {
        for (int n = 0; n <= rec_nmax; ++n) {
          const SweepReport r = verify_recurrence_exhaustive(n);
          out += "n=" + std::to_string(n) + ": " + sweep_line(r, std::to_string(r.items) + " graphs") + "\n";
          total.absorb(r);
        }
        if (rec_random > 0) {
          const SweepReport r = verify_recurrence_random(rec_random, rec_random_nmax, seed);
          out += "random: " +
                 sweep_line(r, std::to_string(r.items) + " graphs with a leaf (n ≤ " + std::to_string(rec_random_nmax) +
                                   ", seed " + std::to_string(seed) + ")") +
                 "\n";
          total.absorb(r);
        }
      }
      out += "total: " + std::to_string(total.checks) + " checks, " + std::to_string(total.failures) + " failures\n";
      if (!total.ok()) status = kExitMismatch;
    } else if (*project) {
      const auto f = parse_invariant(project_invariant_name);
      if (!f) throw Error(ErrorKind::ParseError, "unknown invariant '" + project_invariant_name + "'");
      const SimpleGraph g = load_graph(project_src);
      const InvariantValue v = eval_on_projection(*f, g, globals.options());
      out = render(v, variable_of(*f), globals.json) + "\n";
      if ((*f == Invariant::skew_char || *f == Invariant::skew_char_nondegenerate) && !globals.json) {
        const auto& u = std::get<UniPoly>(v);
        const bool constant_value = u.is_zero() || (u.term_count() == 1 && u.terms().begin()->first == 0);
        out += constant_value ? "note: constant\n" : "note: non-constant\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  std::fwrite(out.data(), 1, out.size(), stdout);
  return status;
}
