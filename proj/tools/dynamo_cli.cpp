#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "dynamo/dynamo.hpp"
#include "dynamo/io.hpp"

using namespace dynamo;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kSemantic = 2;

// Usage problems found after CLI11 is done (bad generator parameters,
// unreadable files, seed ids out of range).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Parse>
auto read_file(const std::string& path, Parse parse) {
  if (path == "-") return parse(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return parse(in);
}

DirectedGraph load_graph(const std::string& path) {
  return read_file(path, [](std::istream& in) { return io::parse_graph(in); });
}

ThresholdAssignment resolve(const io::ThresholdSpec& spec, const DirectedGraph& g) {
  switch (spec.kind) {
    case io::ThresholdSpec::Kind::Strict:
      return strict_majority(g);
    case io::ThresholdSpec::Kind::Simple:
      return simple_majority(g);
    case io::ThresholdSpec::Kind::Constant:
      return ThresholdAssignment::constant(g.vertex_count(), spec.constant);
    case io::ThresholdSpec::Kind::File:
      return read_file(spec.path, [&](std::istream& in) {
        return io::parse_thresholds(in, g.vertex_count());
      });
  }
  throw std::logic_error("unreachable threshold kind");
}

std::string joined(const std::vector<Vertex>& xs) {
  std::string out;
  for (Vertex v : xs) out += " " + std::to_string(v);
  return out;
}

void print_layers(const ActivationTrace& trace) {
  for (std::size_t i = 0; i < trace.layers.size(); ++i)
    std::cout << "layer " << i << ":" << joined(trace.layers[i]) << "\n";
}

// Best permutation_dynamo over the identity, its reverse and `tries` seeded
// random orderings. No size guarantee for thresholds other than strict.
VertexSet best_permutation_dynamo(const DirectedGraph& g, const ThresholdAssignment& tau,
                                  std::size_t tries, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  Ordering sigma = Ordering::identity(n);
  VertexSet best = permutation_dynamo(g, tau, sigma);
  auto consider = [&](const Ordering& o) {
    VertexSet s = permutation_dynamo(g, tau, o);
    if (s.size() < best.size()) best = std::move(s);
  };
  consider(sigma.reversed());
  std::mt19937_64 rng(seed);
  std::vector<Vertex> seq = sigma.sequence();
  for (std::size_t i = 0; i < tries; ++i) {
    detail::portable_shuffle(seq, rng);
    consider(Ordering(seq));
  }
  return best;
}

std::size_t parse_size(const std::string& tok, const char* what) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size())
    throw UsageError(std::string("bad ") + what + " '" + tok + "'");
  return value;
}

DirectedGraph generate(const std::vector<std::string>& args) {
  auto want = [&](std::size_t k) {
    if (args.size() != k) throw UsageError("gen " + args[0] + " takes " + std::to_string(k - 1) + " argument(s)");
  };
  const std::string& kind = args.at(0);
  if (kind == "k5") {
    want(1);
    return two_regular_k5();
  }
  if (kind == "gk") {
    want(2);
    const std::size_t k = parse_size(args[1], "K");
    if (k == 0) throw UsageError("gen gk needs K >= 1");
    return lower_bound_family(k);
  }
  if (kind == "bidi") {
    want(2);
    const std::size_t n = parse_size(args[1], "N");
    if (n < 2) throw UsageError("gen bidi needs N >= 2");
    return bidirectional_complete(n);
  }
  if (kind == "random") {
    want(4);
    const std::size_t n = parse_size(args[1], "N");
    const std::size_t m = parse_size(args[2], "M");
    const std::uint64_t seed = parse_size(args[3], "SEED");
    if (n < 3) throw UsageError("gen random needs N >= 3");
    if (m < n || m > n * (n - 1) / 2)
      throw UsageError("gen random needs N <= M <= N(N-1)/2");
    return random_strongly_connected(n, m - n, seed);
  }
  throw UsageError("unknown generator '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic monopolies in directed graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::vector<std::string> threshold_tokens{"strict"};
  bool trace = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
    sub->add_option("-t,--threshold", threshold_tokens, "strict | simple | const K | file PATH")
        ->expected(1, 2);
  };

  auto* solve = app.add_subcommand("solve", "Small strict-majority dynamo");
  add_common(solve);
  solve->add_flag("--trace", trace, "Print activation layers");
  std::size_t tries = 64;
  std::uint64_t order_seed = 0;
  solve->add_option("--orderings", tries, "Random orderings tried for non-strict thresholds");
  solve->add_option("--order-seed", order_seed, "Seed for those orderings");

  auto* oracle = app.add_subcommand("oracle", "Exact minimum dynamo");
  add_common(oracle);
  std::size_t limit = OracleOptions{}.max_vertices;
  oracle->add_option("--limit", limit, "Largest vertex count accepted");

  auto* bounds = app.add_subcommand("bounds", "Upper and lower size bounds");
  add_common(bounds);

  auto* gen = app.add_subcommand("gen", "Emit a generated graph");
  std::vector<std::string> gen_args;
  gen->add_option("kind", gen_args, "k5 | gk K | bidi N | random N M SEED")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce an undirected graph");
  std::string reduce_kind;
  std::string tau_out;
  reduce->add_option("kind", reduce_kind, "const2 | majority")
      ->required()
      ->check(CLI::IsMember({"const2", "majority"}));
  reduce->add_option("graph", graph_path, "Undirected graph file")->required();
  reduce->add_option("--tau-out", tau_out, "Write const2 thresholds here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check a seed set");
  add_common(verify);
  std::vector<std::size_t> seeds;
  verify->add_option("--seed", seeds, "Seed vertex ids");
  verify->add_flag("--trace", trace, "Print activation layers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const io::ThresholdSpec spec = io::ThresholdSpec::parse(threshold_tokens);

    if (*solve) {
      const DirectedGraph g = load_graph(graph_path);
      const ThresholdAssignment tau = resolve(spec, g);
      const bool strict = spec.kind == io::ThresholdSpec::Kind::Strict;
      VertexSet d(g.vertex_count());
      if (strict) {
        d = strict_majority_dynamo(g);
      } else {
        std::cerr << "warning: threshold is not strict majority; using the best of "
                  << tries + 2 << " orderings with no size guarantee\n";
        d = best_permutation_dynamo(g, tau, tries, order_seed);
      }
      const ActivationTrace run = activate(g, tau, d);
      if (!run.complete) throw std::logic_error("solver output failed verification");
      const auto members = d.members();
      std::cout << "dynamo " << members.size() << ":" << joined(members) << "\n";
      if (strict) std::cout << "bound " << g.vertex_count() / 2 << "\n";
      std::cout << "verified true\n";
      if (trace) print_layers(run);
    } else if (*oracle) {
      const DirectedGraph g = load_graph(graph_path);
      OracleOptions options;
      options.max_vertices = limit;
      const auto best = min_dynamo(g, resolve(spec, g), options);
      if (!best) throw std::logic_error("oracle found no dynamo");
      const auto members = best->witness.members();
      std::cout << "min " << best->size << ":" << joined(members) << "\n";
    } else if (*bounds) {
      const DirectedGraph g = load_graph(graph_path);
      const BoundsReport r = bounds_report(g, resolve(spec, g));
      std::cout << "abw_upper " << to_string(r.abw_upper) << "\n"
                << "ksz_lower " << to_string(r.ksz_lower) << "\n"
                << "epsilon " << to_string(r.epsilon) << "\n"
                << "t_bar " << to_string(r.t_bar) << "\n"
                << "t_max " << r.t_max << "\n";
    } else if (*gen) {
      io::write_graph(std::cout, generate(gen_args));
    } else if (*reduce) {
      const UndirectedGraph gu =
          read_file(graph_path, [](std::istream& in) { return io::parse_undirected(in); });
      if (reduce_kind == "majority") {
        io::write_graph(std::cout, reduce_strict_majority(gu));
      } else {
        const ThresholdedGraph h = reduce_constant_threshold(gu);
        io::write_graph(std::cout, h.graph);
        if (!tau_out.empty()) {
          std::ofstream out(tau_out);
          if (!out) throw UsageError("cannot write '" + tau_out + "'");
          io::write_thresholds(out, h.tau);
        } else {
          // Comment lines keep stdout a valid graph file.
          std::ostringstream text;
          io::write_thresholds(text, h.tau);
          std::cout << "# thresholds\n";
          std::istringstream lines(text.str());
          for (std::string line; std::getline(lines, line);) std::cout << "# " << line << "\n";
        }
      }
    } else if (*verify) {
      const DirectedGraph g = load_graph(graph_path);
      const ThresholdAssignment tau = resolve(spec, g);
      VertexSet s(g.vertex_count());
      for (std::size_t v : seeds) {
        if (v >= g.vertex_count()) throw UsageError("seed " + std::to_string(v) + " out of range");
        s.insert(v);
      }
      const ActivationTrace run = activate(g, tau, s);
      std::cout << "dynamo " << (run.complete ? "true" : "false") << "\n";
      if (trace) print_layers(run);
    }
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kOk;
}
