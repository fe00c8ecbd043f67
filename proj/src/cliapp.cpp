#include "bei/cliapp.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bei/aci.hpp"
#include "bei/betti.hpp"
#include "bei/enumerate.hpp"
#include "bei/rees.hpp"
#include "bei/syzygy.hpp"

namespace bei {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDisagree = 2;

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(xs[i]);
  }
  return s;
}

struct Options {
  std::string field = "q";
  std::string order = "lex";
  int degree_bound = 0;
  unsigned long seed = 0;

  Field F() const { return field == "q" ? Field{} : Field{kDefaultPrime}; }
};

void print_header(std::ostream& out, const std::string& cmd, const Graph& g) {
  out << "command: " << cmd << "\n";
  out << "n: " << g.n() << "\n";
  out << "edges: " << g.m() << "\n";
}

void print_betti_row(std::ostream& out, const BettiTable& t, int i) {
  bool any = false;
  for (const auto& [ij, v] : t.entries) {
    if (ij.first != i || v == 0) continue;
    out << "  beta[" << i << "," << ij.second << "]: " << v << "\n";
    any = true;
  }
  if (!any) out << "  none\n";
}

int max_row_degree(const BettiTable& t, int i, int fallback) {
  int m = fallback;
  for (const auto& [ij, v] : t.entries)
    if (ij.first == i && v != 0) m = std::max(m, ij.second);
  return m;
}

void print_counterexample(std::ostream& out, const Graph& g) {
  out << "counterexample:\n";
  std::istringstream file(print_graph_file(g));
  std::string line;
  while (std::getline(file, line)) out << "  " << line << "\n";
}

int cmd_betti(const Options& opt, const Graph& g, bool with_oracle, std::ostream& out) {
  print_header(out, "betti", g);
  BettiTable cf = closed_form_beta2(g);
  out << "closed-form:\n";
  print_betti_row(out, cf, 2);
  if (!with_oracle) return kOk;
  int jmax = max_row_degree(cf, 2, 4) + 2;
  auto R = standard_ring(g.n(), Field{kDefaultPrime});
  BettiTable ob = oracle_beta(binomial_edge_ideal(R, g), 2, jmax);
  out << "oracle-field: F32003\n";
  out << "oracle-degrees-to: " << jmax << "\n";
  out << "oracle:\n";
  print_betti_row(out, ob, 1);
  print_betti_row(out, ob, 2);
  bool agree = cf.row_equal(ob, 2) && ob.beta(1, 2) == g.m() && ob.row_total(1) == g.m();
  out << "agreement: " << (agree ? "true" : "false") << "\n";
  (void)opt;
  return agree ? kOk : kDisagree;
}

int cmd_syzygy(const Options& opt, const Graph& g, bool verify, std::ostream& out) {
  print_header(out, "syzygy", g);
  auto R = standard_ring(g.n(), opt.F());
  auto gens = first_syzygy(R, g);
  out << "generators: " << gens.size() << "\n";
  for (const auto& s : gens) out << "generator: " << s.str() << "\n";
  if (!verify) return kOk;
  auto Rp = standard_ring(g.n(), Field{kDefaultPrime});
  auto fp_gens = first_syzygy(Rp, g);
  SyzygyCheck chk = verify_first_syzygy(Rp, g, fp_gens);
  out << "verification-field: F32003\n";
  out << "verification: " << (chk.ok ? "ok" : "failed") << "\n";
  out << "detail: " << chk.detail << "\n";
  return chk.ok ? kOk : kDisagree;
}

int cmd_classify(const Options& opt, const Graph& g, bool check_mu, std::ostream& out) {
  print_header(out, "classify", g);
  AciVerdict v = classify(g);
  out << "status: " << to_string(v.status) << "\n";
  out << "shape: " << to_string(v.shape) << "\n";
  if (v.edge) out << "edge: " << edge_str(*v.edge) << "\n";
  if (!v.vertices.empty()) out << "vertices: " << join_ints(v.vertices) << "\n";
  out << "detail: " << v.detail << "\n";
  if (!check_mu) return kOk;
  auto R = standard_ring(g.n(), Field{});
  auto mp = minimal_primes_and_height(R, g);
  bool arith = g.m() == mp.height + 1;
  bool predicted = arith && !analyze(g).is_path;
  bool structural = v.status == AciStatus::ACI;
  out << "mu: " << g.m() << "\n";
  out << "height: " << mp.height << "\n";
  out << "mu-equals-height-plus-one: " << (arith ? "true" : "false") << "\n";
  out << "arithmetic-aci: " << (predicted ? "true" : "false") << "\n";
  out << "agreement: " << (structural == predicted ? "true" : "false") << "\n";
  (void)opt;
  return structural == predicted ? kOk : kDisagree;
}

std::vector<Poly> distinguished_sequence(const RingPtr& R, const Graph& g, const AciVerdict& v) {
  if (v.status == AciStatus::CI) {
    std::vector<Poly> seq;
    for (const auto& comp : components(g)) {
      auto po = path_order(g, comp);
      if (!po) throw std::logic_error("distinguished_sequence: CI graph is not a path");
      for (size_t t = 0; t + 1 < po->size(); ++t)
        seq.push_back(edge_binomial(R, mk_edge((*po)[t], (*po)[t + 1])));
    }
    return seq;
  }
  return aci_edge_d_sequence(R, g, v);
}

int cmd_dseq(const Options& opt, const Graph& g, std::ostream& out, std::ostream& err) {
  AciVerdict v = classify(g);
  if (v.status == AciStatus::Neither || v.shape == AciShape::triangle_with_paths) {
    err << "error: no distinguished edge sequence for this graph (" << to_string(v.status) << ", "
        << to_string(v.shape) << ")\n";
    return kUsage;
  }
  if (g.m() == 0) {
    err << "error: graph has no edges\n";
    return kUsage;
  }
  print_header(out, "dseq", g);
  out << "status: " << to_string(v.status) << "\n";
  auto R = standard_ring(g.n(), opt.F());
  auto seq = distinguished_sequence(R, g, v);
  out << "sequence: " << seq.size() << " elements\n";
  for (const auto& p : seq) out << "element: " << p.str() << "\n";
  DSeqResult res = is_d_sequence(seq);
  out << "d-sequence: " << (res.ok ? "true" : "false") << "\n";
  if (!res.ok) {
    out << "failure: " << res.failure << "\n";
    return kDisagree;
  }
  out << "colon-pairs: " << res.cert.certificate.size() << "\n";
  return kOk;
}

int cmd_rees(const Options& opt, const Graph& g, bool lin, bool elim, bool lt, std::ostream& out,
             std::ostream& err) {
  if (!lin && !elim && !lt) {
    err << "error: rees needs --linear-gens, --eliminate, or --linear-type\n";
    return kUsage;
  }
  print_header(out, "rees", g);
  out << "field: " << opt.F().name() << "\n";
  auto ST = rees_presentation_ring(g, opt.F());
  BuchbergerOptions caps;
  caps.max_pairs = 500000;
  if (lin) {
    auto gens = linear_rees_generators(ST, g);
    out << "linear-generators: " << gens.size() << "\n";
    for (const auto& p : gens) out << "generator: " << p.str() << "\n";
  }
  if (elim) {
    try {
      Ideal D = defining_ideal_by_elimination(g, opt.F(), caps);
      out << "defining-ideal-generators: " << D.gens().size() << "\n";
      for (const auto& p : D.gens()) out << "generator: " << p.str() << "\n";
    } catch (const ResourceCapError& e) {
      out << "defining-ideal: inconclusive\n";
      err << "error: elimination hit a resource cap: " << e.what() << "\n";
      return kUsage;
    }
  }
  if (lt) {
    LinearTypeResult res = is_linear_type(g, opt.F(), caps);
    if (!res.linear_type) {
      out << "linear-type: inconclusive\n";
      out << "detail: " << res.detail << "\n";
      return kUsage;
    }
    out << "linear-type: " << (*res.linear_type ? "true" : "false") << "\n";
    out << "detail: " << res.detail << "\n";
    if (res.witness) out << "witness: " << res.witness->str() << "\n";
  }
  return kOk;
}

int cmd_groebner(const Options& opt, const Graph& g, bool initial, std::ostream& out) {
  print_header(out, "groebner", g);
  out << "field: " << opt.F().name() << "\n";
  out << "order: " << opt.order << "\n";
  auto R = standard_ring(g.n(), opt.F());
  Ideal I = binomial_edge_ideal(R, g);
  std::vector<Poly> basis;
  if (opt.degree_bound > 0) {
    basis = I.truncated_gb(opt.degree_bound);
    out << "truncated-to: " << opt.degree_bound << "\n";
  } else {
    basis = I.gb();
  }
  if (initial) {
    out << "initial-ideal: " << basis.size() << "\n";
    const Scalar one = scalar_of(opt.F(), 1);
    for (const auto& p : basis) out << "generator: " << Poly::monomial(R, p.lm(), one).str() << "\n";
  } else {
    out << "basis: " << basis.size() << "\n";
    for (const auto& p : basis) out << "generator: " << p.str() << "\n";
  }
  return kOk;
}

int cmd_sweep(const Options& opt, int max_n, std::ostream& out) {
  out << "command: sweep\n";
  out << "max-n: " << max_n << "\n";
  out << "seed: " << opt.seed << "\n";
  out << "oracle-field: F32003\n";

  long betti_graphs = 0, classify_graphs = 0, syz_classes = 0, dseq_runs = 0, lt_runs = 0;
  std::vector<Graph> pool;

  for (int n = 3; n <= max_n; ++n) {
    std::vector<Graph> all = all_labeled_trees(n);
    auto uni = all_labeled_unicyclic(n);
    all.insert(all.end(), uni.begin(), uni.end());
    IsoClasses iso = iso_classes(all);
    out << "n=" << n << ": graphs " << all.size() << ", classes " << iso.reps.size() << "\n";

    auto Rp = standard_ring(n, Field{kDefaultPrime});
    std::vector<BettiTable> class_oracle(iso.reps.size());
    std::vector<AciStatus> class_status(iso.reps.size());
    for (size_t c = 0; c < iso.reps.size(); ++c) {
      const Graph& rep = iso.reps[c];
      BettiTable cf = closed_form_beta2(rep);
      int jmax = max_row_degree(cf, 2, 4) + 2;
      Ideal I = binomial_edge_ideal(Rp, rep);
      class_oracle[c] = oracle_beta(I, 2, jmax);
      if (!cf.row_equal(class_oracle[c], 2) || class_oracle[c].row_total(1) != rep.m()) {
        out << "betti-agreement: failed\n";
        print_counterexample(out, rep);
        return kDisagree;
      }
      SyzygyCheck chk = verify_first_syzygy(Rp, rep, first_syzygy(Rp, rep));
      if (!chk.ok) {
        out << "syzygy-verification: failed\n";
        out << "detail: " << chk.detail << "\n";
        print_counterexample(out, rep);
        return kDisagree;
      }
      ++syz_classes;
      class_status[c] = classify(rep).status;
    }

    for (const Graph& g : all) {
      size_t c = static_cast<size_t>(iso.index.at(canonical_key(g)));
      BettiTable cf = closed_form_beta2(g);
      if (!cf.row_equal(class_oracle[c], 2)) {
        out << "betti-agreement: failed\n";
        print_counterexample(out, g);
        return kDisagree;
      }
      ++betti_graphs;
      AciVerdict v = classify(g);
      bool predicted = mu_equals_height_plus_one(g) && !analyze(g).is_path;
      if (v.status != class_status[c] || (v.status == AciStatus::ACI) != predicted) {
        out << "classification-arithmetic: failed\n";
        print_counterexample(out, g);
        return kDisagree;
      }
      ++classify_graphs;
      if (n <= 5) pool.push_back(g);
    }

    if (n <= 5) {
      auto RQ = standard_ring(n, Field{});
      for (const Graph& rep : iso.reps) {
        AciVerdict v = classify(rep);
        bool has_seq = v.status == AciStatus::CI ||
                       (v.status == AciStatus::ACI && v.shape != AciShape::triangle_with_paths);
        if (has_seq && rep.m() > 0) {
          if (!is_d_sequence(distinguished_sequence(RQ, rep, v)).ok) {
            out << "d-sequences: failed\n";
            print_counterexample(out, rep);
            return kDisagree;
          }
          ++dseq_runs;
        }
        if (n <= 4 && v.status != AciStatus::Neither) {
          LinearTypeResult res = is_linear_type(rep);
          if (!res.linear_type || !*res.linear_type) {
            out << "linear-type: failed\n";
            print_counterexample(out, rep);
            return kDisagree;
          }
          ++lt_runs;
        }
      }
    }
  }

  // seeded spot checks of the colon closed form and colon stability
  std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed));
  const int samples = 8;
  for (int k = 0; k < samples; ++k) {
    const Graph& g = pool[rng() % pool.size()];
    Edge e = g.edges()[rng() % g.edges().size()];
    auto R = standard_ring(g.n(), Field{});
    Ideal rest = binomial_edge_ideal(R, g.without_edge(e.first, e.second));
    Poly f = edge_binomial(R, e);
    Ideal c1 = colon(rest, f);
    if (!ideal_equal(c1, Ideal(R, fm_colon(R, g, e).gens))) {
      out << "colon-formula: failed\n";
      out << "edge: " << edge_str(e) << "\n";
      print_counterexample(out, g);
      return kDisagree;
    }
    if (!ideal_equal(c1, colon(rest, f * f))) {
      out << "colon-stability: failed\n";
      out << "edge: " << edge_str(e) << "\n";
      print_counterexample(out, g);
      return kDisagree;
    }
  }

  out << "betti-agreement: ok (" << betti_graphs << " graphs)\n";
  out << "syzygy-verification: ok (" << syz_classes << " classes)\n";
  out << "classification-arithmetic: ok (" << classify_graphs << " graphs)\n";
  out << "d-sequences: ok (" << dseq_runs << " sequences)\n";
  out << "linear-type: ok (" << lt_runs << " graphs)\n";
  out << "colon-checks: ok (" << samples << " samples)\n";
  out << "result: ok\n";
  return kOk;
}

}  // namespace

Graph parse_graph_file(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n) continue;
      n = -1;  // blank or comment before the count line
      continue;
    }
    int u = 0, v = 0;
    if (!(ls >> u)) continue;
    if (!(ls >> v))
      throw std::invalid_argument("graph file: expected \"u v\" at line " + std::to_string(lineno));
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("graph file: trailing tokens at line " + std::to_string(lineno));
    edges.push_back(mk_edge(u, v));
  }
  if (n < 0) throw std::invalid_argument("graph file: missing vertex count");
  return Graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return parse_graph_file(in);
}

std::string print_graph_file(const Graph& g) {
  std::string s = std::to_string(g.n()) + "\n";
  for (const auto& [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"binomial edge ideal toolkit"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--field", opt.field, "coefficient field")
      ->check(CLI::IsMember({"q", "fp32003"}));
  app.add_option("--order", opt.order, "monomial order")->check(CLI::IsMember({"lex"}));
  app.add_option("--degree-bound", opt.degree_bound, "degree cap for basis computations")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for sampled checks");

  std::string betti_file, syz_file, cls_file, dseq_file, rees_file, gb_file;
  bool with_oracle = false, verify = false, check_mu = false;
  bool rees_lin = false, rees_elim = false, rees_lt = false, gb_initial = false;
  int max_n = 5;

  auto* c_betti = app.add_subcommand("betti", "second graded Betti row");
  c_betti->add_option("file", betti_file, "graph file")->required();
  c_betti->add_flag("--oracle", with_oracle, "compare with the linear-algebra oracle");

  auto* c_syz = app.add_subcommand("syzygy", "first syzygy generators");
  c_syz->add_option("file", syz_file, "graph file")->required();
  c_syz->add_flag("--verify", verify, "verify count, membership, and minimality");

  auto* c_cls = app.add_subcommand("classify", "complete intersection classification");
  c_cls->add_option("file", cls_file, "graph file")->required();
  c_cls->add_flag("--check-mu", check_mu, "compare with the height arithmetic");

  auto* c_dseq = app.add_subcommand("dseq", "distinguished edge d-sequence");
  c_dseq->add_option("file", dseq_file, "graph file")->required();

  auto* c_rees = app.add_subcommand("rees", "Rees algebra presentation");
  c_rees->add_option("file", rees_file, "graph file")->required();
  c_rees->add_flag("--linear-gens", rees_lin, "emit the T-linear kernel generators");
  c_rees->add_flag("--eliminate", rees_elim, "compute the kernel by elimination");
  c_rees->add_flag("--linear-type", rees_lt, "decide linear type");

  auto* c_gb = app.add_subcommand("groebner", "Groebner basis of the edge ideal");
  c_gb->add_option("file", gb_file, "graph file")->required();
  c_gb->add_flag("--initial", gb_initial, "leading monomials only");

  auto* c_sweep = app.add_subcommand("sweep", "agreement suite over all small graphs");
  c_sweep->add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(3, 7));

  try {
    // CLI11's vector overload wants the arguments reversed
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_betti->parsed()) return cmd_betti(opt, read_graph_file(betti_file), with_oracle, out);
    if (c_syz->parsed()) return cmd_syzygy(opt, read_graph_file(syz_file), verify, out);
    if (c_cls->parsed()) return cmd_classify(opt, read_graph_file(cls_file), check_mu, out);
    if (c_dseq->parsed()) return cmd_dseq(opt, read_graph_file(dseq_file), out, err);
    if (c_rees->parsed())
      return cmd_rees(opt, read_graph_file(rees_file), rees_lin, rees_elim, rees_lt, out, err);
    if (c_gb->parsed()) return cmd_groebner(opt, read_graph_file(gb_file), gb_initial, out);
    if (c_sweep->parsed()) return cmd_sweep(opt, max_n, out);
  } catch (const ResourceCapError& e) {
    err << "error: resource cap: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace bei
