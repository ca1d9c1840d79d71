// command-line front end: every subcommand emits one JSON report on stdout
// (or --out FILE) and a short human summary on stderr
#include "CLI11.hpp"
#include "json.hpp"

#include "turan/common.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/furedi.hpp"
#include "turan/graph.hpp"
#include "turan/oracle.hpp"
#include "turan/suite.hpp"
#include "turan/tree_analysis.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kArtifactVersion = "1.0.0";

// exit codes: 0 success, 2 usage error, 3 assertion failure, 4 infeasible
enum ExitCode { kOk = 0, kUsage = 2, kAssertion = 3, kInfeasible = 4 };

turan::Graph parse_graph(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot open " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return turan::edge_list_decode(ss.str());
  }
  try {
    return turan::graph_from_name(text);
  } catch (const std::invalid_argument&) {
  }
  return turan::graph6_decode(text);
}

// graph6 only covers orders up to 62; larger graphs ship as edge lists
json graph_record(const turan::Graph& g) {
  json j;
  j["order"] = g.order();
  j["edges"] = g.edge_count();
  if (g.order() <= 62)
    j["graph6"] = turan::graph6_encode(g);
  else
    j["edge_list"] = turan::edge_list_encode(g);
  return j;
}

struct Timing {
  Clock::time_point start = Clock::now();
  Clock::time_point mark = Clock::now();
  json steps = json::array();

  void step(const std::string& name) {
    double s = std::chrono::duration<double>(Clock::now() - mark).count();
    steps.push_back({{"name", name}, {"seconds", s}});
    mark = Clock::now();
  }
  json close() {
    return {{"total_seconds", std::chrono::duration<double>(Clock::now() - start).count()},
            {"steps", steps}};
  }
};

const char* case_name(turan::ForbiddenCase k) {
  switch (k) {
    case turan::ForbiddenCase::kZero: return "ZERO";
    case turan::ForbiddenCase::kCliqueBlocks: return "CLIQUE_BLOCKS";
    case turan::ForbiddenCase::kFurediQuadratic: return "FUREDI_QUADRATIC";
    case turan::ForbiddenCase::kBipartiteOther: return "BIPARTITE_OTHER";
    case turan::ForbiddenCase::kChromatic: return "CHROMATIC";
  }
  return "?";
}

json halfint_record(const turan::HalfInt& h) {
  return {{"value", h.str()}, {"approx", h.value()}};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace turan;

  CLI::App app{"K_{2,t}-free extremal graph toolkit"};
  app.require_subcommand(1);

  long long n = 0, q = 0;
  int t = 2, k = 2, jobs = 1;
  double timeout = 0.0, resolution = 0.01;
  std::uint64_t seed = 20260815;
  std::string pattern, forbid, host, out, level = "quick";

  auto* furedi_cmd = app.add_subcommand("furedi", "Build and audit the pair-class graph F(q,t)");
  furedi_cmd->add_option("--q", q, "prime power with (t-1) | (q-1)")->required();
  furedi_cmd->add_option("--t", t, "forbidden K_{2,t} parameter")->required();

  auto* count_cmd = app.add_subcommand("count", "Count pattern embeddings and copies in a host");
  count_cmd->add_option("--pattern", pattern, "pattern graph")->required();
  count_cmd->add_option("host", host, "host graph (omit to use F(q,t) via --q --t)");
  count_cmd->add_option("--q", q, "host field size when no host is given");
  count_cmd->add_option("--t", t, "host K_{2,t} parameter when no host is given");
  count_cmd->add_option("--jobs", jobs, "worker threads");

  auto* tree_cmd = app.add_subcommand("tree", "Tree split, exponents, and growth prediction");
  tree_cmd->add_option("--pattern", pattern, "tree graph")->required();

  auto* construct_cmd =
      app.add_subcommand("construct", "Assemble the pendant/block lower-bound host for a tree");
  construct_cmd->add_option("--pattern", pattern, "tree graph")->required();
  construct_cmd->add_option("--n", n, "target parameter n")->required();
  construct_cmd->add_option("--t", t, "forbidden K_{2,t} parameter")->required();
  construct_cmd->add_option("--seed", seed, "anchor sampling seed");

  auto* opt_cmd = app.add_subcommand("optimize-multipartite",
                                     "Best complete multipartite profile for K_{2,t} copies");
  opt_cmd->add_option("--n", n, "vertex count (exact scan)");
  opt_cmd->add_option("--k", k, "maximum number of parts")->required();
  opt_cmd->add_option("--t", t, "K_{2,t} parameter")->required();
  opt_cmd->add_option("--resolution", resolution, "grid step for the fractional profile");

  auto* classify_cmd = app.add_subcommand("classify", "Growth case of a forbidden graph");
  classify_cmd->add_option("--forbid", forbid, "forbidden graph")->required();
  classify_cmd->add_option("--t", t, "K_{2,t} parameter")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact small-n extremal value by exhaustive search");
  oracle_cmd->add_option("--n", n, "host order, at most 9")->required();
  oracle_cmd->add_option("--pattern", pattern, "counted graph")->required();
  oracle_cmd->add_option("--forbid", forbid, "forbidden graph")->required();
  oracle_cmd->add_option("--jobs", jobs, "worker threads");
  oracle_cmd->add_option("--timeout", timeout, "seconds before returning the best found");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance battery");
  verify_cmd->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  for (CLI::App* s : {furedi_cmd, count_cmd, tree_cmd, construct_cmd, opt_cmd, classify_cmd,
                      oracle_cmd, verify_cmd})
    s->add_option("--out", out, "write the JSON report to FILE instead of stdout");

  json report;
  report["schema"] = 1;
  int exit_code = kOk;
  Timing timing;

  auto emit = [&](const std::string& human) {
    report["provenance"] = {{"version", kArtifactVersion},
                            {"cache_hits", report.value("/provenance/cache_hits"_json_pointer, 0)},
                            {"seed", seed}};
    report["timing"] = timing.close();
    if (out.empty()) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::ofstream f(out);
      f << report.dump(2) << "\n";
    }
    if (!human.empty()) std::cerr << human << "\n";
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    report["command"] = "";
    report["error"] = {{"type", "usage"}, {"message", e.what()}};
    emit(std::string("usage error: ") + e.what());
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  report["command"] = sub->get_name();
  timing.step("parse");

  try {
    json results = json::array();
    std::string human;

    if (sub == furedi_cmd) {
      report["params"] = {{"q", q}, {"t", t}};
      FurediGraph fg = build_furedi(q, t);
      timing.step("build");
      FurediReport fr = verify_furedi(fg, seed);
      timing.step("verify");
      json rec = graph_record(fg.graph);
      rec["q"] = fg.q;
      rec["t"] = fg.t;
      rec["special_vertices"] = fg.special;
      rec["vertex_count_ok"] = fr.vertex_count_ok;
      rec["degree_dichotomy_ok"] = fr.degree_dichotomy_ok;
      rec["max_codegree"] = fr.max_codegree;
      rec["max_codegree_ok"] = fr.max_codegree_ok;
      rec["pairs_at_codegree_t_minus_1"] = fr.pairs_at_t_minus_1;
      rec["k2t_free"] = fr.k2t_free;
      rec["representatives_ok"] = fr.representatives_ok;
      rec["notes"] = fr.notes;
      rec["all_ok"] = fr.all_ok;
      results.push_back(rec);
      if (!fr.all_ok) exit_code = kAssertion;
      std::ostringstream os;
      os << "F(" << q << "," << t << "): " << fg.graph.order() << " vertices, "
         << fg.graph.edge_count() << " edges, " << fg.special.size() << " special, audit "
         << (fr.all_ok ? "ok" : "FAILED");
      human = os.str();

    } else if (sub == count_cmd) {
      Graph p = parse_graph(pattern);
      if (host.empty() && q == 0)
        throw std::invalid_argument("count needs a host graph or --q/--t for F(q,t)");
      Graph h = host.empty() ? build_furedi(q, t).graph : parse_graph(host);
      report["params"] = {{"pattern", pattern},
                          {"host", host.empty() ? "furedi" : host},
                          {"q", q},
                          {"t", t},
                          {"jobs", jobs}};
      timing.step("parse-graphs");
      EmbeddingCount emb = count_embeddings(p, h, false, jobs);
      BigInt aut = automorphism_count(p);
      timing.step("count");
      json rec;
      rec["pattern_order"] = p.order();
      rec["host_order"] = h.order();
      rec["embeddings"] = emb.value.str();
      rec["automorphisms"] = aut.str();
      rec["copies"] = BigInt(emb.value / aut).str();
      results.push_back(rec);
      human = "embeddings " + emb.value.str() + ", copies " + BigInt(emb.value / aut).str();

    } else if (sub == tree_cmd) {
      Graph tr = parse_graph(pattern);
      report["params"] = {{"pattern", pattern}};
      TreeDecomposition d = decompose_tree(tr);
      ExponentReport er = exponent_report(tr);
      timing.step("analyze");
      json rec;
      rec["order"] = d.order;
      rec["a"] = d.a;
      rec["b"] = d.b;
      rec["leaves"] = d.leaves;
      rec["leaves_adj_qprime"] = d.leaves_adj_qprime;
      rec["q_prime"] = d.q_prime;
      rec["q_components"] = d.q_components;
      json tcs = json::array();
      for (const auto& tc : d.t_components)
        tcs.push_back({{"vertices", tc.vertices}, {"ell", tc.ell}, {"attachments", tc.attachments}});
      rec["t_components"] = tcs;
      rec["s"] = d.s;
      rec["nice"] = d.nice;
      rec["furedi_exp"] = halfint_record(er.furedi_exp);
      if (er.literal_exp) rec["literal_exp"] = halfint_record(*er.literal_exp);
      rec["proof_exp"] = halfint_record(er.proof_exp);
      rec["agreement"] = er.agreement;
      rec["automorphisms"] = tree_automorphism_count(tr).str();
      results.push_back(rec);
      std::ostringstream os;
      os << "tree on " << d.order << " vertices: " << (d.nice ? "nice" : "non-nice")
         << ", proved exponent " << er.proof_exp.str();
      human = os.str();

    } else if (sub == construct_cmd) {
      Graph tr = parse_graph(pattern);
      report["params"] = {{"pattern", pattern}, {"n", n}, {"t", t}, {"seed", seed}};
      G0Info info;
      Graph g0 = construct_g0(tr, n, t, &info, seed);
      timing.step("construct");
      BigInt residue = count_k2t(g0, t).value;
      timing.step("audit");
      json rec = graph_record(g0);
      rec["pendants_per_vertex"] = info.pendants_per_vertex;
      rec["block_field_size"] = info.q;
      rec["blocks"] = info.blocks;
      rec["block_order"] = info.block_order;
      rec["anchors"] = info.anchors;
      rec["k2t_copies"] = residue.str();
      results.push_back(rec);
      if (residue != 0) exit_code = kAssertion;
      std::ostringstream os;
      os << "host on " << g0.order() << " vertices (" << info.blocks << " blocks, "
         << info.pendants_per_vertex << " pendants per attachment), K_{2," << t
         << "} copies: " << residue.str();
      human = os.str();

    } else if (sub == opt_cmd) {
      report["params"] = {{"n", n}, {"k", k}, {"t", t}, {"resolution", resolution}};
      if (n > 0) {
        MultipartiteProfile mp = optimize_multipartite(static_cast<int>(n), k, t);
        timing.step("exact-scan");
        results.push_back(
            {{"kind", "exact"}, {"parts", mp.parts}, {"t", mp.t}, {"count", mp.count.str()}});
        human = "best parts ";
        for (std::size_t i = 0; i < mp.parts.size(); ++i)
          human += (i ? "+" : "") + std::to_string(mp.parts[i]);
        human += " with " + mp.count.str() + " copies";
      }
      FractionProfile fp = asymptotic_profile(k, t, resolution);
      timing.step("fractional");
      results.push_back({{"kind", "fractional"},
                         {"fractions", fp.fractions},
                         {"objective", fp.objective},
                         {"resolution", fp.resolution}});
      if (human.empty()) {
        std::ostringstream os;
        os << "leading fraction " << fp.fractions[0] << ", objective " << fp.objective;
        human = os.str();
      }

    } else if (sub == classify_cmd) {
      Graph f = parse_graph(forbid);
      report["params"] = {{"forbid", forbid}, {"t", t}};
      Classification c = classify_forbidden(f, t);
      timing.step("classify");
      json rec;
      rec["case"] = case_name(c.kind);
      if (c.shape) rec["shape"] = {{"p", c.shape->p}, {"q", c.shape->q}, {"r", c.shape->r}};
      if (c.beta) rec["beta"] = *c.beta;
      rec["beta_at_most_t"] = c.beta_at_most_t;
      rec["chi"] = c.chi;
      results.push_back(rec);
      human = std::string("case ") + case_name(c.kind);

    } else if (sub == oracle_cmd) {
      Graph hp = parse_graph(pattern);
      Graph fp = parse_graph(forbid);
      report["params"] = {{"n", n},
                          {"pattern", pattern},
                          {"forbid", forbid},
                          {"jobs", jobs},
                          {"timeout", timeout}};
      OracleOptions opt;
      opt.jobs = jobs;
      opt.timeout_seconds = timeout;
      ExtremalResult r = exact_ex(static_cast<int>(n), hp, fp, opt);
      timing.step("search");
      json rec;
      rec["value"] = r.value.str();
      rec["witness_graph6"] = r.witness_g6;
      rec["complete"] = r.complete;
      rec["nodes"] = r.stats.nodes;
      rec["maximal_graphs"] = r.stats.maximal;
      rec["seconds"] = r.stats.seconds;
      rec["from_cache"] = r.stats.from_cache;
      results.push_back(rec);
      report["provenance"]["cache_hits"] = r.stats.from_cache ? 1 : 0;
      std::ostringstream os;
      os << "max copies " << r.value.str() << " (witness " << r.witness_g6 << ", "
         << (r.complete ? "complete" : "TRUNCATED") << ")";
      human = os.str();

    } else if (sub == verify_cmd) {
      report["params"] = {{"level", level}, {"jobs", jobs}};
      SuiteReport sr =
          run_suite(level == "full" ? SuiteLevel::kFull : SuiteLevel::kQuick, jobs);
      timing.step("battery");
      for (const SuiteItem& it : sr.items) {
        // wall times live under timing so the results stay seed-deterministic
        timing.steps.push_back({{"name", it.id}, {"seconds", it.seconds}});
        results.push_back({{"id", it.id},
                           {"criterion", it.criterion},
                           {"hard", it.hard},
                           {"pass", it.pass},
                           {"observed", it.observed},
                           {"expected", it.expected}});
        std::cerr << (it.pass ? (it.hard ? "ok    " : "ok~   ") : (it.hard ? "FAIL  " : "soft  "))
                  << it.id << "  " << it.observed << "\n";
      }
      report["all_hard_pass"] = sr.all_hard_pass;
      if (!sr.all_hard_pass) exit_code = kAssertion;
      std::ostringstream os;
      os << "battery " << (sr.all_hard_pass ? "PASS" : "FAIL") << " (" << sr.items.size()
         << " items, " << sr.seconds << "s)";
      human = os.str();
    }

    report["results"] = results;
    emit(human);
    return exit_code;

  } catch (const InfeasibleError& e) {
    report["error"] = {{"type", "infeasible"}, {"message", e.what()}};
    emit(std::string("infeasible: ") + e.what());
    return kInfeasible;
  } catch (const ConsistencyError& e) {
    report["error"] = {{"type", "consistency"}, {"message", e.what()}};
    emit(std::string("consistency failure: ") + e.what());
    return kAssertion;
  } catch (const FormatError& e) {
    report["error"] = {{"type", "usage"}, {"message", e.what()}};
    emit(std::string("usage error: ") + e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    report["error"] = {{"type", "usage"}, {"message", e.what()}};
    emit(std::string("usage error: ") + e.what());
    return kUsage;
  } catch (const std::exception& e) {
    report["error"] = {{"type", "runtime"}, {"message", e.what()}};
    emit(std::string("error: ") + e.what());
    return kAssertion;
  }
}
