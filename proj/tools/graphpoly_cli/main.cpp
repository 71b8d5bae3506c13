// Command-line surface for the graphpoly library: graph polynomials,
// Dodgson polynomials, denominator-reduction traces, identity suites,
// weight-drop prediction and the rho catalog.
//
// Exit codes: 0 success, 1 computational verdict failure (identity
// failure, rho-table mismatch), 2 input error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphpoly/dodgson.hpp"
#include "graphpoly/forest.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/identities.hpp"
#include "graphpoly/poly.hpp"
#include "graphpoly/predictor.hpp"
#include "graphpoly/reduction.hpp"

namespace gp = graphpoly;
using nlohmann::json;

namespace {

constexpr int kExitVerdictFailure = 1;
constexpr int kExitInputError = 2;

int default_budget() {
  if (const char* env = std::getenv("GRAPHPOLY_BUDGET")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return 10000;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json poly_to_json(const gp::Poly& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    json vars = json::array();
    for (const auto& [v, e] : mono)
      vars.push_back({gp::VarTable::name(v), e});
    terms.push_back({coeff.str(), vars});
  }
  return terms;
}

json provenance(const gp::Multigraph& g) {
  return {{"graph_hash", gp::graph_hash(g)},
          {"edge_order", g.edge_ids()}};
}

const char* outcome_name(gp::ReductionOutcome o) {
  switch (o) {
    case gp::ReductionOutcome::Reduced: return "Reduced";
    case gp::ReductionOutcome::WeightDrop: return "WeightDrop";
    case gp::ReductionOutcome::Stuck: return "Stuck";
  }
  return "?";
}

const char* verdict_name(gp::PredictionVerdict v) {
  switch (v) {
    case gp::PredictionVerdict::Drop: return "drop";
    case gp::PredictionVerdict::NoDropKnown: return "no-drop-known";
    case gp::PredictionVerdict::Unknown: return "unknown";
  }
  return "?";
}

const char* weight_verdict_name(gp::WeightVerdict v) {
  switch (v) {
    case gp::WeightVerdict::NoDropDetected: return "no-drop-detected";
    case gp::WeightVerdict::Drop: return "drop";
    case gp::WeightVerdict::NotReducible: return "not-reducible";
  }
  return "?";
}

std::string trace_to_text(const gp::ReductionTrace& t) {
  std::ostringstream os;
  os << "initial edges:";
  for (const auto& e : t.initial_edges) os << ' ' << e;
  os << "\nD_5 = " << t.d5.to_string() << "\n";
  int n = 5;
  for (const auto& s : t.steps) {
    ++n;
    os << "step " << s.edge << " ("
       << (s.kind == gp::StepKind::Discriminant ? "discriminant"
                                                : "linear-collapse")
       << "): D_" << n << " = " << s.result.to_string() << "\n";
  }
  os << "outcome: " << outcome_name(t.outcome) << " at stage " << t.stage
     << " (consumed " << t.consumed << " edges)\n";
  if (!t.evidence.empty()) os << "evidence: " << t.evidence << "\n";
  for (const auto& r : t.stuck_reasons) os << "stuck: " << r << "\n";
  if (t.outcome == gp::ReductionOutcome::Reduced)
    os << "final: " << t.final_poly.to_string() << "\n";
  return os.str();
}

json trace_to_json(const gp::ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"edge", s.edge},
                     {"kind", s.kind == gp::StepKind::Discriminant
                                  ? "discriminant"
                                  : "linear-collapse"},
                     {"result", poly_to_json(s.result)}});
  return {{"initial_edges", t.initial_edges},
          {"d5", poly_to_json(t.d5)},
          {"steps", steps},
          {"outcome", outcome_name(t.outcome)},
          {"stage", t.stage},
          {"consumed", t.consumed},
          {"evidence", t.evidence},
          {"stuck_reasons", t.stuck_reasons},
          {"final", poly_to_json(t.final_poly)}};
}

// Loads every input sequentially (fixing the variable interning order, so
// output bytes do not depend on --jobs), then shards `work` over files.
template <typename Work>
std::vector<json> sharded(const std::vector<gp::Multigraph>& graphs,
                          int jobs, Work work) {
  std::vector<json> results(graphs.size());
  if (jobs <= 1 || graphs.size() <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      results[i] = work(graphs[i]);
    return results;
  }
  std::vector<std::thread> pool;
  std::size_t stride =
      std::max<std::size_t>(1, static_cast<std::size_t>(jobs));
  for (std::size_t w = 0; w < stride; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < graphs.size(); i += stride)
        results[i] = work(graphs[i]);
    });
  for (auto& th : pool) th.join();
  return results;
}

std::vector<gp::Multigraph> load_all(const std::vector<std::string>& files) {
  std::vector<gp::Multigraph> graphs;
  graphs.reserve(files.size());
  for (const auto& f : files) graphs.push_back(gp::load_graph_file(f));
  return graphs;
}

void emit(const std::string& format, const std::string& command,
          const std::vector<std::string>& files,
          const std::vector<json>& results,
          std::optional<unsigned> seed = std::nullopt) {
  if (format == "structured") {
    json doc = {{"command", command}, {"results", json::array()}};
    if (seed) doc["seed"] = *seed;
    for (std::size_t i = 0; i < results.size(); ++i) {
      json r = results[i];
      if (i < files.size()) r["file"] = files[i];
      doc["results"].push_back(std::move(r));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (files.size() > 1) std::cout << files[i] << ":\n";
      std::cout << results[i].at("plain").get<std::string>();
    }
  }
}

// ---------------------------------------------------------------------
// Random instances for verify-identities.

gp::Multigraph random_connected_graph(std::mt19937_64& rng, int max_edges,
                                      const std::string& prefix) {
  std::uniform_int_distribution<int> nv_dist(3, 5);
  int nv = nv_dist(rng);
  std::uniform_int_distribution<int> ne_dist(nv, max_edges);
  int ne = std::max(nv, std::min(max_edges, ne_dist(rng)));
  std::vector<std::string> vs;
  for (int i = 0; i < nv; ++i) vs.push_back(prefix + std::to_string(i));
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<gp::Edge> edges;
    // A random spanning tree first, then random extra edges (no loops).
    for (int i = 1; i < nv; ++i) {
      std::uniform_int_distribution<int> to(0, i - 1);
      edges.push_back({prefix + "e" + std::to_string(edges.size()),
                       vs[static_cast<std::size_t>(to(rng))],
                       vs[static_cast<std::size_t>(i)]});
    }
    std::uniform_int_distribution<int> pick(0, nv - 1);
    while (static_cast<int>(edges.size()) < ne) {
      int a = pick(rng), b = pick(rng);
      if (a == b) continue;
      edges.push_back({prefix + "e" + std::to_string(edges.size()),
                       vs[static_cast<std::size_t>(a)],
                       vs[static_cast<std::size_t>(b)]});
    }
    gp::Multigraph g(edges, vs);
    if (g.connected()) return g;
  }
  throw std::runtime_error("random graph generation failed");
}

std::vector<gp::IdentityReport> random_identity_suite(unsigned seed, int n) {
  std::mt19937_64 rng(seed);
  std::vector<gp::IdentityReport> reports;
  for (int t = 0; t < n; ++t) {
    std::string tag = "r" + std::to_string(t) + "_";
    switch (t % 4) {
      case 0: {  // transfer on a random graph with <= 10 edges
        auto g = random_connected_graph(rng, 10, tag);
        auto vs = g.vertices();
        reports.push_back(gp::check_transfer(g, vs[0], vs[1], vs[2]));
        break;
      }
      case 1: {  // 2-join of 4-6-edge pieces
        auto g1 = random_connected_graph(rng, 6, tag + "a");
        auto g2 = random_connected_graph(rng, 6, tag + "b");
        auto e1 = g1.edges()[0].id;
        auto e2 = g2.edges()[0].id;
        std::vector<std::string> rest1, rest2;
        for (const auto& e : g1.edges())
          if (e.id != e1) rest1.push_back(e.id);
        for (const auto& e : g2.edges())
          if (e.id != e2) rest2.push_back(e.id);
        if (rest1.size() < 2 || rest2.size() < 2) break;
        // skip degenerate joins where a join-edge endpoint would end up
        // isolated once the edge is cut
        auto degree = [](const gp::Multigraph& g, const std::string& v) {
          int d = 0;
          for (const auto& e : g.edges()) d += (e.tail == v) + (e.head == v);
          return d;
        };
        const gp::Edge& je1 = g1.edge(e1);
        const gp::Edge& je2 = g2.edge(e2);
        if (je1.is_self_loop() || je2.is_self_loop() ||
            degree(g1, je1.tail) < 2 || degree(g1, je1.head) < 2 ||
            degree(g2, je2.tail) < 2 || degree(g2, je2.head) < 2)
          break;
        reports.push_back(gp::check_two_join(g1, e1, g2, e2, rest1[0],
                                             rest1[1], rest2[0], rest2[1]));
        break;
      }
      case 2: {  // Pluecker on a random graph
        auto g = random_connected_graph(rng, 8, tag);
        auto ids = g.edge_ids();
        if (ids.size() < 4) break;
        reports.push_back(
            gp::check_pluecker(g, ids[0], ids[1], ids[2], ids[3]));
        break;
      }
      default: {  // 3-join of <= 7-edge halves sharing vertices c0,c1,c2
        auto mk = [&](const std::string& p) {
          auto g = random_connected_graph(rng, 7, tag + p);
          // Rename the first three vertices to the shared cut.
          std::vector<gp::Edge> edges;
          auto vs = g.vertices();
          auto fix = [&](const std::string& v) {
            for (int i = 0; i < 3; ++i)
              if (v == vs[static_cast<std::size_t>(i)])
                return "c" + std::to_string(i);
            return tag + p + v;
          };
          for (const auto& e : g.edges())
            edges.push_back({e.id, fix(e.tail), fix(e.head)});
          return gp::Multigraph(edges, {});
        };
        reports.push_back(gp::check_three_join(
            mk("L"), mk("R"), {"c0", "c1", "c2"}));
        break;
      }
    }
  }
  return reports;
}

std::vector<gp::IdentityReport> corpus_identity_suite(
    const std::string& dir) {
  std::vector<gp::IdentityReport> reports;
  std::vector<std::string> files;
  {
    namespace fs = std::filesystem;
    for (const auto& ent : fs::directory_iterator(dir))
      if (ent.path().extension() == ".g")
        files.push_back(ent.path().string());
    std::sort(files.begin(), files.end());
  }
  for (const auto& f : files) {
    auto g = gp::load_graph_file(f);
    if (!g.connected() || g.edges().size() > 12) continue;
    auto vs = g.vertices();
    if (vs.size() >= 3) {
      auto r = gp::check_transfer(g, vs[0], vs[1], vs[2]);
      r.instance = f + ": " + r.instance;
      reports.push_back(std::move(r));
    }
    auto ids = g.edge_ids();
    if (ids.size() >= 4) {
      auto r = gp::check_pluecker(g, ids[0], ids[1], ids[2], ids[3]);
      r.instance = f + ": " + r.instance;
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph / Dodgson polynomial toolkit"};
  app.require_subcommand(1);

  std::string format = "plain";
  int budget = default_budget();
  int jobs = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "plain|structured")
        ->check(CLI::IsMember({"plain", "structured"}));
    sub->add_option("--budget", budget, "search node budget");
    sub->add_option("--jobs", jobs, "shard batch inputs across N workers");
  };

  std::vector<std::string> files;
  std::string partition_text, i_list, j_list, k_list, edges_list,
      terminals_list, order_list, corpus_dir, catalog_dir = "fixtures/catalog";
  bool auto_order = false;
  int random_n = 0;
  unsigned seed = 0;

  auto* c_psi = app.add_subcommand("psi", "graph polynomial Psi_G");
  c_psi->add_option("files", files)->required()->expected(-1);
  add_common(c_psi);

  auto* c_phi = app.add_subcommand("phi", "spanning-forest polynomial");
  c_phi->add_option("files", files)->required()->expected(1);
  c_phi->add_option("--partition", partition_text, "e.g. \"{1}{2,4}\"")
      ->required();
  add_common(c_phi);

  auto* c_dod = app.add_subcommand("dodgson", "Dodgson polynomial");
  c_dod->add_option("files", files)->required()->expected(1);
  c_dod->add_option("--I", i_list)->required();
  c_dod->add_option("--J", j_list)->required();
  c_dod->add_option("--K", k_list);
  add_common(c_dod);

  auto* c_five = app.add_subcommand("five-inv", "5-invariant");
  c_five->add_option("files", files)->required()->expected(1);
  c_five->add_option("--edges", edges_list, "i,j,k,l,m")->required();
  add_common(c_five);

  auto* c_red = app.add_subcommand("reduce", "denominator reduction");
  c_red->add_option("files", files)->required()->expected(-1);
  c_red->add_option("--order", order_list, "explicit edge order");
  c_red->add_flag("--auto", auto_order, "order search (default)");
  add_common(c_red);

  auto* c_pred = app.add_subcommand("predict", "weight-drop prediction");
  c_pred->add_option("files", files)->required()->expected(-1);
  add_common(c_pred);

  auto* c_rho = app.add_subcommand("rho", "rho_L at three terminals");
  c_rho->add_option("files", files)->required()->expected(1);
  c_rho->add_option("--terminals", terminals_list, "v1,v2,v3")->required();
  add_common(c_rho);

  auto* c_ver = app.add_subcommand("verify-identities", "identity suite");
  c_ver->add_option("--corpus", corpus_dir, "fixture directory");
  c_ver->add_option("--random", random_n, "number of random instances");
  c_ver->add_option("--seed", seed, "random seed");
  add_common(c_ver);

  auto* c_tab = app.add_subcommand("rho-table", "recompute the rho catalog");
  c_tab->add_option("--catalog", catalog_dir, "fixture directory");
  add_common(c_tab);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_psi->parsed()) {
      auto graphs = load_all(files);
      auto results = sharded(graphs, jobs, [&](const gp::Multigraph& g) {
        gp::Poly p = gp::psi(g);
        json r = provenance(g);
        r["psi"] = poly_to_json(p);
        r["plain"] = p.to_string() + "\n";
        return r;
      });
      emit(format, "psi", files, results);
    } else if (c_phi->parsed()) {
      auto g = gp::load_graph_file(files[0]);
      auto p = gp::phi(g, gp::SetPartition::parse(partition_text));
      json r = provenance(g);
      r["phi"] = poly_to_json(p);
      r["partition"] = partition_text;
      r["plain"] = p.to_string() + "\n";
      emit(format, "phi", files, {r});
    } else if (c_dod->parsed()) {
      auto g = gp::load_graph_file(files[0]);
      auto spec = gp::DodgsonSpec::parse(i_list, j_list, k_list);
      auto p = gp::dodgson(g, spec);
      json r = provenance(g);
      r["spec"] = spec.to_string();
      r["dodgson"] = poly_to_json(p);
      r["plain"] = p.to_string() + "\n";
      emit(format, "dodgson", files, {r});
    } else if (c_five->parsed()) {
      auto g = gp::load_graph_file(files[0]);
      auto p = gp::five_invariant(g, split_commas(edges_list));
      json r = provenance(g);
      r["five_invariant"] = poly_to_json(p);
      r["plain"] = p.to_string() + "\n";
      emit(format, "five-inv", files, {r});
    } else if (c_red->parsed()) {
      if (!order_list.empty() && files.size() > 1)
        throw std::invalid_argument("--order takes a single input graph");
      auto graphs = load_all(files);
      auto results = sharded(graphs, jobs, [&](const gp::Multigraph& g) {
        gp::ReductionTrace t =
            order_list.empty()
                ? gp::auto_order_search(g, budget)
                : gp::denominator_reduce(g, split_commas(order_list));
        auto w = gp::weight_estimate(g, t);
        json r = provenance(g);
        r["trace"] = trace_to_json(t);
        r["weight"] = {{"e_G", w.edge_count},
                       {"maximal_weight_bound", w.maximal_weight_bound},
                       {"drop_bound", w.drop_bound},
                       {"verdict", weight_verdict_name(w.verdict)}};
        std::ostringstream os;
        os << trace_to_text(t) << "weight: " << weight_verdict_name(w.verdict)
           << " (e_G = " << w.edge_count << ", bound "
           << (w.verdict == gp::WeightVerdict::Drop ? w.drop_bound
                                                    : w.maximal_weight_bound)
           << ")\n";
        r["plain"] = os.str();
        return r;
      });
      emit(format, "reduce", files, results);
    } else if (c_pred->parsed()) {
      auto graphs = load_all(files);
      auto results = sharded(graphs, jobs, [&](const gp::Multigraph& g) {
        auto p = gp::predict(g, nullptr, budget);
        json chain = json::array();
        std::ostringstream os;
        os << "verdict: " << verdict_name(p.verdict) << "\n";
        for (const auto& ra : p.rule_chain) {
          chain.push_back({{"rule", ra.rule}, {"site", ra.site}});
          os << "rule: " << ra.rule << " at " << ra.site << "\n";
        }
        json r = provenance(g);
        r["verdict"] = verdict_name(p.verdict);
        r["rule_chain"] = chain;
        r["plain"] = os.str();
        return r;
      });
      emit(format, "predict", files, results);
    } else if (c_rho->parsed()) {
      auto g = gp::load_graph_file(files[0]);
      auto ts = split_commas(terminals_list);
      if (ts.size() != 3)
        throw std::invalid_argument("--terminals wants v1,v2,v3");
      auto rp = gp::rho(g, ts[0], ts[1], ts[2], budget);
      json r = provenance(g);
      r["terminals"] = rp.terminals;
      r["rho"] = poly_to_json(rp.poly);
      r["plain"] = rp.poly.to_string() + "\n";
      emit(format, "rho", files, {r});
    } else if (c_ver->parsed()) {
      std::vector<gp::IdentityReport> reports;
      if (!corpus_dir.empty()) {
        auto c = corpus_identity_suite(corpus_dir);
        reports.insert(reports.end(), c.begin(), c.end());
      }
      if (random_n > 0) {
        auto c = random_identity_suite(seed, random_n);
        reports.insert(reports.end(), c.begin(), c.end());
      }
      bool all_pass = true;
      json rs = json::array();
      std::ostringstream os;
      for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        rs.push_back({{"identity", r.identity},
                      {"instance", r.instance},
                      {"pass", r.pass},
                      {"witness", poly_to_json(r.witness)}});
        os << (r.pass ? "pass" : "FAIL") << " " << r.identity << " ["
           << r.instance << "]";
        if (!r.pass) os << " witness: " << r.witness.to_string();
        os << "\n";
      }
      os << (all_pass ? "all identities pass" : "identity failures present")
         << " (" << reports.size() << " instances)\n";
      json doc = {{"plain", os.str()}, {"reports", rs}};
      emit(format, "verify-identities", {}, {doc}, seed);
      if (!all_pass) return kExitVerdictFailure;
    } else if (c_tab->parsed()) {
      auto entries = gp::rho_table_check(catalog_dir, budget);
      bool all_pass = true;
      json rs = json::array();
      std::ostringstream os;
      for (const auto& e : entries) {
        all_pass = all_pass && e.pass;
        rs.push_back({{"name", e.name},
                      {"pass", e.pass},
                      {"expected", poly_to_json(e.expected)},
                      {"computed", poly_to_json(e.computed)}});
        os << (e.pass ? "pass" : "FAIL") << " " << e.name << ": computed "
           << e.computed.to_string() << ", table " << e.expected.to_string()
           << "\n";
      }
      os << (all_pass ? "rho table verified" : "rho table MISMATCH") << " ("
         << entries.size() << " entries)\n";
      json doc = {{"plain", os.str()}, {"entries", rs}};
      emit(format, "rho-table", {}, {doc});
      if (!all_pass) return kExitVerdictFailure;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
