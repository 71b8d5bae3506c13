#include "graphpoly/reduction.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "graphpoly/dodgson.hpp"

namespace graphpoly {

namespace {

Poly strip(const Poly& p) { return normalize_sign(p.primitive_part()); }

struct StepOutcome {
  enum Kind { Ok, Drop, Stuck } status = Stuck;
  Poly next;
  StepKind step_kind = StepKind::Discriminant;
  std::string detail;  // stuck reason or drop evidence
};

// Consume variable x of d: discriminant + perfect square root, with the
// a2 = 0 case collapsing to D_{n+1} = +-a1 (the ad-bc formula with c = 0,
// d = 1).  Integer content is stripped before the square test.
StepOutcome reduce_step(const Poly& d, Var x, const std::string& edge) {
  StepOutcome out;
  if (d.degree_in(x) > 2) {
    out.status = StepOutcome::Stuck;
    out.detail = edge + ": degree > 2";
    return out;
  }
  const auto q = quadratic_in(d, x);
  if (!q) {
    out.status = StepOutcome::Stuck;
    out.detail = edge + ": no quadratic decomposition";
    return out;
  }
  if (q->a2.is_zero()) {
    out.status = StepOutcome::Ok;
    out.step_kind = StepKind::LinearCollapse;
    out.next = strip(q->a1);
    return out;
  }
  Poly delta = q->a1 * q->a1 - Int(4) * (q->a2 * q->a0);
  if (delta.is_zero()) {
    out.status = StepOutcome::Drop;
    out.detail = "discriminant in " + edge + " identically zero";
    return out;
  }
  auto root = perfect_square_root(normalize_sign(delta.primitive_part()));
  if (!root) root = perfect_square_root(normalize_sign(delta));
  if (!root) {
    out.status = StepOutcome::Stuck;
    out.detail = edge + ": discriminant is not a perfect square";
    return out;
  }
  out.status = StepOutcome::Ok;
  out.step_kind = StepKind::Discriminant;
  out.next = strip(*root);
  return out;
}

}  // namespace

Poly five_invariant(const Multigraph& g,
                    const std::vector<std::string>& edges) {
  if (edges.size() != 5)
    throw std::invalid_argument("five_invariant: need exactly 5 edges");
  std::set<std::string> distinct(edges.begin(), edges.end());
  if (distinct.size() != 5)
    throw std::invalid_argument("five_invariant: edges must be distinct");
  for (const auto& e : edges)
    if (!g.has_edge(e))
      throw std::invalid_argument("five_invariant: unknown edge '" + e + "'");
  const std::string &i = edges[0], &j = edges[1], &k = edges[2],
                    &l = edges[3], &m = edges[4];
  const Multigraph g_minus_m = delete_edge(g, m);
  // raw (relatively signed) tree-pair values, per the displayed 2x2 matrix
  const Poly a = dodgson_tree_pairs_raw(g, DodgsonSpec{{i, j}, {k, l}, {m}});
  const Poly b =
      dodgson_tree_pairs_raw(g_minus_m, DodgsonSpec{{i, j}, {k, l}, {}});
  const Poly c = dodgson_tree_pairs_raw(g, DodgsonSpec{{i, k}, {j, l}, {m}});
  const Poly d =
      dodgson_tree_pairs_raw(g_minus_m, DodgsonSpec{{i, k}, {j, l}, {}});
  return normalize_sign(a * d - b * c);
}

namespace {

ReductionTrace start_trace(const Multigraph& g,
                           const std::vector<std::string>& five) {
  ReductionTrace trace;
  trace.initial_edges = five;
  trace.d5 = strip(five_invariant(g, five));
  trace.stage = 5;
  trace.consumed = 5;
  return trace;
}

void finish(ReductionTrace& trace, const Poly& current) {
  trace.stage = trace.consumed;
  if (current.is_zero()) {
    trace.outcome = ReductionOutcome::WeightDrop;
    trace.evidence = "D_" + std::to_string(trace.consumed) +
                     " is identically zero";
  } else {
    trace.outcome = ReductionOutcome::Reduced;
    trace.final_poly = current;
  }
}

}  // namespace

ReductionTrace denominator_reduce(const Multigraph& g,
                                  const std::vector<std::string>& order) {
  if (g.edge_count() < 5)
    throw std::invalid_argument("denominator_reduce: need at least 5 edges");
  if (order.size() < 5)
    throw std::invalid_argument("denominator_reduce: order needs >= 5 edges");
  std::set<std::string> seen;
  for (const auto& e : order) {
    if (!g.has_edge(e))
      throw std::invalid_argument("denominator_reduce: unknown edge '" + e +
                                  "'");
    if (!seen.insert(e).second)
      throw std::invalid_argument("denominator_reduce: repeated edge '" + e +
                                  "'");
  }
  const std::size_t target = std::min(
      order.size(), std::max<std::size_t>(5, g.edge_count() - 1));

  ReductionTrace trace =
      start_trace(g, {order.begin(), order.begin() + 5});
  Poly current = trace.d5;
  for (std::size_t idx = 5; idx < target; ++idx) {
    if (current.is_zero()) break;
    const std::string& edge = order[idx];
    const StepOutcome step = reduce_step(current, g.edge_var(edge), edge);
    if (step.status == StepOutcome::Stuck) {
      trace.outcome = ReductionOutcome::Stuck;
      trace.stage = trace.consumed;
      trace.stuck_reasons = {step.detail};
      return trace;
    }
    if (step.status == StepOutcome::Drop) {
      trace.outcome = ReductionOutcome::WeightDrop;
      trace.stage = trace.consumed + 1;
      trace.evidence = step.detail;
      return trace;
    }
    trace.steps.push_back(ReductionStep{edge, step.next, step.step_kind});
    current = step.next;
    ++trace.consumed;
  }
  finish(trace, current);
  return trace;
}

namespace {

struct SearchCtx {
  // (edge id, variable) per slot; dfs picks unused slots in order.
  std::vector<std::pair<std::string, Var>> vars;
  std::size_t target = 0;
  long budget = 0;
  bool exhausted = false;
  std::optional<ReductionTrace> found;
  ReductionTrace deepest_stuck;
  bool have_stuck = false;
};

void record_stuck(SearchCtx& ctx, ReductionTrace trace) {
  if (!ctx.have_stuck || trace.consumed > ctx.deepest_stuck.consumed) {
    ctx.deepest_stuck = std::move(trace);
    ctx.have_stuck = true;
  }
}

bool dfs(SearchCtx& ctx, ReductionTrace& trace, const Poly& current,
         std::vector<bool>& used) {
  if (current.is_zero() ||
      static_cast<std::size_t>(trace.consumed) >= ctx.target) {
    finish(trace, current);
    ctx.found = trace;
    return true;
  }
  std::vector<std::string> reasons;
  for (std::size_t idx = 0; idx < ctx.vars.size(); ++idx) {
    if (used[idx]) continue;
    if (--ctx.budget < 0) {
      ctx.exhausted = true;
      return false;
    }
    const std::string& edge = ctx.vars[idx].first;
    const StepOutcome step = reduce_step(current, ctx.vars[idx].second, edge);
    if (step.status == StepOutcome::Drop) {
      trace.outcome = ReductionOutcome::WeightDrop;
      trace.stage = trace.consumed + 1;
      trace.evidence = step.detail;
      ctx.found = trace;
      return true;
    }
    if (step.status == StepOutcome::Stuck) {
      reasons.push_back(step.detail);
      continue;
    }
    trace.steps.push_back(ReductionStep{edge, step.next, step.step_kind});
    ++trace.consumed;
    used[idx] = true;
    if (dfs(ctx, trace, step.next, used)) return true;
    used[idx] = false;
    --trace.consumed;
    trace.steps.pop_back();
    if (ctx.exhausted) return false;
  }
  ReductionTrace stuck = trace;
  stuck.outcome = ReductionOutcome::Stuck;
  stuck.stage = stuck.consumed;
  stuck.stuck_reasons = std::move(reasons);
  record_stuck(ctx, std::move(stuck));
  return false;
}

// ranked 5-edge seed sets: triangle-containing, then 3-valent-star, then
// the rest; lexicographic (on edge indices) within each class
std::vector<std::vector<std::size_t>> ranked_seeds(
    const Multigraph& g, const std::vector<std::size_t>& allowed) {
  const auto triangles = find_triangles(g);
  // stars of 3-valent vertices, as sorted index triples
  std::vector<std::array<std::size_t, 3>> stars;
  for (const auto& v : g.vertices()) {
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      if (e.is_self_loop()) continue;
      if (e.tail == v || e.head == v) incident.push_back(i);
    }
    if (incident.size() == 3)
      stars.push_back({incident[0], incident[1], incident[2]});
  }
  auto contains_triple = [](const std::vector<std::size_t>& subset,
                            const std::array<std::size_t, 3>& t) {
    return std::binary_search(subset.begin(), subset.end(), t[0]) &&
           std::binary_search(subset.begin(), subset.end(), t[1]) &&
           std::binary_search(subset.begin(), subset.end(), t[2]);
  };

  std::vector<std::vector<std::size_t>> classes[3];
  const std::size_t n = allowed.size();
  std::vector<std::size_t> pick(5);
  // lexicographic 5-combinations of `allowed`
  std::vector<std::size_t> c{0, 1, 2, 3, 4};
  if (n < 5) return {};
  while (true) {
    for (int i = 0; i < 5; ++i) pick[static_cast<std::size_t>(i)] = allowed[c[static_cast<std::size_t>(i)]];
    int rank = 2;
    for (const auto& t : triangles)
      if (contains_triple(pick, {t[0], t[1], t[2]})) {
        rank = 0;
        break;
      }
    if (rank == 2)
      for (const auto& s : stars)
        if (contains_triple(pick, s)) {
          rank = 1;
          break;
        }
    classes[rank].push_back(pick);
    // next combination
    int i = 4;
    while (i >= 0 &&
           c[static_cast<std::size_t>(i)] == n - 5 + static_cast<std::size_t>(i))
      --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < 5; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& cls : classes)
    for (auto& s : cls) out.push_back(std::move(s));
  return out;
}

ReductionTrace order_search(const Multigraph& g,
                            const std::vector<std::size_t>& allowed,
                            std::size_t target, int budget) {
  SearchCtx ctx;
  ctx.target = target;
  ctx.budget = budget;
  for (std::size_t idx : allowed) {
    const std::string& id = g.edges()[idx].id;
    ctx.vars.emplace_back(id, g.edge_var(id));
  }
  auto slot_of = [&](std::size_t edge_idx) {
    return static_cast<std::size_t>(
        std::lower_bound(allowed.begin(), allowed.end(), edge_idx) -
        allowed.begin());
  };
  for (const auto& seed : ranked_seeds(g, allowed)) {
    if (--ctx.budget < 0) {
      ctx.exhausted = true;
      break;
    }
    std::vector<std::string> five;
    for (std::size_t idx : seed) five.push_back(g.edges()[idx].id);
    ReductionTrace trace = start_trace(g, five);
    if (trace.d5.is_zero() || target <= 5) {
      finish(trace, trace.d5);
      return trace;
    }
    std::vector<bool> used(ctx.vars.size(), false);
    for (std::size_t idx : seed) used[slot_of(idx)] = true;
    if (dfs(ctx, trace, trace.d5, used)) return *ctx.found;
    if (ctx.exhausted) break;
  }
  if (ctx.exhausted) {
    ReductionTrace trace = ctx.have_stuck ? ctx.deepest_stuck
                                          : ReductionTrace{};
    trace.outcome = ReductionOutcome::Stuck;
    trace.stuck_reasons.push_back("budget-exhausted");
    return trace;
  }
  if (ctx.have_stuck) return ctx.deepest_stuck;
  ReductionTrace trace;
  trace.outcome = ReductionOutcome::Stuck;
  trace.stuck_reasons.push_back("no admissible 5-edge seed");
  return trace;
}

}  // namespace

ReductionTrace auto_order_search(const Multigraph& g, int budget) {
  if (g.edge_count() < 5)
    throw std::invalid_argument("auto_order_search: need at least 5 edges");
  std::vector<std::size_t> allowed(g.edge_count());
  for (std::size_t i = 0; i < allowed.size(); ++i) allowed[i] = i;
  const std::size_t target =
      std::max<std::size_t>(5, g.edge_count() - 1);
  return order_search(g, allowed, target, budget);
}

ReductionTrace restricted_order_search(const Multigraph& g,
                                       const std::vector<std::string>& allowed,
                                       std::size_t target_consumed,
                                       int budget) {
  if (target_consumed < 5)
    throw std::invalid_argument(
        "restricted_order_search: target must be >= 5");
  std::vector<std::size_t> indices;
  for (const auto& id : allowed) indices.push_back(g.edge_index(id));
  std::sort(indices.begin(), indices.end());
  if (indices.size() < target_consumed)
    throw std::invalid_argument(
        "restricted_order_search: fewer allowed edges than the target");
  return order_search(g, indices, target_consumed, budget);
}

ReductionTrace continue_reduction(const Poly& start,
                                  const std::vector<std::string>& variables,
                                  std::size_t extra_steps, int budget) {
  SearchCtx ctx;
  ctx.target = extra_steps;
  ctx.budget = budget;
  for (const auto& name : variables)
    ctx.vars.emplace_back(name, VarTable::intern(name));
  ReductionTrace trace;
  trace.d5 = strip(start);
  if (trace.d5.is_zero() || extra_steps == 0) {
    finish(trace, trace.d5);
    return trace;
  }
  std::vector<bool> used(ctx.vars.size(), false);
  if (dfs(ctx, trace, trace.d5, used)) return *ctx.found;
  if (ctx.exhausted) {
    ReductionTrace out = ctx.have_stuck ? ctx.deepest_stuck : trace;
    out.outcome = ReductionOutcome::Stuck;
    out.stuck_reasons.push_back("budget-exhausted");
    return out;
  }
  if (ctx.have_stuck) return ctx.deepest_stuck;
  trace.outcome = ReductionOutcome::Stuck;
  trace.stuck_reasons.push_back("no admissible variable");
  return trace;
}

WeightEstimate weight_estimate(const Multigraph& g,
                               const ReductionTrace& trace) {
  WeightEstimate est;
  est.edge_count = static_cast<int>(g.edge_count());
  est.maximal_weight_bound = est.edge_count - 3;
  est.drop_bound = est.edge_count - 4;
  switch (trace.outcome) {
    case ReductionOutcome::Reduced:
      est.verdict = WeightVerdict::NoDropDetected;
      break;
    case ReductionOutcome::WeightDrop:
      est.verdict = WeightVerdict::Drop;
      break;
    case ReductionOutcome::Stuck:
      est.verdict = WeightVerdict::NotReducible;
      break;
  }
  return est;
}

}  // namespace graphpoly
