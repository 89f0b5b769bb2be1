#include "rainbow/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rainbow/characterize.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/oriented.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/subgraphs.hpp"
#include "rainbow/transform.hpp"
#include "rainbow/turan.hpp"

namespace rainbow {

namespace {

constexpr int kExhaustiveCliqueOrder = 5;  // T5 / P1: enumerate K_n colorings up to here
constexpr int kExhaustiveExtremalOrder = 7;  // T6 / L3 / L4: exact-c sweeps up to here
constexpr std::int64_t kSampleChunk = 250;
constexpr int kDescentSteps = 4000;
constexpr std::int64_t kAttemptFactor = 20;

struct Param {
  int k = 0;
  int ell = 0;
};

struct Verdict {
  bool premise = false;
  std::optional<std::string> failure;
};

using Tallies = std::map<std::string, std::int64_t>;
using Check = std::function<Verdict(const EdgeColoredGraph&, Param, Tallies&)>;

struct Partial {
  std::int64_t instances = 0;
  std::int64_t premise_hits = 0;
  std::int64_t failures = 0;
  std::vector<Counterexample> kept;
  Tallies tallies;
};

std::string str(std::int64_t v) { return std::to_string(v); }

std::map<std::string, std::int64_t> params_of(int n, Param p, TheoremId id) {
  std::map<std::string, std::int64_t> out{{"n", n}};
  if (id != TheoremId::T1) out["k"] = p.k;
  if (id == TheoremId::P1) out["ell"] = p.ell;
  return out;
}

Verdict safe_check(const Check& check, const EdgeColoredGraph& g, Param p) {
  Tallies scratch;
  try {
    return check(g, p, scratch);
  } catch (const PreconditionError&) {
    return {};
  }
}

// Greedy vertex then edge deletion while the check keeps failing.
EdgeColoredGraph minimize(EdgeColoredGraph g, Param p, const Check& check) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (Vertex v = 0; v < g.n() && !shrunk; ++v) {
      auto h = g.without_vertex(v);
      if (safe_check(check, h, p).failure) {
        g = std::move(h);
        shrunk = true;
      }
    }
  }
  shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const auto& e : g.edges()) {
      auto h = g.without_edge(e.u, e.v);
      if (safe_check(check, h, p).failure) {
        g = std::move(h);
        shrunk = true;
        break;
      }
    }
  }
  return g;
}

void record(Partial& part, TheoremId id, const EdgeColoredGraph& g, Param p, const Check& check,
            const std::string& reason) {
  ++part.failures;
  if (part.kept.size() >= kKeptCounterexamples) return;
  auto small = minimize(g, p, check);
  auto again = safe_check(check, small, p).failure;
  if (!again) {  // minimization should keep the failure; fall back to the original
    small = g;
    again = reason;
  }
  part.kept.push_back({params_of(small.n(), p, id), *again, std::move(small), {}});
}

void apply(Partial& part, TheoremId id, const EdgeColoredGraph& g, const std::vector<Param>& params,
           const Check& check) {
  ++part.instances;
  for (Param p : params) {
    auto v = check(g, p, part.tallies);
    if (v.premise) ++part.premise_hits;
    if (v.failure) record(part, id, g, p, check, *v.failure);
  }
}

// ---- statements ----

Verdict check_t1(const EdgeColoredGraph& g, Param, Tallies&) {
  const auto thr = triangle_threshold(g.n());
  const auto mc = g.m() + g.c();
  if (mc < thr) return {};
  if (count_rainbow_triangles(g) >= 1) return {true, {}};
  return {true, "m+c = " + str(mc) + " >= C(n+1,2) = " + str(thr) + " but no rainbow triangle"};
}

Verdict check_t2(const EdgeColoredGraph& g, Param p, Tallies&) {
  const auto thr = triangle_threshold(g.n()) + p.k - 1;
  const auto mc = g.m() + g.c();
  if (mc < thr) return {};
  const auto found = count_rainbow_triangles(g);
  if (found >= p.k) return {true, {}};
  return {true, "m+c = " + str(mc) + " >= " + str(thr) + " but only " + str(found) +
                    " rainbow triangles"};
}

Verdict check_t4(const EdgeColoredGraph& g, Param p, Tallies&) {
  const auto thr = triangle_threshold(g.n()) + p.k - 1;
  const auto sum = stats(g).sum_color_degree();
  if (sum < thr) return {};
  const auto found = count_rainbow_triangles(g);
  if (found >= p.k) return {true, {}};
  return {true, "color-degree sum " + str(sum) + " >= " + str(thr) + " but only " + str(found) +
                    " rainbow triangles"};
}

Verdict check_l1(const EdgeColoredGraph& g, Param p, Tallies&) {
  const auto thr = triangle_threshold(g.n()) + p.k - 1;
  const auto mc = g.m() + g.c();
  if (mc < thr || count_rainbow_triangles(g) != p.k) return {};
  if (mc != thr) return {true, "exactly k rainbow triangles with m+c = " + str(mc) + " > " + str(thr)};
  if (!g.is_complete()) return {true, "exactly k rainbow triangles at m+c = " + str(mc) + " but not complete"};
  return {true, {}};
}

Verdict check_t3(const EdgeColoredGraph& g, Param p, Tallies& tallies) {
  const int n = g.n(), k = p.k;
  const bool stats_ok = g.is_complete() && g.c() == n + k - 1 && count_rainbow_triangles(g) == k;
  const auto cert = is_in_gk(g, k);
  if (n < 3 * k) {
    if (stats_ok) ++tallies["n<3k k=" + std::to_string(k) + ": premise holds, " +
                            (cert ? "accepted" : "rejected")];
    return {};
  }
  if (cert && !stats_ok) return {false, "accepted without complete, c = n+k-1, exactly k triangles"};
  if (!stats_ok) return {};
  if (!cert) return {true, "premises hold but is_in_gk rejects"};
  if (!validate_gk_certificate(g, k, *cert)) return {true, "G_k certificate fails revalidation"};
  return {true, {}};
}

Verdict check_t5(const EdgeColoredGraph& g, Param p, Tallies&) {
  if (p.k < 4 || g.n() < p.k) return {};
  const auto thr = clique_threshold(g.n(), p.k);
  const auto mc = g.m() + g.c();
  if (mc < thr) return {};
  if (has_rainbow_clique(g, p.k)) return {true, {}};
  return {true, "m+c = " + str(mc) + " >= " + str(thr) + " but no rainbow K_" + str(p.k)};
}

Verdict check_p1(const EdgeColoredGraph& g, Param p, Tallies&) {
  if (p.k < 4 || g.n() < p.k) return {};
  const auto thr = clique_threshold(g.n(), p.k) - 2 + 2 * p.ell;
  const auto mc = g.m() + g.c();
  if (mc < thr) return {};
  const auto found = count_rainbow_cliques(g, p.k, static_cast<std::size_t>(p.ell));
  if (found >= p.ell) return {true, {}};
  return {true, "m+c = " + str(mc) + " >= " + str(thr) + " but only " + str(found) + " rainbow K_" +
                    str(p.k)};
}

std::int64_t extremal_mc(int n, int k) { return choose2(n) + turan_number(n, k - 2) + 1; }

bool complete_extremal(const EdgeColoredGraph& g, int k) {
  return g.is_complete() && g.c() == turan_number(g.n(), k - 2) + 1 && !has_rainbow_clique(g, k);
}

Verdict check_t6(const EdgeColoredGraph& g, Param p, Tallies& tallies) {
  const int n = g.n(), k = p.k;
  if (k < 6 || n < k) return {};
  if (g.m() + g.c() != extremal_mc(n, k) || has_rainbow_clique(g, k)) return {};
  const auto cert = is_in_hk(g, k);
  if (!cert) return {true, "extremal and rainbow-K_k-free but not in H_k"};
  if (!validate_hk_certificate(g, k, *cert)) return {true, "H_k certificate fails revalidation"};
  ++tallies[std::string("accepted as case ") + (cert->which == HkCertificate::Case::I ? "I" : "II")];
  return {true, {}};
}

Verdict check_l3(const EdgeColoredGraph& g, Param p, Tallies&) {
  const int n = g.n(), k = p.k;
  if (k < 6 || n < k || n / (k - 2) < 2 || !complete_extremal(g, k)) return {};
  const auto parts = find_rainbow_spanning_turan(g, k - 2);
  if (!parts) return {};
  if (common_intra_part_color(g, *parts)) return {true, {}};
  return {true, "intra-part edges of the rainbow Turan subgraph do not share one new color"};
}

Verdict check_l4(const EdgeColoredGraph& g, Param p, Tallies&) {
  const int n = g.n(), k = p.k;
  if (k < 6 || n < k || !complete_extremal(g, k)) return {};
  if (find_rainbow_spanning_turan(g, k - 2)) return {true, {}};
  return {true, "complete, c = t+1, no rainbow K_k, but no rainbow spanning T(n,k-2)"};
}

Verdict check_l5(const EdgeColoredGraph& g, Param p, Tallies&) {
  const int n = g.n(), k = p.k;
  if (k < 6 || n < k) return {};
  if (g.m() + g.c() != extremal_mc(n, k) || has_rainbow_clique(g, k)) return {};
  if (g.is_complete()) return {true, {}};
  return {true, "m+c = C(n,2)+t+1 without rainbow K_k on a non-complete graph"};
}

Check check_for(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return check_t1;
    case TheoremId::T2: return check_t2;
    case TheoremId::T3: return check_t3;
    case TheoremId::T4: return check_t4;
    case TheoremId::T5: return check_t5;
    case TheoremId::T6: return check_t6;
    case TheoremId::L1: return check_l1;
    case TheoremId::L3: return check_l3;
    case TheoremId::L4: return check_l4;
    case TheoremId::L5: return check_l5;
    case TheoremId::P1: return check_p1;
    case TheoremId::L2: break;
  }
  throw std::logic_error("no coloring check for this statement");
}

// ---- work planning ----

using Task = std::function<Partial()>;

struct Plan {
  std::vector<std::unique_ptr<ColoringEnumerator>> enumerators;
  std::vector<Task> tasks;
  std::vector<std::string> notes;
  std::uint64_t next_stream = 1;
};

void plan_exhaustive(Plan& plan, TheoremId id, int n, ClassConstraint constraint, bool subsets,
                     std::vector<Param> params) {
  auto& en = plan.enumerators.emplace_back(std::make_unique<ColoringEnumerator>(n, constraint, subsets));
  const ColoringEnumerator* e = en.get();
  const Check check = check_for(id);
  for (auto& unit : e->work_units())
    plan.tasks.push_back([=, unit = std::move(unit)] {
      Partial part;
      e->for_each_in(unit, [&](const EdgeColoredGraph& g) { apply(part, id, g, params, check); });
      return part;
    });
}

// Descent draws at a fixed m + c target. With `need_clean`, only rainbow-K_k-free draws
// count toward `samples` (attempts capped); otherwise every on-target draw counts.
void plan_descent(Plan& plan, TheoremId id, const VerifyGrid& grid, int n, int k, std::int64_t target,
                  bool complete_only, std::int64_t stop_at, bool need_clean, std::vector<Param> params) {
  const auto slots = choose2(n);
  if (target > 2 * slots || target < (complete_only ? slots + 1 : 0)) {
    auto note = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": target m+c = " + str(target) +
                (complete_only ? " unreachable on complete graphs" : " unreachable") + ", cell skipped";
    plan.notes.push_back(std::move(note));
    return;
  }
  const Check check = check_for(id);
  for (std::int64_t done = 0; done < grid.samples; done += kSampleChunk) {
    const std::int64_t want = std::min(kSampleChunk, grid.samples - done);
    const std::uint64_t seed = make_rng(grid.seed, plan.next_stream++)();
    plan.tasks.push_back([=] {
      Partial part;
      RainbowCliqueDescent descent(n, k, target, complete_only, seed);
      std::int64_t got = 0;
      for (std::int64_t attempt = 0; got < want && attempt < want * kAttemptFactor; ++attempt) {
        auto s = descent.next(kDescentSteps, stop_at);
        if (!s) continue;
        if (need_clean && s->rainbow_cliques != 0) continue;
        ++got;
        apply(part, id, s->graph, params, check);
      }
      if (got < want)
        ++part.tallies["n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       ": sample quota not reached in some chunks"];
      return part;
    });
  }
}

void plan_l2(Plan& plan, const VerifyGrid& grid) {
  const int lo = std::max(grid.n_min, 1), hi = std::max(lo, grid.n_max);
  for (std::int64_t done = 0; done < grid.samples; done += kSampleChunk) {
    const std::int64_t want = std::min(kSampleChunk, grid.samples - done);
    const std::uint64_t stream = plan.next_stream++;
    const std::uint64_t seed = grid.seed;
    plan.tasks.push_back([=] {
      Partial part;
      auto rng = make_rng(seed, stream);
      std::uniform_int_distribution<int> order(lo, hi);
      std::uniform_real_distribution<double> density(0.2, 1.0);
      for (std::int64_t i = 0; i < want; ++i) {
        const auto d = random_oriented_graph(rng, order(rng), density(rng));
        ++part.instances;
        const auto assoc = associated_colored_graph(d);
        const auto& g = assoc.graph;
        const auto directed = directed_triangles(d);
        const auto omega = out_component_sum(d);
        const auto bound = guaranteed_directed_triangles(d.n(), d.arc_count(), omega);
        if (bound > 0) ++part.premise_hits;
        std::string reason;
        if (g.m() != d.arc_count()) reason = "m != a(D)";
        else if (g.c() != omega) reason = "c != sum of out-component numbers";
        else if (directed != list_rainbow_triangles(g)) reason = "directed and rainbow triangle sets differ";
        else if (static_cast<std::int64_t>(directed.size()) < bound)
          reason = "a + sum omega forces " + str(bound) + " directed triangles, found " + str(directed.size());
        if (reason.empty()) continue;
        ++part.failures;
        if (part.kept.size() < kKeptCounterexamples) {
          std::ostringstream arcs;
          for (const auto& a : d.arcs()) arcs << a.tail << ' ' << a.head << '\n';
          part.kept.push_back({{{"n", d.n()}}, reason, g, arcs.str()});
        }
      }
      return part;
    });
  }
}

std::vector<Param> k_params(const VerifyGrid& grid, int lo, int hi) {
  std::vector<Param> out;
  for (int k = std::max(grid.k_min, lo); k <= std::min(grid.k_max, hi); ++k) out.push_back({k, 0});
  return out;
}

Plan make_plan(TheoremId id, const VerifyGrid& grid) {
  Plan plan;
  const bool subsets_ok = grid.include_noncomplete;
  switch (id) {
    case TheoremId::T1:
    case TheoremId::T2:
    case TheoremId::T4:
    case TheoremId::L1: {
      const auto params = id == TheoremId::T1 ? std::vector<Param>{{1, 0}} : k_params(grid, 1, 1 << 20);
      for (int n = std::max(grid.n_min, 1); n <= grid.n_max; ++n) {
        const bool subsets = subsets_ok && n <= 5;
        if (subsets_ok && !subsets)
          plan.notes.push_back("n=" + std::to_string(n) + ": complete colorings only");
        plan_exhaustive(plan, id, n, ClassConstraint::unconstrained(), subsets, params);
      }
      break;
    }
    case TheoremId::T3:
      for (int n = std::max(grid.n_min, 1); n <= grid.n_max; ++n)
        for (int k = std::max(grid.k_min, 0); k <= grid.k_max; ++k) {
          const int c = n + k - 1;
          if (c > choose2(n)) continue;
          if (n < 3 * k)
            plan.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                 ": n < 3k, outcomes recorded but not judged");
          plan_exhaustive(plan, id, n, ClassConstraint::exactly(c), false, {{k, 0}});
        }
      break;
    case TheoremId::T5:
    case TheoremId::P1: {
      const int ell_max = id == TheoremId::P1 ? std::max(grid.ell_max, 1) : 1;
      std::vector<Param> all;
      for (int k = std::max(grid.k_min, 4); k <= grid.k_max; ++k)
        for (int ell = 1; ell <= ell_max; ++ell) all.push_back({k, id == TheoremId::P1 ? ell : 0});
      for (int n = std::max(grid.n_min, 4); n <= std::min(grid.n_max, kExhaustiveCliqueOrder); ++n)
        plan_exhaustive(plan, id, n, ClassConstraint::unconstrained(), subsets_ok && n <= 5, all);
      for (int n = std::max(grid.n_min, kExhaustiveCliqueOrder + 1); n <= grid.n_max; ++n)
        for (const auto& p : all) {
          if (p.k > n) continue;
          const int ell = std::max(p.ell, 1);
          const auto target = clique_threshold(n, p.k) - 2 + 2 * ell;
          for (bool complete_only : {true, false})
            plan_descent(plan, id, grid, n, p.k, target, complete_only, ell, false, {p});
        }
      break;
    }
    case TheoremId::T6:
    case TheoremId::L3:
    case TheoremId::L4:
    case TheoremId::L5:
      for (int k = std::max(grid.k_min, 6); k <= grid.k_max; ++k)
        for (int n = std::max(grid.n_min, k); n <= grid.n_max; ++n) {
          const auto target = extremal_mc(n, k);
          if (id != TheoremId::L5 && n <= kExhaustiveExtremalOrder) {
            plan_exhaustive(plan, id, n, ClassConstraint::exactly(static_cast<int>(target - choose2(n))),
                            false, {{k, 0}});
            continue;
          }
          const bool complete_only = id != TheoremId::L5 && !(id == TheoremId::T6 && subsets_ok);
          plan_descent(plan, id, grid, n, k, target, complete_only, 0, true, {{k, 0}});
        }
      break;
    case TheoremId::L2: plan_l2(plan, grid); break;
  }
  return plan;
}

void add_witness(VerificationReport& report, std::string label, EdgeColoredGraph g, std::int64_t stat,
                 std::int64_t thr, std::int64_t structures, std::int64_t needed) {
  TightnessWitness w{std::move(label), std::move(g), stat, thr, structures, false};
  w.sharp = stat == thr - 1 && structures < needed;
  report.witnesses.push_back(std::move(w));
}

void collect_witnesses(VerificationReport& report, const VerifyGrid& grid) {
  switch (report.theorem) {
    case TheoremId::T1:
      for (int n = std::max(grid.n_min, 1); n <= grid.n_max; ++n) {
        auto g = find_tightness_witness(TheoremId::T1, n, 0);
        const auto mc = g.m() + g.c(), found = count_rainbow_triangles(g);
        add_witness(report, "G_0 n=" + std::to_string(n), std::move(g), mc, triangle_threshold(n), found, 1);
      }
      break;
    case TheoremId::T2:
      for (int n = std::max(grid.n_min, 1); n <= grid.n_max; ++n)
        for (int k = std::max(grid.k_min, 1); k <= grid.k_max && 3 * k <= n; ++k) {
          auto g = find_tightness_witness(TheoremId::T2, n, k);
          const auto mc = g.m() + g.c(), found = count_rainbow_triangles(g);
          add_witness(report, "G_k n=" + std::to_string(n) + " k=" + std::to_string(k), std::move(g), mc,
                      triangle_threshold(n) + k, found, k + 1);
        }
      break;
    case TheoremId::T5:
      for (int k = std::max(grid.k_min, 4); k <= grid.k_max; ++k)
        for (int n = std::max(grid.n_min, k); n <= std::min(grid.n_max, 12); ++n) {
          auto g = find_tightness_witness(TheoremId::T5, n, k);
          const auto mc = g.m() + g.c(), found = count_rainbow_cliques(g, k);
          add_witness(report, "H n=" + std::to_string(n) + " k=" + std::to_string(k), std::move(g), mc,
                      clique_threshold(n, k), found, 1);
        }
      break;
    default: break;
  }
}

void validate_grid(const VerifyGrid& grid) {
  if (grid.jobs < 1) throw PreconditionError("jobs must be at least 1");
  if (grid.samples < 0) throw PreconditionError("samples must be non-negative");
  if (grid.n_min > grid.n_max) throw PreconditionError("n_min exceeds n_max");
  if (grid.k_min > grid.k_max) throw PreconditionError("k_min exceeds k_max");
}

nlohmann::json graph_json(const EdgeColoredGraph& g) {
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, color_value(e.color)});
  return {{"n", g.n()}, {"edges", edges}};
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::L1: return "L1";
    case TheoremId::L2: return "L2";
    case TheoremId::L3: return "L3";
    case TheoremId::L4: return "L4";
    case TheoremId::L5: return "L5";
    case TheoremId::P1: return "P1";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (auto id : kAllTheorems) {
    const auto canon = theorem_name(id);
    if (name.size() == canon.size() &&
        std::equal(name.begin(), name.end(), canon.begin(),
                   [](char a, char b) { return std::toupper(static_cast<unsigned char>(a)) == b; }))
      return id;
  }
  return std::nullopt;
}

VerifyGrid default_grid(TheoremId id) {
  VerifyGrid g;
  switch (id) {
    case TheoremId::T1: g.k_max = 1; break;
    case TheoremId::T2:
    case TheoremId::L1: g.include_noncomplete = true; break;
    case TheoremId::T3: g.k_min = 0; g.k_max = 2; break;
    case TheoremId::T4: g.k_max = 2; g.include_noncomplete = true; break;
    case TheoremId::T5: g.n_min = 4; g.n_max = 8; g.k_min = 4; g.k_max = 6; g.samples = 200; break;
    case TheoremId::P1: g.n_min = 4; g.n_max = 10; g.k_min = 4; g.k_max = 6; g.samples = 100; break;
    case TheoremId::T6:
    case TheoremId::L3:
    case TheoremId::L4: g.n_min = 6; g.n_max = 9; g.k_min = 6; g.k_max = 7; g.samples = 500; break;
    case TheoremId::L5: g.n_min = 6; g.n_max = 9; g.k_min = 6; g.k_max = 7; g.samples = 200; break;
    case TheoremId::L2: g.n_max = 12; g.samples = 10000; break;
  }
  return g;
}

bool VerificationReport::passed() const {
  return counterexample_count == 0 &&
         std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.sharp; });
}

VerificationReport verify_theorem(TheoremId id, const VerifyGrid& grid) {
  validate_grid(grid);
  const auto start = std::chrono::steady_clock::now();
  Plan plan = make_plan(id, grid);

  std::vector<Partial> results(plan.tasks.size());
  const auto count = static_cast<std::int64_t>(plan.tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(grid.jobs)
  for (std::int64_t i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = plan.tasks[static_cast<std::size_t>(i)]();

  VerificationReport report;
  report.theorem = id;
  report.grid = grid;
  Tallies tallies;
  for (auto& r : results) {
    report.instances += r.instances;
    report.premise_hits += r.premise_hits;
    report.counterexample_count += r.failures;
    for (auto& c : r.kept)
      if (report.counterexamples.size() < kKeptCounterexamples) report.counterexamples.push_back(std::move(c));
    for (const auto& [key, v] : r.tallies) tallies[key] += v;
  }
  report.notes = std::move(plan.notes);
  for (const auto& [key, v] : tallies) report.notes.push_back(key + ": " + str(v));
  collect_witnesses(report, grid);
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

EdgeColoredGraph find_tightness_witness(TheoremId id, int n, int k) {
  switch (id) {
    case TheoremId::T1: return build_gk(n, 0).graph;
    case TheoremId::T2: return build_gk(n, k).graph;
    case TheoremId::T5: return build_hnk(n, k).graph;
    default: break;
  }
  throw PreconditionError("no tightness witness construction for " + std::string(theorem_name(id)));
}

EdgeColoredGraph recolor_witness_colordeg(int n) { return build_recolored_g1(n).graph; }

std::string to_json(const VerificationReport& r) {
  nlohmann::json doc;
  doc["theorem"] = theorem_name(r.theorem);
  doc["grid"] = {{"n_min", r.grid.n_min},
                 {"n_max", r.grid.n_max},
                 {"k_min", r.grid.k_min},
                 {"k_max", r.grid.k_max},
                 {"ell_max", r.grid.ell_max},
                 {"include_noncomplete", r.grid.include_noncomplete},
                 {"samples", r.grid.samples},
                 {"jobs", r.grid.jobs}};
  doc["seed"] = r.grid.seed;
  doc["instances"] = r.instances;
  doc["premise_hits"] = r.premise_hits;
  doc["counterexample_count"] = r.counterexample_count;
  auto& ces = doc["counterexamples"] = nlohmann::json::array();
  for (const auto& c : r.counterexamples) {
    nlohmann::json entry{{"params", c.params}, {"reason", c.reason}, {"graph", graph_json(c.graph)}};
    if (!c.digraph.empty()) entry["digraph_arcs"] = c.digraph;
    ces.push_back(std::move(entry));
  }
  auto& ws = doc["tightness_witnesses"] = nlohmann::json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"label", w.label},
                  {"statistic", w.statistic},
                  {"threshold", w.threshold},
                  {"structures", w.structures},
                  {"sharp", w.sharp}});
  doc["notes"] = r.notes;
  doc["wall_ms"] = r.wall_ms;
  doc["passed"] = r.passed();
  return doc.dump(2) + "\n";
}

std::string to_table(const VerificationReport& r) {
  std::ostringstream out;
  const auto& g = r.grid;
  std::size_t sharp = 0;
  for (const auto& w : r.witnesses) sharp += w.sharp;
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.1f ms", r.wall_ms);
  out << "theorem      " << theorem_name(r.theorem) << '\n'
      << "grid         n=" << g.n_min << ".." << g.n_max << " k=" << g.k_min << ".." << g.k_max
      << " ell<=" << g.ell_max << " noncomplete=" << (g.include_noncomplete ? "yes" : "no")
      << " samples=" << g.samples << " seed=" << g.seed << " jobs=" << g.jobs << '\n'
      << "instances    " << r.instances << '\n'
      << "premise hits " << r.premise_hits << '\n'
      << "counterex.   " << r.counterexample_count << '\n'
      << "witnesses    " << r.witnesses.size() << " (" << sharp << " sharp)\n"
      << "wall         " << wall << '\n';
  for (const auto& note : r.notes) out << "note         " << note << '\n';
  for (const auto& c : r.counterexamples) {
    out << "FAIL        ";
    for (const auto& [key, v] : c.params) out << ' ' << key << '=' << v;
    out << ": " << c.reason << '\n';
  }
  out << "result       " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace rainbow
