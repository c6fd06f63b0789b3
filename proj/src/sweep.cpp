#include "hm/sweep.hpp"

#include <omp.h>

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

#include "hm/lp.hpp"

namespace hm {

namespace {

std::size_t g_workers = 0;

/// Lazily solved nu' for the current mask, shared across all requested sizes.
class FractionalProbe {
 public:
  FractionalProbe(const EdgeUniverse& u, EdgeMask mask, bool shortcuts, SweepStats& stats)
      : u_(u), mask_(mask), shortcuts_(shortcuts), stats_(stats) {}

  bool lacks(const Rational& s) {
    if (shortcuts_) {
      const auto c = static_cast<std::size_t>(s.ceil().get_ui());
      // nu' >= nu >= c >= s.
      if (has_matching(u_, mask_, c)) return false;
      // nu' = mu <= c-1 < s.
      if (has_vertex_cover(u_, mask_, c - 1)) return true;
    }
    if (!value_) {
      value_ = nu_frac(u_.materialize(mask_)).value;
      ++stats_.lp_solves;
    }
    return *value_ < s;
  }

 private:
  const EdgeUniverse& u_;
  EdgeMask mask_;
  bool shortcuts_;
  SweepStats& stats_;
  std::optional<Rational> value_;
};

void merge_into(std::vector<SweepBest>& acc, const std::vector<SweepBest>& part) {
  for (std::size_t t = 0; t < acc.size(); ++t) {
    if (part[t].degree && (!acc[t].degree || *part[t].degree > *acc[t].degree)) acc[t] = part[t];
  }
}

using SharedFloor = std::vector<std::atomic<long>>;

void raise(std::atomic<long>& floor, long value) {
  long cur = floor.load(std::memory_order_relaxed);
  while (cur < value && !floor.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

/// With `shared`, degrees strictly below another chunk's incumbent are skipped.
/// Ties are still probed, so each chunk still finds its first mask at the
/// overall maximum and the ordered merge is unchanged.
std::vector<SweepBest> sweep_range(const EdgeUniverse& u, const SweepQuery& q, MaskRange range,
                                   SweepStats* stats, SharedFloor* shared) {
  const auto table = u.degree_table(q.d);
  std::vector<SweepBest> best(q.sizes.size());
  std::vector<std::size_t> whole;
  for (const auto& s : q.sizes) whole.push_back(static_cast<std::size_t>(s.ceil().get_ui()));
  SweepStats local;

  for (EdgeMask mask = range.begin; mask < range.end; ++mask) {
    ++local.graphs;
    const std::size_t deg = q.d == 0 ? static_cast<std::size_t>(std::popcount(mask))
                                     : min_d_degree(table, mask);
    FractionalProbe probe(u, mask, q.shortcuts, local);
    for (std::size_t t = 0; t < q.sizes.size(); ++t) {
      // Only a strictly larger degree can change the answer.
      if (best[t].degree && deg <= *best[t].degree) continue;
      if (shared && static_cast<long>(deg) < (*shared)[t].load(std::memory_order_relaxed)) continue;
      const bool lacks = q.mode == MatchingMode::Integral ? !has_matching(u, mask, whole[t])
                                                          : probe.lacks(q.sizes[t]);
      if (lacks) {
        best[t] = {deg, mask};
        if (shared) raise((*shared)[t], static_cast<long>(deg));
      }
    }
  }
  if (stats) {
    stats->graphs += local.graphs;
    stats->lp_solves += local.lp_solves;
  }
  return best;
}

}  // namespace

std::vector<SweepBest> sweep_serial(const EdgeUniverse& u, const SweepQuery& q, MaskRange range,
                                    SweepStats* stats) {
  return sweep_range(u, q, range, stats, nullptr);
}

std::vector<SweepBest> sweep_parallel(const EdgeUniverse& u, const SweepQuery& q, MaskRange range,
                                      SweepStats* stats) {
  const std::size_t workers = worker_count();
  const auto chunks = partition(range.end - range.begin, workers * 16);
  std::vector<std::vector<SweepBest>> parts(chunks.size());
  std::vector<SweepStats> part_stats(chunks.size());
  SharedFloor floor(q.sizes.size());
  for (auto& f : floor) f.store(-1);

#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(workers))
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks.size()); ++c) {
    const MaskRange r{range.begin + chunks[c].begin, range.begin + chunks[c].end};
    parts[c] = sweep_range(u, q, r, &part_stats[c], &floor);
  }

  std::vector<SweepBest> best(q.sizes.size());
  for (std::size_t c = 0; c < parts.size(); ++c) {
    merge_into(best, parts[c]);
    if (stats) {
      stats->graphs += part_stats[c].graphs;
      stats->lp_solves += part_stats[c].lp_solves;
    }
  }
  return best;
}

std::vector<Rational> link_values_serial(const Hypergraph& h, const std::vector<VertexSet>& sets) {
  std::vector<Rational> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(nu_frac(link(h, s).graph).value);
  return out;
}

std::vector<Rational> link_values_parallel(const Hypergraph& h,
                                           const std::vector<VertexSet>& sets) {
  std::vector<Rational> out(sets.size());
  const auto workers = static_cast<int>(worker_count());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sets.size()); ++i) {
    out[i] = nu_frac(link(h, sets[i]).graph).value;
  }
  return out;
}

std::size_t worker_count() {
  if (g_workers > 0) return g_workers;
  if (const char* env = std::getenv("HM_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return static_cast<std::size_t>(omp_get_max_threads());
}

void set_worker_count(std::size_t workers) { g_workers = workers; }

}  // namespace hm
