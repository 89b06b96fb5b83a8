#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ovdiam {

using VertexId = std::uint32_t;
using Weight = std::uint32_t;
using Distance = std::uint64_t;

inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

struct Arc {
  VertexId tail;
  VertexId head;
  Weight weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Unvalidated arc as read from user input; weights may be negative.
struct ArcSpec {
  std::int64_t tail;
  std::int64_t head;
  std::int64_t weight;
};

struct OutArc {
  VertexId head;
  Weight weight;
};

// Immutable weighted digraph: the arc list in insertion order plus a CSR
// out-adjacency. Parallel arcs are kept; self-loops are legal in the type.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  WeightedDigraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ > std::numeric_limits<VertexId>::max()) throw std::length_error("too many vertices");
    offsets_.assign(n_ + 1, 0);
    for (const auto& a : arcs_) {
      if (a.tail >= n_ || a.head >= n_) {
        throw std::out_of_range("arc endpoint out of range: " + std::to_string(a.tail) + " -> " +
                                std::to_string(a.head) + " with n=" + std::to_string(n_));
      }
      ++offsets_[a.tail + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    out_.resize(arcs_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& a : arcs_) out_[cursor[a.tail]++] = OutArc{a.head, a.weight};
    for (const auto& a : arcs_) max_weight_ = std::max(max_weight_, a.weight);
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  Weight max_weight() const noexcept { return max_weight_; }

  std::span<const OutArc> out(VertexId v) const noexcept {
    return {out_.data() + offsets_[v], out_.data() + offsets_[v + 1]};
  }

  // Lightest arc tail -> head, if any.
  std::optional<Weight> arc_weight(VertexId tail, VertexId head) const {
    std::optional<Weight> best;
    for (const auto& a : out(tail)) {
      if (a.head == head && (!best || a.weight < *best)) best = a.weight;
    }
    return best;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_{0};
  std::vector<OutArc> out_;
  Weight max_weight_ = 0;
};

inline WeightedDigraph build_graph(std::size_t n, std::span<const ArcSpec> specs) {
  std::vector<Arc> arcs;
  arcs.reserve(specs.size());
  for (const auto& s : specs) {
    if (s.tail < 0 || s.head < 0 || static_cast<std::uint64_t>(s.tail) >= n ||
        static_cast<std::uint64_t>(s.head) >= n) {
      throw std::out_of_range("arc endpoint out of range: " + std::to_string(s.tail) + " -> " +
                              std::to_string(s.head) + " with n=" + std::to_string(n));
    }
    if (s.weight < 0) {
      throw std::invalid_argument("negative weight " + std::to_string(s.weight) + " on arc " +
                                  std::to_string(s.tail) + " -> " + std::to_string(s.head));
    }
    if (s.weight > std::numeric_limits<Weight>::max()) {
      throw std::invalid_argument("weight " + std::to_string(s.weight) + " too large");
    }
    arcs.push_back(Arc{static_cast<VertexId>(s.tail), static_cast<VertexId>(s.head),
                       static_cast<Weight>(s.weight)});
  }
  return WeightedDigraph(n, std::move(arcs));
}

inline WeightedDigraph build_graph(std::size_t n, std::initializer_list<ArcSpec> specs) {
  return build_graph(n, std::span<const ArcSpec>(specs.begin(), specs.size()));
}

// Appends tail -> head and head -> tail with the same weight.
inline void add_double_arc(std::vector<Arc>& arcs, VertexId tail, VertexId head, Weight w) {
  if (tail == head) {
    throw std::invalid_argument("double-arc endpoints must differ (vertex " +
                                std::to_string(tail) + ")");
  }
  arcs.push_back(Arc{tail, head, w});
  arcs.push_back(Arc{head, tail, w});
}

inline WeightedDigraph reversed(const WeightedDigraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const auto& a : g.arcs()) arcs.push_back(Arc{a.head, a.tail, a.weight});
  return WeightedDigraph(g.vertex_count(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Single-source shortest paths.

struct DistanceArray {
  VertexId source = 0;
  std::vector<Distance> dist;  // kInfinity marks unreachable vertices

  Distance operator[](VertexId v) const { return dist[v]; }

  // Largest finite-or-infinite entry.
  Distance eccentricity() const {
    return dist.empty() ? 0 : *std::max_element(dist.begin(), dist.end());
  }
};

namespace detail {

// Dial's bucket queue: valid because every arc weight is at most
// `max_weight`, so all tentative labels lie in a window of max_weight + 1
// consecutive values around the current minimum.
class SsspWorkspace {
 public:
  void run(const WeightedDigraph& g, VertexId source, std::vector<Distance>& dist) {
    const std::size_t n = g.vertex_count();
    dist.assign(n, kInfinity);
    dist[source] = 0;
    if (g.max_weight() <= kBucketWeightLimit) {
      run_buckets(g, source, dist);
    } else {
      run_heap(g, source, dist);
    }
  }

  static constexpr Weight kBucketWeightLimit = 64;

 private:
  void run_buckets(const WeightedDigraph& g, VertexId source, std::vector<Distance>& dist) {
    const std::size_t width = static_cast<std::size_t>(g.max_weight()) + 1;
    if (buckets_.size() < width) buckets_.resize(width);
    for (auto& b : buckets_) b.clear();
    buckets_[0].push_back(source);
    std::size_t pending = 1;
    for (Distance current = 0; pending > 0; ++current) {
      auto& bucket = buckets_[current % width];
      // Zero-weight arcs push back into this same bucket; index-based loop.
      for (std::size_t idx = 0; idx < bucket.size(); ++idx) {
        const VertexId x = bucket[idx];
        --pending;
        if (dist[x] != current) continue;  // stale entry
        for (const auto& a : g.out(x)) {
          const Distance nd = current + a.weight;
          if (nd < dist[a.head]) {
            dist[a.head] = nd;
            buckets_[nd % width].push_back(a.head);
            ++pending;
          }
        }
      }
      bucket.clear();
    }
  }

  void run_heap(const WeightedDigraph& g, VertexId source, std::vector<Distance>& dist) {
    using Entry = std::pair<Distance, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.emplace(0, source);
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (d != dist[x]) continue;
      for (const auto& a : g.out(x)) {
        const Distance nd = d + a.weight;
        if (nd < dist[a.head]) {
          dist[a.head] = nd;
          heap.emplace(nd, a.head);
        }
      }
    }
  }

  std::vector<std::vector<VertexId>> buckets_;
};

}  // namespace detail

// Label-setting shortest paths from `source` under nonnegative weights.
inline DistanceArray sssp(const WeightedDigraph& g, VertexId source) {
  if (source >= g.vertex_count()) {
    throw std::out_of_range("source " + std::to_string(source) + " out of range");
  }
  DistanceArray out{source, {}};
  detail::SsspWorkspace ws;
  ws.run(g, source, out.dist);
  return out;
}

// ---------------------------------------------------------------------------
// Diameter.

struct DiameterResult {
  Distance value = 0;
  VertexId source = 0;
  VertexId target = 0;
};

// Maximum over ordered pairs of d(s, t), from one sssp per source. The
// reported pair is the lexicographically smallest maximizer.
inline DiameterResult exact_diameter(const WeightedDigraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("diameter of an empty graph");
  DiameterResult best;
  detail::SsspWorkspace ws;
  std::vector<Distance> dist;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    ws.run(g, s, dist);
    for (VertexId t = 0; t < dist.size(); ++t) {
      if (dist[t] > best.value) best = {dist[t], s, t};
    }
    if (best.value == kInfinity) break;
  }
  return best;
}

// Folklore 2-approximation: max of out- and in-eccentricity of one pivot.
// On a strongly connected graph diam/2 <= E <= diam.
inline Distance two_approx_estimate(const WeightedDigraph& g,
                                    std::optional<VertexId> pivot = std::nullopt) {
  const VertexId p = pivot.value_or(0);
  if (p >= g.vertex_count()) {
    throw std::out_of_range("pivot " + std::to_string(p) + " out of range");
  }
  const Distance out_ecc = sssp(g, p).eccentricity();
  const Distance in_ecc = sssp(reversed(g), p).eccentricity();
  return std::max(out_ecc, in_ecc);
}

// ---------------------------------------------------------------------------
// All-pairs oracle by cubic relaxation (Floyd-Warshall). Independent of
// sssp; intended for test-sized graphs only.

inline constexpr std::size_t kApspDefaultLimit = 512;

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), cells_(n * n, kInfinity) {}

  std::size_t size() const noexcept { return n_; }
  Distance& at(std::size_t s, std::size_t t) { return cells_[s * n_ + t]; }
  Distance at(std::size_t s, std::size_t t) const { return cells_[s * n_ + t]; }
  std::span<const Distance> row(std::size_t s) const { return {cells_.data() + s * n_, n_}; }

  Distance max_entry() const {
    return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
  }

 private:
  std::size_t n_;
  std::vector<Distance> cells_;
};

inline DistanceMatrix apsp_oracle(const WeightedDigraph& g,
                                  std::size_t limit = kApspDefaultLimit) {
  const std::size_t n = g.vertex_count();
  if (n > limit) {
    throw std::length_error("apsp_oracle: " + std::to_string(n) + " vertices exceeds limit " +
                            std::to_string(limit));
  }
  DistanceMatrix m(n);
  for (std::size_t v = 0; v < n; ++v) m.at(v, v) = 0;
  for (const auto& a : g.arcs()) {
    m.at(a.tail, a.head) = std::min<Distance>(m.at(a.tail, a.head), a.weight);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Distance ik = m.at(i, k);
      if (ik == kInfinity) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Distance kj = m.at(k, j);
        if (kj != kInfinity && ik + kj < m.at(i, j)) m.at(i, j) = ik + kj;
      }
    }
  }
  return m;
}

}  // namespace ovdiam
