#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ovdiam/digraph.hpp"
#include "ovdiam/errors.hpp"
#include "ovdiam/labels.hpp"
#include "ovdiam/ov_instance.hpp"

// Construction of the 4-OV -> Diameter gadget graph.
//
// Constant part: two hubs u, v joined to every member of the six families by
// the fixed weight table in constant_part_arcs(). Variable part: weight-1
// double-arcs between families whose existence depends on S:
//
//   ABC(a,b,c) -- AB(a,b;t)     some slot h of t has c[h] = b[h] = 1
//   AB(a,b;t)  -- AB(a,b;t')    t != t'                      (index-switching)
//   AB(a,b;t)  -- ADY(a,d;t)
//   ADX(a,d;t) -- ADY(a,d';t)   d' != d
//   ADX(a,d;t) -- ADY(a',d;t)   a' != a
//   ADX(a,d;t) -- ADY(a,d;t')   any t', including t' = t     (skew)
//   ADY(a,d;t) -- DC(d,c;t)
//   DC(d,c;t)  -- DC(d,c;t')    t != t'                      (index-switching)
//   DC(d,c;t)  -- DCB(d,c,b)    some slot h of t has b[h] = c[h] = 1
//
// An edge exists only when both endpoints do. Vertex existence counts the
// slots of t with multiplicity (so AB(a,b;i,i,i) needs only a[i] = b[i] = 1).

namespace ovdiam {

enum class EdgeKind : std::uint8_t { Regular, IndexSwitching, Skew };
enum class ArcKind : std::uint8_t { Hub, Regular, IndexSwitching, Skew };

inline constexpr std::string_view kind_name(ArcKind k) {
  constexpr std::array<std::string_view, 4> names = {"hub", "regular", "index-switching",
                                                     "skew"};
  return names[static_cast<std::size_t>(k)];
}

inline constexpr ArcKind to_arc_kind(EdgeKind k) {
  return static_cast<ArcKind>(static_cast<std::uint8_t>(k) + 1);
}

class OrthogonalTripleError : public std::runtime_error {
 public:
  explicit OrthogonalTripleError(OrthWitness w)
      : std::runtime_error("instance has an orthogonal triple (" + to_string(w) +
                           "); it lies outside the reduction's domain"),
        witness_(std::move(w)) {}

  const OrthWitness& witness() const noexcept { return witness_; }

 private:
  OrthWitness witness_;
};

class SizeBoundViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Existence predicates.

namespace detail {

inline void check_label_range(const OvInstance& inst, const VertexLabel& l) {
  for (std::size_t i = 0; i < vector_field_count(l.family); ++i) {
    if (l.vec[i] >= inst.size()) {
      throw std::out_of_range("label " + to_string(l) + ": vector index out of range");
    }
  }
  if (has_index_fields(l.family)) {
    for (auto s : l.idx.slots()) {
      if (s < 1 || s > inst.dimension()) {
        throw std::out_of_range("label " + to_string(l) + ": coordinate out of [1, " +
                                std::to_string(inst.dimension()) + "]");
      }
    }
  }
}

inline int ones_on_slots(const OvInstance& inst, std::uint32_t vec, const IndexTriple& t) {
  return int{inst.bit(vec, t.i)} + int{inst.bit(vec, t.j)} + int{inst.bit(vec, t.k)};
}

inline bool shares_one_on_slot(const OvInstance& inst, std::uint32_t x, std::uint32_t y,
                               const IndexTriple& t) {
  for (auto h : t.slots()) {
    if (inst.bit(x, h) && inst.bit(y, h)) return true;
  }
  return false;
}

}  // namespace detail

inline bool vertex_exists(const OvInstance& inst, const VertexLabel& l) {
  detail::check_label_range(inst, l);
  switch (l.family) {
    case Family::AB:
    case Family::DC:
      return detail::ones_on_slots(inst, l.vec[0], l.idx) == 3 &&
             detail::ones_on_slots(inst, l.vec[1], l.idx) >= 2;
    case Family::ADY:
      return detail::ones_on_slots(inst, l.vec[0], l.idx) +
                 detail::ones_on_slots(inst, l.vec[1], l.idx) == 6;
    case Family::ADX:
      return detail::ones_on_slots(inst, l.vec[0], l.idx) +
                 detail::ones_on_slots(inst, l.vec[1], l.idx) >= 5;
    default:
      return true;
  }
}

// Kind of the weight-1 double-arc between two non-hub vertices, if any.
inline std::optional<EdgeKind> edge_exists(const OvInstance& inst, VertexLabel x,
                                           VertexLabel y) {
  if (is_hub(x.family) || is_hub(y.family)) {
    throw std::invalid_argument("edge_exists is defined on non-hub labels only");
  }
  if (!vertex_exists(inst, x) || !vertex_exists(inst, y)) return std::nullopt;
  if (y.family < x.family) std::swap(x, y);

  const auto& xv = x.vec;
  const auto& yv = y.vec;
  switch (x.family) {
    case Family::ABC:
      if (y.family == Family::AB && xv[0] == yv[0] && xv[1] == yv[1] &&
          detail::shares_one_on_slot(inst, xv[2], xv[1], y.idx)) {
        return EdgeKind::Regular;
      }
      break;
    case Family::AB:
      if (y.family == Family::AB && xv[0] == yv[0] && xv[1] == yv[1] && x.idx != y.idx) {
        return EdgeKind::IndexSwitching;
      }
      if (y.family == Family::ADY && xv[0] == yv[0] && x.idx == y.idx) return EdgeKind::Regular;
      break;
    case Family::ADX:
      if (y.family == Family::ADY) {
        const bool same_a = xv[0] == yv[0];
        const bool same_d = xv[1] == yv[1];
        if (same_a && same_d) return EdgeKind::Skew;
        if (same_a != same_d && x.idx == y.idx) return EdgeKind::Regular;
      }
      break;
    case Family::ADY:
      if (y.family == Family::DC && xv[1] == yv[0] && x.idx == y.idx) return EdgeKind::Regular;
      break;
    case Family::DC:
      if (y.family == Family::DC && xv[0] == yv[0] && xv[1] == yv[1] && x.idx != y.idx) {
        return EdgeKind::IndexSwitching;
      }
      if (y.family == Family::DCB && xv[0] == yv[0] && xv[1] == yv[1] &&
          detail::shares_one_on_slot(inst, yv[2], xv[1], x.idx)) {
        return EdgeKind::Regular;
      }
      break;
    default:
      break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constant part.

struct HubArcWeights {
  Weight to_u;    // member -> u
  Weight from_u;  // u -> member
  Weight to_v;    // member -> v
  Weight from_v;  // v -> member
};

inline constexpr Weight kNoArc = std::numeric_limits<Weight>::max();
inline constexpr Weight kHubPairWeight = 2;  // u <-> v

// The fixed weight table between a family member and the hubs. kNoArc marks
// an absent arc.
inline constexpr HubArcWeights hub_weights(Family f) {
  switch (f) {
    case Family::ABC: return {4, 0, kNoArc, kNoArc};
    case Family::AB: return {3, 0, 2, 2};
    case Family::ADX: return {1, 1, 1, 1};
    case Family::ADY: return {2, 2, 2, 2};
    case Family::DC: return {2, 2, 0, 3};
    case Family::DCB: return {kNoArc, kNoArc, 0, 4};
    default: return {kNoArc, kNoArc, kNoArc, kNoArc};
  }
}

// Hub arcs of one family member, in the order member->u, u->member,
// member->v, v->member.
inline void append_member_hub_arcs(std::vector<Arc>& arcs, Family f, VertexId member,
                                   VertexId u, VertexId v) {
  const auto w = hub_weights(f);
  if (w.to_u != kNoArc) arcs.push_back({member, u, w.to_u});
  if (w.from_u != kNoArc) arcs.push_back({u, member, w.from_u});
  if (w.to_v != kNoArc) arcs.push_back({member, v, w.to_v});
  if (w.from_v != kNoArc) arcs.push_back({v, member, w.from_v});
}

struct FamilyMember {
  Family family;
  VertexId id;
};

// u <-> v followed by the hub arcs of every member, in the given order.
inline std::vector<Arc> constant_part_arcs(VertexId u, VertexId v,
                                           std::span<const FamilyMember> members) {
  std::vector<Arc> arcs;
  add_double_arc(arcs, u, v, kHubPairWeight);
  for (const auto& m : members) append_member_hub_arcs(arcs, m.family, m.id, u, v);
  return arcs;
}

// ---------------------------------------------------------------------------
// Size accounting.

struct BoundCheck {
  std::string name;
  std::uint64_t actual = 0;
  std::uint64_t limit = 0;
  bool equality = false;  // actual must equal limit rather than stay below it
  bool enforced = true;   // a failure is a construction bug

  bool holds() const { return equality ? actual == limit : actual <= limit; }
};

struct SizeReport {
  std::size_t n_vectors = 0;
  std::size_t ell = 0;
  std::array<std::size_t, 8> family_counts{};  // indexed by Family
  std::array<std::size_t, 4> arc_counts{};     // indexed by ArcKind
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::vector<BoundCheck> checks;

  std::size_t family(Family f) const { return family_counts[static_cast<std::size_t>(f)]; }
  std::size_t arcs_of(ArcKind k) const { return arc_counts[static_cast<std::size_t>(k)]; }

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
  }
  const BoundCheck* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

struct SizeFormulas {
  std::uint64_t n;
  std::uint64_t ell;

  std::uint64_t n2() const { return n * n; }
  std::uint64_t n3() const { return n * n * n; }
  std::uint64_t l3() const { return ell * ell * ell; }
  std::uint64_t l6() const { return l3() * l3(); }

  std::uint64_t vertex_bound() const { return 2 + 2 * n3() + 4 * n2() * l3(); }
  std::uint64_t index_switching_bound() const { return 4 * n2() * l6(); }
  std::uint64_t skew_bound() const { return 2 * n2() * l6(); }
  // The published 10 N^3 l^3 regular-arc count. Instances that are all-ones
  // with N >= 3 exceed it (see regular_bound_structural).
  std::uint64_t regular_bound_published() const { return 10 * n3() * l3(); }
  // Four double-arc families with at most N^3 l^3 edges each, plus the two
  // ADX--ADY flavours with at most N^2 (N-1) l^3 edges each.
  std::uint64_t regular_bound_structural() const {
    return 8 * n3() * l3() + 4 * n2() * (n - 1) * l3();
  }
  std::uint64_t hub_arcs(std::uint64_t ab, std::uint64_t adx, std::uint64_t ady,
                         std::uint64_t dc) const {
    return 2 + 2 * (2 * n3()) + 4 * (ab + adx + ady + dc);
  }
  std::uint64_t hub_arc_bound() const { return hub_arcs(n2() * l3(), n2() * l3(), n2() * l3(), n2() * l3()); }
  std::uint64_t arc_bound() const {
    return hub_arc_bound() + index_switching_bound() + skew_bound() + regular_bound_structural();
  }

  // Rough upper estimate of a build's resident size, from the bounds above.
  std::uint64_t predicted_bytes() const {
    constexpr std::uint64_t per_arc = sizeof(Arc) + sizeof(OutArc) + sizeof(ArcKind);
    constexpr std::uint64_t per_vertex = 3 * sizeof(VertexLabel) + 4 * sizeof(std::size_t);
    return arc_bound() * per_arc + vertex_bound() * per_vertex;
  }
};

namespace detail {

inline SizeReport count_sizes(std::size_t n_vectors, std::size_t ell,
                              std::span<const VertexLabel> labels,
                              std::span<const ArcKind> kinds) {
  SizeReport r;
  r.n_vectors = n_vectors;
  r.ell = ell;
  for (const auto& l : labels) ++r.family_counts[static_cast<std::size_t>(l.family)];
  for (auto k : kinds) ++r.arc_counts[static_cast<std::size_t>(k)];
  r.vertices = labels.size();
  r.arcs = kinds.size();

  const SizeFormulas f{n_vectors, ell};
  auto fam = [&r](Family x) -> std::uint64_t { return r.family(x); };
  auto add = [&r](std::string name, std::uint64_t actual, std::uint64_t limit, bool equality,
                  bool enforced = true) {
    r.checks.push_back({std::move(name), actual, limit, equality, enforced});
  };
  add("abc-count", fam(Family::ABC), f.n3(), true);
  add("dcb-count", fam(Family::DCB), f.n3(), true);
  add("ab-count", fam(Family::AB), f.n2() * f.l3(), false);
  add("adx-count", fam(Family::ADX), f.n2() * f.l3(), false);
  add("ady-count", fam(Family::ADY), f.n2() * f.l3(), false);
  add("dc-count", fam(Family::DC), f.n2() * f.l3(), false);
  add("hub-count", fam(Family::U) + fam(Family::V), 2, true);
  add("vertex-total", r.vertices, f.vertex_bound(), false);
  add("hub-arcs", r.arcs_of(ArcKind::Hub),
      f.hub_arcs(fam(Family::AB), fam(Family::ADX), fam(Family::ADY), fam(Family::DC)), true);
  add("index-switching-arcs", r.arcs_of(ArcKind::IndexSwitching), f.index_switching_bound(),
      false);
  add("skew-arcs", r.arcs_of(ArcKind::Skew), f.skew_bound(), false);
  add("regular-arcs", r.arcs_of(ArcKind::Regular), f.regular_bound_structural(), false);
  add("regular-arcs-10N3l3", r.arcs_of(ArcKind::Regular), f.regular_bound_published(), false,
      false);
  std::uint64_t kind_sum = 0;
  for (auto c : r.arc_counts) kind_sum += c;
  add("arc-kind-partition", kind_sum, r.arcs, true);
  return r;
}

inline void enforce(const SizeReport& r) {
  for (const auto& c : r.checks) {
    if (c.enforced && !c.holds()) {
      throw SizeBoundViolation("size check " + c.name + " failed: " + std::to_string(c.actual) +
                               (c.equality ? " != " : " > ") + std::to_string(c.limit));
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The built gadget.

class ReductionGraph;
inline ReductionGraph build_reduction(const OvInstance& inst);

class ReductionGraph {
 public:
  static constexpr VertexId kU = 0;
  static constexpr VertexId kV = 1;

  const OvInstance& instance() const noexcept { return instance_; }
  const WeightedDigraph& graph() const noexcept { return graph_; }
  const SizeReport& sizes() const noexcept { return sizes_; }
  std::span<const VertexLabel> labels() const noexcept { return labels_; }
  std::span<const ArcKind> arc_kinds() const noexcept { return arc_kinds_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }

  const VertexLabel& label_of(VertexId id) const { return labels_.at(id); }

  std::optional<VertexId> id_of(const VertexLabel& l) const {
    auto it = ids_.find(l);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  // Ids of one family form a contiguous range [first, last).
  std::pair<VertexId, VertexId> family_range(Family f) const {
    return family_ranges_[static_cast<std::size_t>(f)];
  }

 private:
  friend ReductionGraph build_reduction(const OvInstance& inst);

  explicit ReductionGraph(OvInstance inst) : instance_(std::move(inst)) {}

  OvInstance instance_;
  WeightedDigraph graph_;
  std::vector<VertexLabel> labels_;
  std::unordered_map<VertexLabel, VertexId, VertexLabelHash> ids_;
  std::vector<ArcKind> arc_kinds_;
  std::array<std::pair<VertexId, VertexId>, 8> family_ranges_{};
  SizeReport sizes_;
};

// Recounts families and arc kinds and checks them against the size formulas.
// Throws SizeBoundViolation when an enforced check fails.
inline SizeReport size_report(const ReductionGraph& rg) {
  auto r = detail::count_sizes(rg.instance().size(), rg.instance().dimension(), rg.labels(),
                               rg.arc_kinds());
  detail::enforce(r);
  return r;
}

namespace detail {

inline constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();

// Dense id table for a two-vector family: (x, y, i, j, k) -> id or kAbsent.
class PairTripleTable {
 public:
  PairTripleTable(std::size_t n, std::size_t ell)
      : n_(n), ell_(ell), ids_(n * n * ell * ell * ell, kAbsent) {}

  VertexId& at(std::size_t x, std::size_t y, const IndexTriple& t) {
    return ids_[offset(x, y, t)];
  }
  VertexId at(std::size_t x, std::size_t y, const IndexTriple& t) const {
    return ids_[offset(x, y, t)];
  }

  // Existing ids with vector fields (x, y), in lexicographic triple order.
  std::vector<VertexId> group(std::size_t x, std::size_t y) const {
    std::vector<VertexId> out;
    const std::size_t l3 = ell_ * ell_ * ell_;
    const std::size_t base = (x * n_ + y) * l3;
    for (std::size_t i = 0; i < l3; ++i) {
      if (ids_[base + i] != kAbsent) out.push_back(ids_[base + i]);
    }
    return out;
  }

 private:
  std::size_t offset(std::size_t x, std::size_t y, const IndexTriple& t) const {
    return (((x * n_ + y) * ell_ + (t.i - 1)) * ell_ + (t.j - 1)) * ell_ + (t.k - 1);
  }

  std::size_t n_;
  std::size_t ell_;
  std::vector<VertexId> ids_;
};

}  // namespace detail

// Builds the gadget for S. Throws OrthogonalTripleError when S has an orthogonal triple
// (with repetition), which would leave some ABC or DCB vertex without a
// weight-1 neighbour.
//
// Ids: U = 0, V = 1, then ABC, AB, ADX, ADY, DC, DCB, each family in
// lexicographic label order. Arcs: the constant part (u <-> v, then each
// member's hub arcs in id order), then the variable double-arcs grouped by
// family pair in the order of the table at the top of this file.
inline ReductionGraph build_reduction(const OvInstance& inst) {
  if (auto triple = find_orthogonal_tuple(inst, 3)) throw OrthogonalTripleError(*triple);

  const auto n = static_cast<std::uint32_t>(inst.size());
  const auto ell = static_cast<std::uint32_t>(inst.dimension());
  ReductionGraph rg(inst);
  auto& labels = rg.labels_;

  detail::PairTripleTable ab(n, ell), adx(n, ell), ady(n, ell), dc(n, ell);

  auto begin_family = [&](Family f) {
    rg.family_ranges_[static_cast<std::size_t>(f)].first = static_cast<VertexId>(labels.size());
  };
  auto end_family = [&](Family f) {
    rg.family_ranges_[static_cast<std::size_t>(f)].second = static_cast<VertexId>(labels.size());
  };
  auto add_vertex = [&](const VertexLabel& l) {
    const auto id = static_cast<VertexId>(labels.size());
    labels.push_back(l);
    return id;
  };
  auto for_each_triple = [ell](auto&& fn) {
    for (std::uint32_t i = 1; i <= ell; ++i)
      for (std::uint32_t j = 1; j <= ell; ++j)
        for (std::uint32_t k = 1; k <= ell; ++k) fn(IndexTriple{i, j, k});
  };
  auto add_pair_family = [&](Family f, detail::PairTripleTable& table) {
    begin_family(f);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        for_each_triple([&](const IndexTriple& t) {
          const VertexLabel l{f, {x, y, 0}, t};
          if (vertex_exists(inst, l)) table.at(x, y, t) = add_vertex(l);
        });
      }
    }
    end_family(f);
  };

  begin_family(Family::U);
  add_vertex(VertexLabel::u());
  end_family(Family::U);
  begin_family(Family::V);
  add_vertex(VertexLabel::v());
  end_family(Family::V);

  begin_family(Family::ABC);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) add_vertex(VertexLabel::abc(a, b, c));
  end_family(Family::ABC);
  add_pair_family(Family::AB, ab);
  add_pair_family(Family::ADX, adx);
  add_pair_family(Family::ADY, ady);
  add_pair_family(Family::DC, dc);
  begin_family(Family::DCB);
  for (std::uint32_t d = 0; d < n; ++d)
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t b = 0; b < n; ++b) add_vertex(VertexLabel::dcb(d, c, b));
  end_family(Family::DCB);

  rg.ids_.reserve(labels.size());
  for (VertexId id = 0; id < labels.size(); ++id) rg.ids_.emplace(labels[id], id);

  // Constant part.
  std::vector<FamilyMember> members;
  members.reserve(labels.size() - 2);
  for (VertexId id = 2; id < labels.size(); ++id) members.push_back({labels[id].family, id});
  std::vector<Arc> arcs = constant_part_arcs(ReductionGraph::kU, ReductionGraph::kV, members);
  std::vector<ArcKind> kinds(arcs.size(), ArcKind::Hub);

  auto edge = [&](VertexId x, VertexId y, ArcKind kind) {
    add_double_arc(arcs, x, y, 1);
    kinds.push_back(kind);
    kinds.push_back(kind);
  };
  auto range = [&rg](Family f) { return rg.family_range(f); };

  // ABC -- AB.
  for (auto [id, last] = range(Family::ABC); id < last; ++id) {
    const auto& l = labels[id];
    const auto [a, b, c] = l.vec;
    for (VertexId y : ab.group(a, b)) {
      if (detail::shares_one_on_slot(inst, c, b, labels[y].idx)) edge(id, y, ArcKind::Regular);
    }
  }
  // AB -- AB.
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto group = ab.group(a, b);
      for (std::size_t p = 0; p < group.size(); ++p)
        for (std::size_t q = p + 1; q < group.size(); ++q)
          edge(group[p], group[q], ArcKind::IndexSwitching);
    }
  }
  // AB -- ADY.
  for (auto [id, last] = range(Family::AB); id < last; ++id) {
    const auto& l = labels[id];
    for (std::uint32_t d = 0; d < n; ++d) {
      if (auto y = ady.at(l.vec[0], d, l.idx); y != detail::kAbsent) {
        edge(id, y, ArcKind::Regular);
      }
    }
  }
  // ADX -- ADY: regular (one vector field changes), then skew.
  for (auto [id, last] = range(Family::ADX); id < last; ++id) {
    const auto& l = labels[id];
    const auto a = l.vec[0];
    const auto d = l.vec[1];
    for (std::uint32_t d2 = 0; d2 < n; ++d2) {
      if (d2 == d) continue;
      if (auto y = ady.at(a, d2, l.idx); y != detail::kAbsent) edge(id, y, ArcKind::Regular);
    }
    for (std::uint32_t a2 = 0; a2 < n; ++a2) {
      if (a2 == a) continue;
      if (auto y = ady.at(a2, d, l.idx); y != detail::kAbsent) edge(id, y, ArcKind::Regular);
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t d = 0; d < n; ++d) {
      const auto xs = adx.group(a, d);
      const auto ys = ady.group(a, d);
      for (VertexId x : xs)
        for (VertexId y : ys) edge(x, y, ArcKind::Skew);
    }
  }
  // ADY -- DC.
  for (auto [id, last] = range(Family::ADY); id < last; ++id) {
    const auto& l = labels[id];
    for (std::uint32_t c = 0; c < n; ++c) {
      if (auto y = dc.at(l.vec[1], c, l.idx); y != detail::kAbsent) {
        edge(id, y, ArcKind::Regular);
      }
    }
  }
  // DC -- DC.
  for (std::uint32_t d = 0; d < n; ++d) {
    for (std::uint32_t c = 0; c < n; ++c) {
      const auto group = dc.group(d, c);
      for (std::size_t p = 0; p < group.size(); ++p)
        for (std::size_t q = p + 1; q < group.size(); ++q)
          edge(group[p], group[q], ArcKind::IndexSwitching);
    }
  }
  // DC -- DCB.
  for (auto [id, last] = range(Family::DCB); id < last; ++id) {
    const auto& l = labels[id];
    const auto [d, c, b] = l.vec;
    for (VertexId x : dc.group(d, c)) {
      if (detail::shares_one_on_slot(inst, b, c, labels[x].idx)) edge(x, id, ArcKind::Regular);
    }
  }

  rg.graph_ = WeightedDigraph(labels.size(), std::move(arcs));
  rg.arc_kinds_ = std::move(kinds);
  rg.sizes_ = size_report(rg);
  return rg;
}

// Re-derives every arc from the predicates: hub arcs must match the weight
// table, every other arc must be a weight-1 arc whose kind edge_exists
// agrees with, and whose reverse arc is present. Returns one message per
// offending arc (empty when the graph is exactly the gadget).
inline std::vector<std::string> arc_audit(const ReductionGraph& rg,
                                          std::size_t max_messages = 20) {
  std::vector<std::string> problems;
  std::size_t bad = 0;
  auto report = [&](std::string msg) {
    if (++bad <= max_messages) problems.push_back(std::move(msg));
  };
  const auto arcs = rg.graph().arcs();
  const auto kinds = rg.arc_kinds();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    const auto& tl = rg.label_of(a.tail);
    const auto& hl = rg.label_of(a.head);
    const std::string where = to_string(tl) + " -> " + to_string(hl) + " (w=" +
                              std::to_string(a.weight) + ")";
    if (is_hub(tl.family) || is_hub(hl.family)) {
      Weight want = kNoArc;
      if (is_hub(tl.family) && is_hub(hl.family)) {
        want = tl.family != hl.family ? kHubPairWeight : kNoArc;
      } else if (is_hub(hl.family)) {
        const auto w = hub_weights(tl.family);
        want = hl.family == Family::U ? w.to_u : w.to_v;
      } else {
        const auto w = hub_weights(hl.family);
        want = tl.family == Family::U ? w.from_u : w.from_v;
      }
      if (kinds[i] != ArcKind::Hub || a.weight != want) report("bad hub arc " + where);
      continue;
    }
    const auto kind = edge_exists(rg.instance(), tl, hl);
    if (!kind || kinds[i] != to_arc_kind(*kind) || a.weight != 1) {
      report("bad variable arc " + where);
    } else if (rg.graph().arc_weight(a.head, a.tail) != Weight{1}) {
      report("missing reverse arc for " + where);
    }
  }
  if (bad > max_messages) {
    problems.push_back("... " + std::to_string(bad - max_messages) + " more");
  }
  return problems;
}

// ---------------------------------------------------------------------------
// Label map file: one "<id>\t<label>" line per vertex. Ids are 1-based so
// they match the vertex ids of the DIMACS graph file.

inline void write_label_map(std::ostream& out, const ReductionGraph& rg) {
  for (VertexId id = 0; id < rg.vertex_count(); ++id) {
    out << id + 1 << '\t' << to_string(rg.label_of(id)) << '\n';
  }
}

inline std::vector<VertexLabel> parse_label_map(std::istream& in) {
  std::vector<VertexLabel> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "expected \"<id>\\t<label>\"");
    std::size_t id = 0;
    try {
      std::size_t used = 0;
      id = std::stoul(line.substr(0, tab), &used);
      if (used != tab) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError(line_no, "malformed vertex id \"" + line.substr(0, tab) + "\"");
    }
    if (id != labels.size() + 1) {
      throw ParseError(line_no, "expected id " + std::to_string(labels.size() + 1) + ", got " +
                                    std::to_string(id));
    }
    try {
      labels.push_back(parse_label(std::string_view(line).substr(tab + 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return labels;
}

}  // namespace ovdiam
