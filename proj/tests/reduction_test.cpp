#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ovdiam/dimacs.hpp"
#include "ovdiam/ov_generate.hpp"
#include "ovdiam/reduction.hpp"

namespace {

using ovdiam::ArcKind;
using ovdiam::BitVector;
using ovdiam::EdgeKind;
using ovdiam::Family;
using ovdiam::IndexTriple;
using ovdiam::OvInstance;
using ovdiam::VertexLabel;

OvInstance make(std::initializer_list<const char*> rows) {
  std::vector<BitVector> v;
  for (auto r : rows) v.push_back(BitVector::from_string(r));
  const auto ell = v.front().size();
  return OvInstance(ell, std::move(v));
}

OvInstance design() { return make({"0111", "1011", "1101", "1110"}); }

OvInstance generated(std::size_t n, std::size_t ell, std::uint64_t seed, bool planted = false) {
  ovdiam::GenParams p;
  p.n = n;
  p.ell = ell;
  p.seed = seed;
  p.density = 0.5;
  p.mode = planted ? ovdiam::GenMode::PlantedQuadruple : ovdiam::GenMode::NoQuadruple;
  return ovdiam::gen_instance(p).instance;
}

std::size_t count_kind(const ovdiam::ReductionGraph& rg, ArcKind k) {
  std::size_t n = 0;
  for (auto a : rg.arc_kinds()) n += a == k;
  return n;
}

}  // namespace

TEST(VertexExists, Examples) {
  const auto inst = make({"110", "110", "101", "111"});
  EXPECT_TRUE(ovdiam::vertex_exists(inst, VertexLabel::ab(0, 1, {1, 2, 2})));
  EXPECT_FALSE(ovdiam::vertex_exists(inst, VertexLabel::ab(0, 2, {1, 2, 2})));
  EXPECT_TRUE(ovdiam::vertex_exists(inst, VertexLabel::adx(0, 3, {1, 2, 3})));
  EXPECT_FALSE(ovdiam::vertex_exists(inst, VertexLabel::ady(0, 3, {1, 2, 3})));
  EXPECT_TRUE(ovdiam::vertex_exists(inst, VertexLabel::abc(0, 1, 2)));
  EXPECT_THROW(ovdiam::vertex_exists(inst, VertexLabel::abc(0, 1, 4)), std::out_of_range);
  EXPECT_THROW(ovdiam::vertex_exists(inst, VertexLabel::ab(0, 1, {1, 2, 4})), std::out_of_range);
}

TEST(EdgeExists, Examples) {
  const auto inst = make({"111", "111", "111"});
  EXPECT_EQ(ovdiam::edge_exists(inst, VertexLabel::abc(0, 1, 2), VertexLabel::ab(0, 1, {2, 2, 2})),
            EdgeKind::Regular);
  EXPECT_EQ(ovdiam::edge_exists(inst, VertexLabel::ab(0, 1, {1, 2, 3}),
                                VertexLabel::ab(0, 2, {1, 1, 1})),
            std::nullopt);
  EXPECT_EQ(ovdiam::edge_exists(inst, VertexLabel::adx(0, 1, {1, 1, 1}),
                                VertexLabel::ady(0, 1, {2, 3, 1})),
            EdgeKind::Skew);
  EXPECT_EQ(ovdiam::edge_exists(inst, VertexLabel::ady(0, 1, {2, 3, 1}),
                                VertexLabel::adx(0, 1, {2, 3, 1})),
            EdgeKind::Skew);
  EXPECT_EQ(ovdiam::edge_exists(inst, VertexLabel::ab(0, 1, {1, 2, 3}),
                                VertexLabel::ab(0, 1, {3, 2, 1})),
            EdgeKind::IndexSwitching);
  EXPECT_EQ(ovdiam::edge_exists(inst, VertexLabel::adx(0, 1, {1, 2, 3}),
                                VertexLabel::ady(0, 2, {1, 2, 3})),
            EdgeKind::Regular);
  EXPECT_EQ(ovdiam::edge_exists(inst, VertexLabel::adx(0, 1, {1, 2, 3}),
                                VertexLabel::ady(2, 2, {1, 2, 3})),
            std::nullopt);
  EXPECT_THROW(ovdiam::edge_exists(inst, VertexLabel::u(), VertexLabel::abc(0, 1, 2)),
               std::invalid_argument);
}

TEST(EdgeExists, AbcNeedsSharedOneOfBAndC) {
  const auto inst = make({"111", "110", "001"});
  EXPECT_FALSE(ovdiam::edge_exists(inst, VertexLabel::abc(0, 1, 2), VertexLabel::ab(0, 1, {1, 2, 2})));
  EXPECT_EQ(ovdiam::edge_exists(inst, VertexLabel::abc(0, 1, 1), VertexLabel::ab(0, 1, {1, 2, 2})),
            EdgeKind::Regular);
}

TEST(HubWeights, Table) {
  using W = ovdiam::HubArcWeights;
  auto eq = [](W a, W b) {
    return a.to_u == b.to_u && a.from_u == b.from_u && a.to_v == b.to_v && a.from_v == b.from_v;
  };
  constexpr auto X = ovdiam::kNoArc;
  EXPECT_TRUE(eq(ovdiam::hub_weights(Family::ABC), W{4, 0, X, X}));
  EXPECT_TRUE(eq(ovdiam::hub_weights(Family::AB), W{3, 0, 2, 2}));
  EXPECT_TRUE(eq(ovdiam::hub_weights(Family::ADX), W{1, 1, 1, 1}));
  EXPECT_TRUE(eq(ovdiam::hub_weights(Family::ADY), W{2, 2, 2, 2}));
  EXPECT_TRUE(eq(ovdiam::hub_weights(Family::DC), W{2, 2, 0, 3}));
  EXPECT_TRUE(eq(ovdiam::hub_weights(Family::DCB), W{X, X, 0, 4}));
}

TEST(ConstantPart, HubPairAndOneMember) {
  std::vector<ovdiam::FamilyMember> members{{Family::DCB, 2}};
  auto arcs = ovdiam::constant_part_arcs(0, 1, members);
  ASSERT_EQ(arcs.size(), 4u);
  auto g = ovdiam::WeightedDigraph(3, arcs);
  EXPECT_EQ(g.arc_weight(0, 1), 2u);
  EXPECT_EQ(g.arc_weight(1, 0), 2u);
  EXPECT_EQ(g.arc_weight(2, 1), 0u);
  EXPECT_EQ(g.arc_weight(1, 2), 4u);

  members = {{Family::ADX, 2}};
  EXPECT_EQ(ovdiam::constant_part_arcs(0, 1, members).size(), 6u);
}

TEST(BuildReduction, SingleOneVector) {
  const auto rg = ovdiam::build_reduction(make({"1"}));
  EXPECT_EQ(rg.vertex_count(), 8u);
  EXPECT_EQ(rg.graph().arc_count(), 32u);
  EXPECT_EQ(count_kind(rg, ArcKind::Hub), 22u);
  EXPECT_EQ(count_kind(rg, ArcKind::Regular), 8u);
  EXPECT_EQ(count_kind(rg, ArcKind::Skew), 2u);
  EXPECT_EQ(count_kind(rg, ArcKind::IndexSwitching), 0u);
  EXPECT_EQ(ovdiam::exact_diameter(rg.graph()).value, 4u);

  const std::vector<VertexLabel> want{
      VertexLabel::u(),
      VertexLabel::v(),
      VertexLabel::abc(0, 0, 0),
      VertexLabel::ab(0, 0, {1, 1, 1}),
      VertexLabel::adx(0, 0, {1, 1, 1}),
      VertexLabel::ady(0, 0, {1, 1, 1}),
      VertexLabel::dc(0, 0, {1, 1, 1}),
      VertexLabel::dcb(0, 0, 0),
  };
  ASSERT_EQ(rg.labels().size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(rg.labels()[i], want[i]);

  // The five variable double-arcs of the hand enumeration.
  auto id = [&](const VertexLabel& l) { return *rg.id_of(l); };
  const auto& g = rg.graph();
  for (auto [x, y] : std::vector<std::pair<VertexLabel, VertexLabel>>{
           {want[2], want[3]}, {want[3], want[5]}, {want[4], want[5]}, {want[5], want[6]},
           {want[6], want[7]}}) {
    EXPECT_EQ(g.arc_weight(id(x), id(y)), 1u) << x << " " << y;
    EXPECT_EQ(g.arc_weight(id(y), id(x)), 1u) << y << " " << x;
  }
}

TEST(BuildReduction, RejectsOrthogonalTriple) {
  try {
    ovdiam::build_reduction(make({"10", "01"}));
    FAIL() << "expected OrthogonalTripleError";
  } catch (const ovdiam::OrthogonalTripleError& e) {
    EXPECT_EQ(e.witness().indices, (std::vector<std::size_t>{0, 0, 1}));
  }
}

TEST(BuildReduction, DesignInstance) {
  const auto rg = ovdiam::build_reduction(design());
  EXPECT_LE(rg.vertex_count(), 2u + 128u + 4096u);
  EXPECT_EQ(rg.sizes().family(Family::ABC), 64u);
  EXPECT_EQ(rg.sizes().family(Family::DCB), 64u);
  EXPECT_TRUE(rg.sizes().all_hold());
  const auto d = ovdiam::exact_diameter(rg.graph()).value;
  EXPECT_GE(d, 7u);
  EXPECT_LE(d, 8u);
}

TEST(BuildReduction, IdsAreCanonical) {
  const auto rg = ovdiam::build_reduction(generated(3, 4, 7));
  for (std::size_t i = 1; i < rg.labels().size(); ++i) {
    EXPECT_LT(rg.labels()[i - 1], rg.labels()[i]);
  }
  for (auto f : ovdiam::kAllFamilies) {
    const auto [first, last] = rg.family_range(f);
    for (auto id = first; id < last; ++id) EXPECT_EQ(rg.label_of(id).family, f);
  }
  for (ovdiam::VertexId id = 0; id < rg.vertex_count(); ++id) {
    EXPECT_EQ(rg.id_of(rg.label_of(id)), id);
  }
}

TEST(BuildReduction, VertexSetMatchesPredicate) {
  const auto inst = generated(3, 3, 2);
  const auto rg = ovdiam::build_reduction(inst);
  const std::uint32_t n = 3;
  std::size_t expected = 2 + 2 * n * n * n;
  for (auto f : {Family::AB, Family::ADX, Family::ADY, Family::DC}) {
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t i = 1; i <= 3; ++i)
          for (std::uint32_t j = 1; j <= 3; ++j)
            for (std::uint32_t k = 1; k <= 3; ++k) {
              VertexLabel l{f, {x, y, 0}, {i, j, k}};
              const bool exists = ovdiam::vertex_exists(inst, l);
              expected += exists;
              EXPECT_EQ(rg.id_of(l).has_value(), exists) << l;
            }
  }
  EXPECT_EQ(rg.vertex_count(), expected);
}

TEST(BuildReduction, ArcAuditPasses) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto rg = ovdiam::build_reduction(generated(3, 4, seed));
    EXPECT_TRUE(ovdiam::arc_audit(rg).empty());
  }
  EXPECT_TRUE(ovdiam::arc_audit(ovdiam::build_reduction(design())).empty());
}

TEST(BuildReduction, ArcsMatchPredicateOnSmallInstance) {
  // Every non-hub pair: a weight-1 double-arc exactly when edge_exists says so.
  const auto rg = ovdiam::build_reduction(generated(2, 3, 5));
  const auto& g = rg.graph();
  for (ovdiam::VertexId x = 2; x < rg.vertex_count(); ++x) {
    for (ovdiam::VertexId y = 2; y < rg.vertex_count(); ++y) {
      if (x == y) continue;
      const auto kind = ovdiam::edge_exists(rg.instance(), rg.label_of(x), rg.label_of(y));
      const auto w = g.arc_weight(x, y);
      EXPECT_EQ(w.has_value(), kind.has_value()) << rg.label_of(x) << " " << rg.label_of(y);
      if (w) {
        EXPECT_EQ(*w, 1u);
      }
    }
  }
}

TEST(BuildReduction, IndependentFamilies) {
  // No arcs inside ABC, ADX, ADY or DCB, and no arcs between ABC and DCB.
  const auto rg = ovdiam::build_reduction(generated(3, 4, 9));
  for (const auto& a : rg.graph().arcs()) {
    const auto ft = rg.label_of(a.tail).family;
    const auto fh = rg.label_of(a.head).family;
    if (ft == fh) {
      EXPECT_TRUE(ft == Family::AB || ft == Family::DC) << ovdiam::family_name(ft);
    }
    EXPECT_FALSE(ft == Family::ABC && fh == Family::DCB);
    EXPECT_FALSE(ft == Family::DCB && fh == Family::ABC);
  }
}

TEST(BuildReduction, AbcAndDcbNeighbourhoods) {
  const auto rg = ovdiam::build_reduction(generated(3, 5, 4));
  for (ovdiam::VertexId x = 0; x < rg.vertex_count(); ++x) {
    const auto& lx = rg.label_of(x);
    for (const auto& arc : rg.graph().out(x)) {
      const auto& ly = rg.label_of(arc.head);
      if (lx.family == Family::ABC && ly.family == Family::AB) {
        EXPECT_EQ(lx.vec[0], ly.vec[0]);
        EXPECT_EQ(lx.vec[1], ly.vec[1]);
      }
      if (lx.family == Family::DCB && ly.family == Family::DC) {
        EXPECT_EQ(lx.vec[0], ly.vec[0]);
        EXPECT_EQ(lx.vec[1], ly.vec[1]);
      }
      if (lx.family == Family::ABC) {
        EXPECT_TRUE(ly.family == Family::AB || ly.family == Family::U);
      }
      if (lx.family == Family::DCB) {
        EXPECT_TRUE(ly.family == Family::DC || ly.family == Family::V);
      }
    }
  }
}

TEST(BuildReduction, AdyWithDifferentDIsNotAdjacentToAdx) {
  const auto rg = ovdiam::build_reduction(generated(3, 4, 12));
  for (const auto& a : rg.graph().arcs()) {
    const auto& x = rg.label_of(a.tail);
    const auto& y = rg.label_of(a.head);
    if (x.family == Family::ADX && y.family == Family::ADY && x.idx != y.idx) {
      EXPECT_EQ(x.vec, y.vec) << x << " " << y;
    }
  }
}

TEST(BuildReduction, DeterministicDimacsBytes) {
  const auto inst = generated(3, 4, 21);
  std::ostringstream a;
  std::ostringstream b;
  ovdiam::write_dimacs(a, ovdiam::build_reduction(inst).graph());
  ovdiam::write_dimacs(b, ovdiam::build_reduction(inst).graph());
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().rfind("p sp ", 0), 0u);
}

TEST(SizeReport, CountsAndBounds) {
  const auto rg = ovdiam::build_reduction(make({"1"}));
  const auto& r = rg.sizes();
  EXPECT_EQ(r.vertices, 8u);
  EXPECT_EQ(r.arcs, 32u);
  EXPECT_EQ(r.find("hub-arcs")->actual, 22u);
  EXPECT_EQ(r.find("hub-arcs")->limit, 22u);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.arcs_of(ArcKind::Hub) + r.arcs_of(ArcKind::Regular) +
                r.arcs_of(ArcKind::IndexSwitching) + r.arcs_of(ArcKind::Skew),
            r.arcs);
  EXPECT_EQ(ovdiam::size_report(rg).arcs, 32u);
}

TEST(SizeReport, KindPartitionOnRandomBuilds) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto rg = ovdiam::build_reduction(generated(2 + seed % 3, 4, seed));
    const auto& r = rg.sizes();
    EXPECT_EQ(r.find("arc-kind-partition")->actual, rg.graph().arc_count());
    EXPECT_TRUE(r.all_hold());
  }
}

TEST(SizeReport, AllOnesExceedsTenNCubedLCubedRegularArcs) {
  // With three all-ones vectors and ell=1 every vertex exists, and the ADX--ADY
  // regular edges alone number 2 N^2 (N-1). Total regular arcs: 288 > 270.
  const auto rg = ovdiam::build_reduction(make({"1", "1", "1"}));
  const auto& r = rg.sizes();
  EXPECT_EQ(r.arcs_of(ArcKind::Regular), 288u);
  EXPECT_EQ(r.find("regular-arcs-10N3l3")->limit, 270u);
  EXPECT_FALSE(r.find("regular-arcs-10N3l3")->holds());
  EXPECT_FALSE(r.find("regular-arcs-10N3l3")->enforced);
  EXPECT_TRUE(r.find("regular-arcs")->holds());
}

TEST(LabelMap, RoundTrip) {
  const auto rg = ovdiam::build_reduction(generated(2, 4, 3));
  std::stringstream s;
  ovdiam::write_label_map(s, rg);
  EXPECT_EQ(s.str().substr(0, 4), "1\tU\n");
  const auto back = ovdiam::parse_label_map(s);
  ASSERT_EQ(back.size(), rg.vertex_count());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], rg.labels()[i]);
}

TEST(Labels, TextForm) {
  EXPECT_EQ(ovdiam::to_string(VertexLabel::abc(0, 1, 2)), "ABC(0,1,2)");
  EXPECT_EQ(ovdiam::to_string(VertexLabel::ab(0, 1, {1, 2, 3})), "AB(0,1;1,2,3)");
  EXPECT_EQ(ovdiam::to_string(VertexLabel::u()), "U");
  for (auto l : {VertexLabel::v(), VertexLabel::dcb(3, 2, 1), VertexLabel::adx(4, 5, {6, 7, 8}),
                 VertexLabel::ady(0, 0, {1, 1, 1}), VertexLabel::dc(2, 2, {3, 1, 2})}) {
    EXPECT_EQ(ovdiam::parse_label(ovdiam::to_string(l)), l);
  }
  EXPECT_THROW(ovdiam::parse_label("XYZ(1)"), std::invalid_argument);
  EXPECT_THROW(ovdiam::parse_label("AB(0,1)"), std::invalid_argument);
}
