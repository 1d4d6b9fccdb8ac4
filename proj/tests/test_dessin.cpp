#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trig/dessin.hpp"
#include "trig/trees.hpp"

using namespace trig;

namespace {

Skeleton loop_on_one_vertex() {
  Skeleton sk;
  sk.dart_count = 2;
  sk.twin = {1, 0};
  sk.next = {1, 0};
  sk.is_free = {0, 0};
  return sk;
}

Skeleton single_hanging_edge() {
  Skeleton sk;
  sk.dart_count = 2;
  sk.twin = {1, 0};
  sk.next = {0, 1};
  sk.is_free = {0, 1};
  return sk;
}

Skeleton theta_graph() {
  Skeleton sk;
  sk.dart_count = 6;
  sk.twin = {3, 5, 4, 0, 2, 1};
  sk.next = {1, 2, 0, 4, 5, 3};
  sk.is_free = {0, 0, 0, 0, 0, 0};
  return sk;
}

Skeleton simple_cycle(int n) {
  Skeleton sk;
  sk.dart_count = 2 * n;
  sk.twin.resize(2 * n);
  sk.next.resize(2 * n);
  sk.is_free.assign(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    sk.next[2 * i] = 2 * i + 1;
    sk.next[2 * i + 1] = 2 * i;
    sk.twin[2 * i + 1] = (2 * i + 2) % (2 * n);
    sk.twin[(2 * i + 2) % (2 * n)] = 2 * i + 1;
  }
  return sk;
}

Skeleton k2_tree_skeleton() { return tree_to_skeleton(tree_parse("(-,-)")); }

long count_at(const std::map<int, long>& m, int i) {
  auto it = m.find(i);
  return it == m.end() ? 0 : it->second;
}

// Census of the materialized dessin, independently of dessin_counts.
DessinCounts graph_census(const TrichotomicGraph& g) {
  DessinCounts c;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int val = g.valency(v);
    REQUIRE(val % 2 == 0);
    switch (g.kind[v]) {
      case VertexKind::Black: c.n_black[val / 2]++; break;
      case VertexKind::White: c.n_white[val / 2]++; break;
      case VertexKind::Cross: c.n_cross[val / 2]++; break;
      default: FAIL("unexpected monochrome vertex in a completed dessin");
    }
  }
  return c;
}

bool counts_equal(const DessinCounts& a, const DessinCounts& b) {
  return a.n_black == b.n_black && a.n_white == b.n_white && a.n_cross == b.n_cross;
}

}  // namespace

TEST_CASE("completion census: reference skeletons") {
  auto k2 = complete_to_dessin(k2_tree_skeleton());
  CHECK(count_at(k2.counts.n_black, 3) == 3);
  CHECK(count_at(k2.counts.n_black, 1) == 1);
  CHECK(count_at(k2.counts.n_white, 2) == 5);
  CHECK(count_at(k2.counts.n_cross, 1) == 2);
  CHECK(count_at(k2.counts.n_cross, 8) == 1);
  CHECK(counts_equal(k2.counts, graph_census(k2.graph)));

  auto hang = complete_to_dessin(single_hanging_edge());
  CHECK(count_at(hang.counts.n_black, 1) == 1);
  CHECK(count_at(hang.counts.n_white, 1) == 1);
  CHECK(count_at(hang.counts.n_cross, 1) == 1);
  CHECK(counts_equal(hang.counts, graph_census(hang.graph)));

  auto theta = complete_to_dessin(theta_graph());
  CHECK(count_at(theta.counts.n_black, 3) == 2);
  CHECK(count_at(theta.counts.n_white, 2) == 3);
  CHECK(count_at(theta.counts.n_cross, 2) == 3);
  CHECK(counts_equal(theta.counts, graph_census(theta.graph)));
}

TEST_CASE("completion is trichotomic and admissible on all small skeletons") {
  for (const Skeleton& sk : enumerate_skeletons(5)) {
    auto dessin = complete_to_dessin(sk);  // throws if not spherical/triangular
    CHECK(validate_trichotomic(dessin.graph).ok);
    CHECK(check_admissible(dessin.graph));
    CHECK(counts_equal(dessin.counts, graph_census(dessin.graph)));
  }
}

TEST_CASE("deg_j") {
  CHECK(deg_j(dessin_counts(k2_tree_skeleton())) == 10);
  CHECK(deg_j(dessin_counts(theta_graph())) == 6);
  CHECK(deg_j(dessin_counts(loop_on_one_vertex())) == 2);
  DessinCounts bad = dessin_counts(theta_graph());
  bad.n_black[3] -= 1;
  CHECK_THROWS_AS(deg_j(bad), InvariantBreach);
}

TEST_CASE("hirzebruch index") {
  CHECK(hirzebruch_index(dessin_counts(k2_tree_skeleton())) == 2);
  CHECK(hirzebruch_index(dessin_counts(theta_graph())) == 1);
  for (int n = 1; n <= 5; ++n) CHECK(hirzebruch_index(dessin_counts(simple_cycle(n))) == n);
}

TEST_CASE("closed form for the index and eq-deg-j consistency") {
  for (const Skeleton& sk : enumerate_skeletons(5)) {
    DessinCounts counts = dessin_counts(sk);
    long dj = deg_j(counts);
    CHECK(dj > 0);
    long b1 = 0, b2 = 0, b3 = 0, h = 0;
    for (const auto& v : vertices(sk)) {
      if (sk.free_dart(v[0]))
        ++h;
      else if (v.size() == 1)
        ++b1;
      else if (v.size() == 2)
        ++b2;
      else
        ++b3;
    }
    CHECK((b3 + 2 * b2 + b1 + h) % 2 == 0);
    CHECK(hirzebruch_index(counts) == (b3 + 2 * b2 + b1 + h) / 2);
    CHECK(check_maximal(counts));
  }
}

TEST_CASE("check_maximal rejects extra or oversized vertices") {
  DessinCounts counts = dessin_counts(theta_graph());
  CHECK(check_maximal(counts));
  DessinCounts extra = counts;
  extra.n_cross[1] += 1;  // disjoint extra cross breaks Riemann-Hurwitz equality
  CHECK_FALSE(check_maximal(extra));
  DessinCounts big = counts;
  big.n_black[4] = 1;
  CHECK_FALSE(check_maximal(big));
}

TEST_CASE("fiber profiles") {
  for (int k = 2; k <= 5; ++k)
    for (const auto& t : enumerate_trees(k - 1)) {
      FiberProfile p = fiber_profile(tree_to_skeleton(t));
      FiberProfile expected{{FiberType::a0_star_star(), 1},
                            {FiberType::a(5 * k - 3), 1},
                            {FiberType::a0_star(), k}};
      CHECK(p == expected);
      CHECK(profile_multiplicity_sum(p) == 6 * k);
    }

  FiberProfile theta = fiber_profile(theta_graph());
  CHECK(theta == FiberProfile{{FiberType::a(1), 3}});

  FiberProfile hang = fiber_profile(single_hanging_edge());
  FiberProfile hang_expected{
      {FiberType::a0_star_star(), 1}, {FiberType::a1_star(), 1}, {FiberType::a0_star(), 1}};
  CHECK(hang == hang_expected);

  // alt family has no A~0**
  for (const auto& t : enumerate_trees(2)) {
    auto [ask, fid] = tree_to_skeleton_alt(t);
    FiberProfile p = fiber_profile(ask);
    CHECK(p == FiberProfile{{FiberType::a(5 * 3 - 2), 1}, {FiberType::a0_star(), 4}});
  }
}

TEST_CASE("profile multiplicities sum to 6k on all small skeletons") {
  for (const Skeleton& sk : enumerate_skeletons(5)) {
    DessinCounts counts = dessin_counts(sk);
    CHECK(profile_multiplicity_sum(fiber_profile(sk)) == 6L * hirzebruch_index(counts));
  }
}

TEST_CASE("fiber type table") {
  CHECK(FiberType::a(5).name() == "A~5");
  CHECK(FiberType::a0_star_star().name() == "A~0**");
  CHECK(FiberType::a(3).multiplicity() == 4);
  CHECK(FiberType::a(3).ind_j() == 4);
  CHECK(FiberType::a(3).delta_deg_j() == 0);
  CHECK(FiberType::a0_star().multiplicity() == 1);
  CHECK(FiberType::a0_star_star().multiplicity() == 2);
  CHECK(FiberType::a0_star_star().delta_deg_j() == -2);
  CHECK(FiberType::a1_star().multiplicity() == 3);
  CHECK(FiberType::a1_star().delta_deg_j() == -3);
  CHECK(FiberType::a2_star().multiplicity() == 4);
  CHECK(FiberType::a2_star().delta_deg_j() == -4);
  CHECK(FiberType::a2_star().ind_j() == 2);
  CHECK(FiberType::a0_star_star().j_value() == 0);
  CHECK(FiberType::a1_star().j_value() == 1);
  // parenthesized companions are metadata only
  CHECK(FiberType::a(2).parenthesized() == "D~7");
  CHECK(FiberType::a2_star().parenthesized() == "E~8");
}

TEST_CASE("deformation conditions on count data") {
  DessinCounts tree = dessin_counts(k2_tree_skeleton());
  DessinCounts theta = dessin_counts(theta_graph());
  CHECK(check_deformation_conditions(tree, tree));
  CHECK_FALSE(check_deformation_conditions(tree, theta));  // deg 10 vs 6

  DessinCounts dropped = tree;
  dropped.n_black[3] -= 1;  // degree changes, condition (1) broken
  CHECK_FALSE(check_deformation_conditions(tree, dropped));

  // moving a nonsingular black vertex (valency 3) around does not change
  // the singular residues, but the degree must stay fixed
  DessinCounts shuffled = tree;
  shuffled.n_black.erase(3);
  shuffled.n_black[3] = 3;
  CHECK(check_deformation_conditions(tree, shuffled));
}

TEST_CASE("admissibility: explicit monochrome 2-cycle") {
  // two monochrome vertices joined by four solid edges, orientations
  // alternating; contains an oriented monochrome cycle
  TrichotomicGraph tg;
  tg.dart_count = 8;
  tg.twin = {1, 0, 3, 2, 5, 4, 7, 6};
  tg.next = {2, 3, 4, 5, 6, 7, 0, 1};
  tg.vertex_of = {0, 1, 0, 1, 0, 1, 0, 1};
  tg.kind = {VertexKind::Mono, VertexKind::Mono};
  tg.color.assign(8, EdgeColor::Solid);
  tg.outgoing = {1, 0, 0, 1, 1, 0, 0, 1};
  REQUIRE(validate_trichotomic(tg).ok);
  CHECK_FALSE(check_admissible(tg));

  TrichotomicGraph broken = tg;
  broken.kind = {VertexKind::Mono, VertexKind::Cross};  // cross with outgoing dotted etc.
  CHECK_FALSE(validate_trichotomic(broken).ok);
  CHECK_THROWS_AS(check_admissible(broken), DomainError);
}
