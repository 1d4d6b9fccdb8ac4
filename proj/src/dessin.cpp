#include "trig/dessin.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace trig {

int TrichotomicGraph::valency(int v) const {
  int count = 0;
  for (int d = 0; d < dart_count; ++d)
    if (vertex_of[d] == v) ++count;
  return count;
}

Validation validate_trichotomic(const TrichotomicGraph& tg) {
  const int n = tg.dart_count;
  if (static_cast<int>(tg.twin.size()) != n || static_cast<int>(tg.next.size()) != n ||
      static_cast<int>(tg.vertex_of.size()) != n || static_cast<int>(tg.color.size()) != n ||
      static_cast<int>(tg.outgoing.size()) != n)
    return {false, "table sizes disagree"};
  for (int d = 0; d < n; ++d) {
    if (tg.twin[d] == d || tg.twin[tg.twin[d]] != d) return {false, "twin is not a free involution"};
    if (tg.next[d] < 0 || tg.next[d] >= n) return {false, "next out of range"};
    if (tg.color[d] != tg.color[tg.twin[d]]) return {false, "edge color differs across twin"};
    if (tg.outgoing[d] == tg.outgoing[tg.twin[d]]) return {false, "edge orientation must have one head"};
    if (tg.vertex_of[tg.next[d]] != tg.vertex_of[d]) return {false, "next leaves the vertex"};
  }
  // rotation at each vertex is a single cycle
  {
    std::vector<char> seen(n, 0);
    std::vector<int> orbit_sizes(tg.vertex_count(), 0);
    for (int d = 0; d < n; ++d) {
      if (seen[d]) continue;
      int cur = d, len = 0;
      while (!seen[cur]) {
        seen[cur] = 1;
        ++len;
        cur = tg.next[cur];
      }
      if (orbit_sizes[tg.vertex_of[d]] != 0) return {false, "vertex darts split into several cycles"};
      orbit_sizes[tg.vertex_of[d]] = len;
    }
  }
  for (int v = 0; v < tg.vertex_count(); ++v) {
    int val = tg.valency(v);
    if (tg.kind[v] == VertexKind::Mono) {
      if (val < 3) return {false, "monochrome vertex of valency < 3"};
    } else if (val < 2) {
      return {false, "essential vertex of valency < 2"};
    }
  }
  for (int d = 0; d < n; ++d) {
    if (tg.outgoing[d] == tg.outgoing[tg.next[d]])
      return {false, "edge orientations do not alternate around a vertex"};
    int v = tg.vertex_of[d];
    bool out = tg.outgoing[d];
    EdgeColor c = tg.color[d];
    switch (tg.kind[v]) {
      case VertexKind::Cross:
        if (!(out ? c == EdgeColor::Solid : c == EdgeColor::Dotted))
          return {false, "cross vertex with wrong incidence"};
        break;
      case VertexKind::Black:
        if (!(out ? c == EdgeColor::Bold : c == EdgeColor::Solid))
          return {false, "black vertex with wrong incidence"};
        break;
      case VertexKind::White:
        if (!(out ? c == EdgeColor::Dotted : c == EdgeColor::Bold))
          return {false, "white vertex with wrong incidence"};
        break;
      case VertexKind::Mono:
        if (c != tg.color[tg.next[d]]) return {false, "monochrome vertex with mixed colors"};
        break;
    }
  }
  return {};
}

bool check_admissible(const TrichotomicGraph& tg) {
  Validation v = validate_trichotomic(tg);
  if (!v.ok) throw DomainError("trichotomic structure invalid: " + v.failure);
  // directed graph on monochrome vertices
  int m = tg.vertex_count();
  std::vector<std::vector<int>> adj(m);
  for (int d = 0; d < tg.dart_count; ++d) {
    if (!tg.outgoing[d]) continue;
    int from = tg.vertex_of[d], to = tg.vertex_of[tg.twin[d]];
    if (tg.kind[from] == VertexKind::Mono && tg.kind[to] == VertexKind::Mono)
      adj[from].push_back(to);
  }
  std::vector<int> state(m, 0);  // 0 unseen, 1 on stack, 2 done
  auto dfs = [&](auto&& self, int v) -> bool {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !self(self, w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < m; ++v)
    if (tg.kind[v] == VertexKind::Mono && state[v] == 0 && !dfs(dfs, v)) return false;
  return true;
}

FiberType FiberType::a(int p) {
  if (p < 1) throw DomainError("fiber A~p needs p >= 1");
  return {Ap, p};
}

std::string FiberType::name() const {
  switch (family) {
    case A0ss: return "A~0**";
    case A1s: return "A~1*";
    case A2s: return "A~2*";
    case A0s: return "A~0*";
    case Ap: return "A~" + std::to_string(p);
  }
  return {};
}

std::string FiberType::parenthesized() const {
  switch (family) {
    case A0ss: return "E~6";
    case A1s: return "E~7";
    case A2s: return "E~8";
    case A0s: return "D~5";
    case Ap: return "D~" + std::to_string(p + 5);
  }
  return {};
}

int FiberType::j_value() const {
  switch (family) {
    case A0ss:
    case A2s: return 0;
    case A1s: return 1;
    default: return 2;  // infinity
  }
}

int FiberType::ind_j() const {
  switch (family) {
    case A0ss: return 1;
    case A1s: return 1;
    case A2s: return 2;
    case A0s: return 1;
    case Ap: return p + 1;
  }
  return 0;
}

int FiberType::multiplicity() const {
  switch (family) {
    case A0ss: return 2;
    case A1s: return 3;
    case A2s: return 4;
    case A0s: return 1;
    case Ap: return p + 1;
  }
  return 0;
}

int FiberType::delta_deg_j() const {
  switch (family) {
    case A0ss: return -2;
    case A1s: return -3;
    case A2s: return -4;
    default: return 0;
  }
}

long DessinCounts::total() const {
  long t = 0;
  for (const auto& m : {n_black, n_white, n_cross})
    for (const auto& [i, c] : m) t += c;
  return t;
}

DessinCounts dessin_counts(const Skeleton& sk) {
  require_valid(sk);
  DessinCounts counts;
  for (const auto& v : vertices(sk))
    if (!sk.free_dart(v[0])) counts.n_black[static_cast<int>(v.size())]++;
  int hanging = 0;
  for (int d = 0; d < sk.dart_count; ++d) hanging += sk.free_dart(d) ? 1 : 0;
  int normal_edges = sk.edges() - hanging;
  if (normal_edges > 0) counts.n_white[2] = normal_edges;
  if (hanging > 0) counts.n_white[1] = hanging;
  for (const auto& f : faces(sk))
    counts.n_cross[static_cast<int>(f.size()) - face_free_darts(sk, f)]++;
  return counts;
}

namespace {

// Dessin dart slots per skeleton dart: bold out/in, solid out/in, dotted
// out/in. Bold and solid slots exist for non-free darts, dotted slots for
// darts carrying a white corner (normal-edge darts and free ends).
enum Slot { BoldOut, BoldIn, SolidOut, SolidIn, DottedOut, DottedIn };

}  // namespace

CompletedDessin complete_to_dessin(const Skeleton& sk) {
  require_valid(sk);
  const int n = sk.dart_count;

  std::vector<int> black_of = vertex_of_darts(sk);
  int black_count = 0;
  {
    auto verts = vertices(sk);
    std::vector<int> black_id(verts.size(), -1);
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (!sk.free_dart(verts[v][0])) black_id[v] = black_count++;
    for (int d = 0; d < n; ++d) black_of[d] = black_id[black_of[d]];
  }

  // whites per edge, crosses per face
  std::vector<int> white_of_edge(n, -1);
  int white_count = 0;
  for (int d = 0; d < n; ++d)
    if (d < sk.twin[d]) {
      white_of_edge[d] = white_of_edge[sk.twin[d]] = white_count++;
    }
  auto face_list = faces(sk);
  std::vector<int> face_of(n, -1);
  for (std::size_t f = 0; f < face_list.size(); ++f)
    for (int d : face_list[f]) face_of[d] = static_cast<int>(f);
  int cross_count = static_cast<int>(face_list.size());

  auto is_hanging_edge = [&](int d) { return sk.free_dart(d) || sk.free_dart(sk.twin[d]); };

  // allocate dessin darts
  std::vector<std::array<int, 6>> slot(n, {-1, -1, -1, -1, -1, -1});
  int dd = 0;
  for (int d = 0; d < n; ++d) {
    if (!sk.free_dart(d)) {
      slot[d][BoldOut] = dd++;
      slot[d][BoldIn] = dd++;
      slot[d][SolidOut] = dd++;
      slot[d][SolidIn] = dd++;
    }
    if ((!sk.free_dart(d) && !is_hanging_edge(d)) || sk.free_dart(d)) {
      slot[d][DottedOut] = dd++;
      slot[d][DottedIn] = dd++;
    }
  }

  TrichotomicGraph tg;
  tg.dart_count = dd;
  tg.twin.assign(dd, -1);
  tg.next.assign(dd, -1);
  tg.vertex_of.assign(dd, -1);
  tg.color.assign(dd, EdgeColor::Bold);
  tg.outgoing.assign(dd, 0);
  tg.kind.assign(black_count + white_count + cross_count, VertexKind::Black);
  for (int w = 0; w < white_count; ++w) tg.kind[black_count + w] = VertexKind::White;
  for (int c = 0; c < cross_count; ++c) tg.kind[black_count + white_count + c] = VertexKind::Cross;
  auto white_vertex = [&](int edge_dart) { return black_count + white_of_edge[edge_dart]; };
  auto cross_vertex = [&](int f) { return black_count + white_count + f; };

  for (int d = 0; d < n; ++d) {
    if (!sk.free_dart(d)) {
      int bo = slot[d][BoldOut], bi = slot[d][BoldIn];
      tg.twin[bo] = bi;
      tg.twin[bi] = bo;
      tg.color[bo] = tg.color[bi] = EdgeColor::Bold;
      tg.outgoing[bo] = 1;
      tg.vertex_of[bo] = black_of[d];
      tg.vertex_of[bi] = white_vertex(d);

      int so = slot[d][SolidOut], si = slot[d][SolidIn];
      tg.twin[so] = si;
      tg.twin[si] = so;
      tg.color[so] = tg.color[si] = EdgeColor::Solid;
      tg.outgoing[so] = 1;
      tg.vertex_of[so] = cross_vertex(face_of[d]);
      tg.vertex_of[si] = black_of[d];
    }
    if (slot[d][DottedOut] >= 0) {
      int po = slot[d][DottedOut], pi = slot[d][DottedIn];
      tg.twin[po] = pi;
      tg.twin[pi] = po;
      tg.color[po] = tg.color[pi] = EdgeColor::Dotted;
      tg.outgoing[po] = 1;
      tg.vertex_of[po] = white_vertex(d);
      tg.vertex_of[pi] = cross_vertex(face_of[d]);
    }
  }

  // rotation at black vertices: bold darts in skeleton order, a solid dart
  // in each corner toward the face right of the corner's second dart
  for (int d = 0; d < n; ++d) {
    if (sk.free_dart(d)) continue;
    int nd = sk.next[d];
    tg.next[slot[d][BoldOut]] = slot[nd][SolidIn];
    tg.next[slot[nd][SolidIn]] = slot[nd][BoldOut];
  }

  // rotation at whites
  for (int d = 0; d < n; ++d) {
    if (sk.free_dart(d)) {
      // free end: bold toward the black end, then the dotted corner
      int black_side = sk.twin[d];
      tg.next[slot[black_side][BoldIn]] = slot[d][DottedOut];
      tg.next[slot[d][DottedOut]] = slot[black_side][BoldIn];
    } else if (!is_hanging_edge(d)) {
      tg.next[slot[d][BoldIn]] = slot[d][DottedOut];
      tg.next[slot[d][DottedOut]] = slot[sk.twin[d]][BoldIn];
    }
  }

  // rotation at crosses: reversed boundary-corner order
  for (const auto& f : face_list) {
    std::vector<int> corners;
    for (int x : f) {
      if (!sk.free_dart(x)) {
        corners.push_back(slot[x][SolidOut]);
        if (!is_hanging_edge(x)) corners.push_back(slot[x][DottedIn]);
      } else {
        corners.push_back(slot[x][DottedIn]);
      }
    }
    int m = static_cast<int>(corners.size());
    for (int i = 0; i < m; ++i) tg.next[corners[i]] = corners[(i + m - 1) % m];
  }

  CompletedDessin out{std::move(tg), dessin_counts(sk)};

  Validation v = validate_trichotomic(out.graph);
  if (!v.ok) throw InvariantBreach("completed dessin is not trichotomic: " + v.failure);
  if (!check_admissible(out.graph)) throw InvariantBreach("completed dessin is not admissible");
  // sphere condition and triangle regions
  {
    const auto& g = out.graph;
    std::vector<char> seen(g.dart_count, 0);
    long f = 0;
    for (int d = 0; d < g.dart_count; ++d) {
      if (seen[d]) continue;
      ++f;
      int cur = d, len = 0;
      while (!seen[cur]) {
        seen[cur] = 1;
        ++len;
        cur = g.next[g.twin[cur]];
      }
      if (len != 3) throw InvariantBreach("completed dessin has a non-triangular region");
    }
    long euler = g.vertex_count() - g.dart_count / 2 + f;
    if (euler != 2) throw InvariantBreach("completed dessin is not spherical");
  }
  return out;
}

long deg_j(const DessinCounts& counts) {
  long black = 0, white = 0, cross = 0;
  for (const auto& [i, c] : counts.n_black) black += static_cast<long>(i) * c;
  for (const auto& [i, c] : counts.n_white) white += static_cast<long>(i) * c;
  for (const auto& [i, c] : counts.n_cross) cross += static_cast<long>(i) * c;
  if (black != white || white != cross)
    throw InvariantBreach("deg j sums disagree: black " + std::to_string(black) + ", white " +
                          std::to_string(white) + ", cross " + std::to_string(cross));
  return black;
}

int hirzebruch_index(const DessinCounts& counts) {
  long rhs = 0;
  for (const auto& [i, c] : counts.n_cross) rhs += static_cast<long>(i) * c;
  for (const auto& [i, c] : counts.n_black) {
    if (i % 3 == 1) rhs += 2 * c;
    if (i % 3 == 2) rhs += 4 * c;
  }
  for (const auto& [i, c] : counts.n_white)
    if (i % 2 == 1) rhs += 3 * c;
  if (rhs % 6 != 0)
    throw InvariantBreach("singular-fiber multiplicity total " + std::to_string(rhs) +
                          " is not divisible by 6");
  return static_cast<int>(rhs / 6);
}

bool check_maximal(const DessinCounts& counts) {
  for (const auto& [i, c] : counts.n_black)
    if (i > 3 && c > 0) return false;
  for (const auto& [i, c] : counts.n_white)
    if (i > 2 && c > 0) return false;
  // On count data whose three sums disagree, the smallest is the only
  // lower bound for deg j that keeps Riemann-Hurwitz meaningful.
  long dj = 0;
  bool first = true;
  for (const auto* m : {&counts.n_black, &counts.n_white, &counts.n_cross}) {
    long sum = 0;
    for (const auto& [i, c] : *m) sum += static_cast<long>(i) * c;
    dj = first ? sum : std::min(dj, sum);
    first = false;
  }
  return counts.total() == dj + 2;
}

FiberProfile fiber_profile(const Skeleton& sk) {
  require_valid(sk);
  FiberProfile profile;
  for (const auto& v : vertices(sk)) {
    if (sk.free_dart(v[0])) {
      profile[FiberType::a1_star()]++;  // hanging edge
      continue;
    }
    if (v.size() == 1) profile[FiberType::a0_star_star()]++;
    if (v.size() == 2) profile[FiberType::a2_star()]++;
  }
  for (const auto& f : faces(sk)) {
    int i = static_cast<int>(f.size()) - face_free_darts(sk, f);
    if (i == 1)
      profile[FiberType::a0_star()]++;
    else
      profile[FiberType::a(i - 1)]++;
  }
  return profile;
}

long profile_multiplicity_sum(const FiberProfile& profile) {
  long sum = 0;
  for (const auto& [type, count] : profile) sum += static_cast<long>(type.multiplicity()) * count;
  return sum;
}

namespace {

std::multiset<int> pole_partition(const DessinCounts& c) {
  std::multiset<int> out;
  for (const auto& [i, count] : c.n_cross)
    for (long k = 0; k < count; ++k) out.insert(i);
  return out;
}

std::multiset<int> residues(const std::map<int, long>& m, int mod) {
  std::multiset<int> out;
  for (const auto& [i, count] : m)
    if (i % mod != 0)
      for (long k = 0; k < count; ++k) out.insert(i % mod);
  return out;
}

std::array<long, 3> degree_sums(const DessinCounts& c) {
  std::array<long, 3> sums{0, 0, 0};
  int idx = 0;
  for (const auto* m : {&c.n_black, &c.n_white, &c.n_cross}) {
    for (const auto& [i, count] : *m) sums[idx] += static_cast<long>(i) * count;
    ++idx;
  }
  return sums;
}

}  // namespace

bool check_deformation_conditions(const DessinCounts& before, const DessinCounts& after) {
  if (degree_sums(before) != degree_sums(after)) return false;
  if (pole_partition(before) != pole_partition(after)) return false;
  if (residues(before.n_black, 3) != residues(after.n_black, 3)) return false;
  if (residues(before.n_white, 2) != residues(after.n_white, 2)) return false;
  return true;
}

}  // namespace trig
