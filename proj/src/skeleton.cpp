#include "trig/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trig {

namespace {

bool is_permutation_table(const std::vector<int>& p, int n) {
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (i >= static_cast<int>(p.size()) || p[i] < 0 || p[i] >= n || seen[p[i]]) return false;
    seen[p[i]] = 1;
  }
  return true;
}

std::vector<std::vector<int>> orbits_of(const std::vector<int>& perm, int n) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    std::vector<int> orbit;
    int cur = d;
    while (!seen[cur]) {
      seen[cur] = 1;
      orbit.push_back(cur);
      cur = perm[cur];
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

Validation validate(const Skeleton& sk) {
  const int n = sk.dart_count;
  if (n < 2 || n % 2 != 0) return {false, "dart count must be even and >= 2"};
  if (static_cast<int>(sk.twin.size()) != n || static_cast<int>(sk.next.size()) != n ||
      static_cast<int>(sk.is_free.size()) != n)
    return {false, "table sizes disagree with dart count"};
  if (!is_permutation_table(sk.twin, n) || !is_permutation_table(sk.next, n))
    return {false, "twin/next are not permutations"};
  for (int d = 0; d < n; ++d) {
    if (sk.twin[d] == d) return {false, "involution: twin has a fixed point"};
    if (sk.twin[sk.twin[d]] != d) return {false, "involution: twin is not an involution"};
  }
  for (int d = 0; d < n; ++d) {
    if (sk.free_dart(d)) {
      if (sk.next[d] != d) return {false, "free dart must form a valency-1 vertex"};
      if (sk.free_dart(sk.twin[d])) return {false, "edge with two free ends is not a hanging edge"};
    }
  }
  for (const auto& orbit : orbits_of(sk.next, n)) {
    bool free_orbit = sk.free_dart(orbit[0]);
    if (!free_orbit && orbit.size() > 3) return {false, "valency: BLACK vertex of valency > 3"};
    (void)free_orbit;
  }
  // connectivity under <twin, next>
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      ++count;
      for (int e : {sk.twin[d], sk.next[d]})
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
    }
    if (count != n) return {false, "connectivity: skeleton is not connected"};
  }
  // sphere condition
  {
    long v = static_cast<long>(orbits_of(sk.next, n).size());
    long e = n / 2;
    std::vector<int> face_perm(n);
    for (int d = 0; d < n; ++d) face_perm[d] = sk.next[sk.twin[d]];
    long f = static_cast<long>(orbits_of(face_perm, n).size());
    if (v - e + f != 2) return {false, "Euler: V - E + F != 2"};
  }
  return {};
}

void require_valid(const Skeleton& sk) {
  Validation v = validate(sk);
  if (!v.ok) throw DomainError("invalid skeleton: " + v.failure);
}

std::vector<std::vector<int>> vertices(const Skeleton& sk) { return orbits_of(sk.next, sk.dart_count); }

std::vector<int> vertex_of_darts(const Skeleton& sk) {
  std::vector<int> out(sk.dart_count, -1);
  auto verts = vertices(sk);
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (int d : verts[v]) out[d] = static_cast<int>(v);
  return out;
}

int valency(const Skeleton&, const std::vector<std::vector<int>>& verts, int v) {
  return static_cast<int>(verts[v].size());
}

std::vector<std::vector<int>> faces(const Skeleton& sk) {
  std::vector<int> face_perm(sk.dart_count);
  for (int d = 0; d < sk.dart_count; ++d) face_perm[d] = sk.next[sk.twin[d]];
  return orbits_of(face_perm, sk.dart_count);
}

int face_free_darts(const Skeleton& sk, const std::vector<int>& face) {
  int f = 0;
  for (int d : face) f += sk.free_dart(d) ? 1 : 0;
  return f;
}

namespace {

// BFS relabeling code starting from dart s: tables of the relabeled skeleton,
// serialized one byte per entry (dart counts stay well below 256).
std::string bfs_code(const Skeleton& sk, int s, const std::vector<char>* marks) {
  const int n = sk.dart_count;
  std::vector<int> label(n, -1);
  std::vector<int> order;
  order.reserve(n);
  label[s] = 0;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int d = order[head];
    for (int e : {sk.twin[d], sk.next[d]})
      if (label[e] < 0) {
        label[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
  }
  std::string code;
  code.reserve(4 * n + 1);
  code.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i) code.push_back(static_cast<char>(label[sk.twin[order[i]]]));
  for (int i = 0; i < n; ++i) code.push_back(static_cast<char>(label[sk.next[order[i]]]));
  for (int i = 0; i < n; ++i) code.push_back(sk.free_dart(order[i]) ? 1 : 0);
  if (marks)
    for (int i = 0; i < n; ++i) code.push_back((*marks)[order[i]]);
  return code;
}

std::string min_code(const Skeleton& sk, const std::vector<char>* marks) {
  std::string best;
  for (int s = 0; s < sk.dart_count; ++s) {
    std::string code = bfs_code(sk, s, marks);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::string canonical_form(const Skeleton& sk) { return min_code(sk, nullptr); }

std::string canonical_form_marked(const Skeleton& sk, const std::vector<char>& marks) {
  return min_code(sk, &marks);
}

int automorphism_count(const Skeleton& sk) {
  std::string best = canonical_form(sk);
  int count = 0;
  for (int s = 0; s < sk.dart_count; ++s)
    if (bfs_code(sk, s, nullptr) == best) ++count;
  return count;
}

Skeleton mirror(const Skeleton& sk) {
  Skeleton out = sk;
  for (int d = 0; d < sk.dart_count; ++d) out.next[sk.next[d]] = d;
  return out;
}

bool is_mirror_symmetric(const Skeleton& sk) {
  return canonical_form(sk) == canonical_form(mirror(sk));
}

Skeleton skeleton_from_canonical(const std::string& code) {
  Skeleton sk;
  sk.dart_count = static_cast<unsigned char>(code[0]);
  const int n = sk.dart_count;
  sk.twin.resize(n);
  sk.next.resize(n);
  sk.is_free.resize(n);
  for (int i = 0; i < n; ++i) sk.twin[i] = static_cast<unsigned char>(code[1 + i]);
  for (int i = 0; i < n; ++i) sk.next[i] = static_cast<unsigned char>(code[1 + n + i]);
  for (int i = 0; i < n; ++i) sk.is_free[i] = code[1 + 2 * n + i];
  return sk;
}

namespace {

constexpr int kMaxEnumerationEdges = 8;

// Base rotation for a degree composition: v3 trivalent cycles, then v2
// bivalent, then v1 monovalent black, then h free darts.
Skeleton composition_base(int v3, int v2, int v1, int h) {
  Skeleton sk;
  sk.dart_count = 3 * v3 + 2 * v2 + v1 + h;
  sk.twin.assign(sk.dart_count, -1);
  sk.next.resize(sk.dart_count);
  sk.is_free.assign(sk.dart_count, 0);
  int o = 0;
  for (int i = 0; i < v3; ++i, o += 3) {
    sk.next[o] = o + 1;
    sk.next[o + 1] = o + 2;
    sk.next[o + 2] = o;
  }
  for (int i = 0; i < v2; ++i, o += 2) {
    sk.next[o] = o + 1;
    sk.next[o + 1] = o;
  }
  for (int i = 0; i < v1 + h; ++i, ++o) sk.next[o] = o;
  for (int i = sk.dart_count - h; i < sk.dart_count; ++i) sk.is_free[i] = 1;
  return sk;
}

void match_darts(Skeleton& sk, std::set<std::string>& found) {
  int first = -1;
  for (int d = 0; d < sk.dart_count; ++d)
    if (sk.twin[d] < 0) {
      first = d;
      break;
    }
  if (first < 0) {
    if (validate(sk).ok) found.insert(canonical_form(sk));
    return;
  }
  for (int j = first + 1; j < sk.dart_count; ++j) {
    if (sk.twin[j] >= 0) continue;
    if (sk.free_dart(first) && sk.free_dart(j)) continue;
    sk.twin[first] = j;
    sk.twin[j] = first;
    match_darts(sk, found);
    sk.twin[first] = -1;
    sk.twin[j] = -1;
  }
}

std::vector<std::array<int, 4>> degree_compositions(int max_edges) {
  std::vector<std::array<int, 4>> comps;
  for (int e = 1; e <= max_edges; ++e) {
    int darts = 2 * e;
    for (int v3 = 0; 3 * v3 <= darts; ++v3)
      for (int v2 = 0; 3 * v3 + 2 * v2 <= darts; ++v2)
        for (int v1 = 0; 3 * v3 + 2 * v2 + v1 <= darts; ++v1) {
          int h = darts - 3 * v3 - 2 * v2 - v1;
          comps.push_back({v3, v2, v1, h});
        }
  }
  return comps;
}

std::vector<Skeleton> collect(std::set<std::string>&& canon) {
  std::vector<std::string> codes(canon.begin(), canon.end());
  std::sort(codes.begin(), codes.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Skeleton> out;
  out.reserve(codes.size());
  for (const std::string& c : codes) out.push_back(skeleton_from_canonical(c));
  return out;
}

}  // namespace

std::vector<Skeleton> enumerate_skeletons_serial(int max_edges) {
  if (max_edges < 1 || max_edges > kMaxEnumerationEdges)
    throw DomainError("enumerate_skeletons: max_edges out of range 1..8");
  std::set<std::string> canon;
  for (const auto& [v3, v2, v1, h] : degree_compositions(max_edges)) {
    Skeleton base = composition_base(v3, v2, v1, h);
    match_darts(base, canon);
  }
  return collect(std::move(canon));
}

std::vector<Skeleton> enumerate_skeletons(int max_edges) {
  if (max_edges < 1 || max_edges > kMaxEnumerationEdges)
    throw DomainError("enumerate_skeletons: max_edges out of range 1..8");
  auto comps = degree_compositions(max_edges);
  std::set<std::string> canon;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::set<std::string> local;
#pragma omp for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(comps.size()); ++i) {
      Skeleton base = composition_base(comps[i][0], comps[i][1], comps[i][2], comps[i][3]);
      match_darts(base, local);
    }
#pragma omp critical
    canon.merge(local);
  }
#else
  for (const auto& [v3, v2, v1, h] : comps) {
    Skeleton base = composition_base(v3, v2, v1, h);
    match_darts(base, canon);
  }
#endif
  return collect(std::move(canon));
}

}  // namespace trig
