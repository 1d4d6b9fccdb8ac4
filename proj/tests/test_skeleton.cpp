#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trig/skeleton.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

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

Skeleton two_vertex_path() {
  Skeleton sk;
  sk.dart_count = 2;
  sk.twin = {1, 0};
  sk.next = {0, 1};
  sk.is_free = {0, 0};
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

struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
};

Skeleton relabel(const Skeleton& sk, const std::vector<int>& perm) {
  Skeleton out;
  out.dart_count = sk.dart_count;
  out.twin.resize(sk.dart_count);
  out.next.resize(sk.dart_count);
  out.is_free.resize(sk.dart_count);
  for (int d = 0; d < sk.dart_count; ++d) {
    out.twin[perm[d]] = perm[sk.twin[d]];
    out.next[perm[d]] = perm[sk.next[d]];
    out.is_free[perm[d]] = sk.is_free[d];
  }
  return out;
}

Skeleton random_relabel(const Skeleton& sk, Rng& rng) {
  std::vector<int> perm(sk.dart_count);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = sk.dart_count - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next() % (i + 1)]);
  return relabel(sk, perm);
}

// Independent automorphism oracle: count dart bijections commuting with
// twin and next and preserving the free set, by brute force over images of
// dart 0 extended functionally.
int brute_force_automorphisms(const Skeleton& sk) {
  int count = 0;
  for (int image0 = 0; image0 < sk.dart_count; ++image0) {
    std::vector<int> phi(sk.dart_count, -1);
    phi[0] = image0;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      int td = sk.twin[d], nd = sk.next[d];
      for (auto [src, img] : {std::pair{td, sk.twin[phi[d]]}, std::pair{nd, sk.next[phi[d]]}}) {
        if (phi[src] < 0) {
          phi[src] = img;
          stack.push_back(src);
        } else if (phi[src] != img) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> seen(sk.dart_count, 0);
    for (int d = 0; d < sk.dart_count && ok; ++d) {
      if (phi[d] < 0 || seen[phi[d]] || sk.is_free[phi[d]] != sk.is_free[d]) ok = false;
      if (ok) seen[phi[d]] = 1;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(loop_on_one_vertex()).ok);
  CHECK(validate(single_hanging_edge()).ok);
  CHECK(validate(two_vertex_path()).ok);
  CHECK(validate(theta_graph()).ok);

  Skeleton fixed_point = loop_on_one_vertex();
  fixed_point.twin = {0, 1};
  CHECK_FALSE(validate(fixed_point).ok);
  CHECK(validate(fixed_point).failure.find("involution") != std::string::npos);

  Skeleton quad;  // valency-4 vertex with two loops
  quad.dart_count = 4;
  quad.twin = {1, 0, 3, 2};
  quad.next = {1, 2, 3, 0};
  quad.is_free = {0, 0, 0, 0};
  CHECK_FALSE(validate(quad).ok);

  Skeleton doubly_free = single_hanging_edge();
  doubly_free.is_free = {1, 1};
  CHECK_FALSE(validate(doubly_free).ok);

  Skeleton disconnected;
  disconnected.dart_count = 4;
  disconnected.twin = {1, 0, 3, 2};
  disconnected.next = {1, 0, 3, 2};
  disconnected.is_free = {0, 0, 0, 0};
  CHECK_FALSE(validate(disconnected).ok);
  CHECK(validate(disconnected).failure.find("connect") != std::string::npos);
}

TEST_CASE("faces") {
  auto loop_faces = faces(loop_on_one_vertex());
  REQUIRE(loop_faces.size() == 2);
  CHECK(loop_faces[0].size() == 1);
  CHECK(loop_faces[1].size() == 1);

  auto theta_faces = faces(theta_graph());
  REQUIRE(theta_faces.size() == 3);
  for (const auto& f : theta_faces) CHECK(f.size() == 2);

  auto hang_faces = faces(single_hanging_edge());
  REQUIRE(hang_faces.size() == 1);
  CHECK(hang_faces[0].size() == 2);
  CHECK(face_free_darts(single_hanging_edge(), hang_faces[0]) == 1);
}

TEST_CASE("canonical form is relabeling invariant") {
  Rng rng{5};
  for (const Skeleton& sk :
       {loop_on_one_vertex(), single_hanging_edge(), theta_graph(), two_vertex_path()}) {
    std::string canon = canonical_form(sk);
    for (int n = 0; n < 20; ++n) CHECK(canonical_form(random_relabel(sk, rng)) == canon);
  }
  CHECK(canonical_form(theta_graph()) != canonical_form(loop_on_one_vertex()));
  CHECK(canonical_form(two_vertex_path()) != canonical_form(single_hanging_edge()));
}

TEST_CASE("automorphism counts match the brute-force oracle") {
  CHECK(automorphism_count(loop_on_one_vertex()) == 2);
  CHECK(automorphism_count(loop_on_one_vertex()) == brute_force_automorphisms(loop_on_one_vertex()));
  CHECK(automorphism_count(theta_graph()) == brute_force_automorphisms(theta_graph()));
  CHECK(automorphism_count(single_hanging_edge()) == brute_force_automorphisms(single_hanging_edge()));
  for (const Skeleton& sk : enumerate_skeletons(3))
    CHECK(automorphism_count(sk) == brute_force_automorphisms(sk));
}

TEST_CASE("mirror") {
  for (const Skeleton& sk : {loop_on_one_vertex(), theta_graph(), single_hanging_edge()}) {
    Skeleton mm = mirror(mirror(sk));
    CHECK(mm.twin == sk.twin);
    CHECK(mm.next == sk.next);
    CHECK(validate(mirror(sk)).ok);
  }
  CHECK(is_mirror_symmetric(loop_on_one_vertex()));
  CHECK(is_mirror_symmetric(theta_graph()));
  for (const Skeleton& sk : enumerate_skeletons(4))
    CHECK(is_mirror_symmetric(sk) == is_mirror_symmetric(mirror(sk)));
}

TEST_CASE("skeleton round trip through canonical form") {
  for (const Skeleton& sk : enumerate_skeletons(3)) {
    Skeleton back = skeleton_from_canonical(canonical_form(sk));
    CHECK(validate(back).ok);
    CHECK(canonical_form(back) == canonical_form(sk));
  }
}

TEST_CASE("enumerate_skeletons at E = 1") {
  // Loop on one vertex, single hanging edge, and the two-vertex path: the
  // latter two are the two linear-tree curves in Sigma_1.
  auto list = enumerate_skeletons(1);
  CHECK(list.size() == 3);
  std::set<std::string> forms;
  for (const Skeleton& sk : list) forms.insert(canonical_form(sk));
  CHECK(forms.count(canonical_form(loop_on_one_vertex())));
  CHECK(forms.count(canonical_form(single_hanging_edge())));
  CHECK(forms.count(canonical_form(two_vertex_path())));
}

TEST_CASE("enumerate_skeletons: structural invariants") {
  auto list = enumerate_skeletons(4);
  std::set<std::string> forms;
  for (const Skeleton& sk : list) {
    CHECK(validate(sk).ok);
    forms.insert(canonical_form(sk));

    long degree_sum = 0;
    for (const auto& f : faces(sk)) degree_sum += static_cast<long>(f.size());
    CHECK(degree_sum == sk.dart_count);

    long valency_sum = 0, free_count = 0;
    for (const auto& v : vertices(sk)) {
      if (sk.free_dart(v[0]))
        ++free_count;
      else
        valency_sum += static_cast<long>(v.size());
    }
    CHECK(valency_sum + free_count == sk.dart_count);
  }
  CHECK(forms.size() == list.size());  // pairwise distinct
  // closed under mirror
  for (const Skeleton& sk : list) CHECK(forms.count(canonical_form(mirror(sk))));
  // contains the theta graph
  CHECK(forms.count(canonical_form(theta_graph())));
}

TEST_CASE("parallel enumeration agrees with the serial reference") {
  for (int e : {2, 4, 5}) {
    auto par = enumerate_skeletons(e);
    auto ser = enumerate_skeletons_serial(e);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i)
      CHECK(canonical_form(par[i]) == canonical_form(ser[i]));
  }
}

TEST_CASE("enumeration resource guard") {
  CHECK_THROWS_AS(enumerate_skeletons(9), DomainError);
  CHECK_THROWS_AS(enumerate_skeletons(0), DomainError);
}
