#ifndef TRIG_SKELETON_HPP
#define TRIG_SKELETON_HPP

#include <string>
#include <vector>

#include "trig/braid.hpp"

namespace trig {

// Connected planar rotation system with BLACK vertices of valency <= 3 and
// FREE ends modelling hanging edges. Darts are 0..dart_count-1; `next` is the
// counterclockwise rotation around vertices, `twin` the edge involution.
struct Skeleton {
  int dart_count = 0;
  std::vector<int> twin;
  std::vector<int> next;
  std::vector<char> is_free;  // per dart

  bool free_dart(int d) const { return is_free[d] != 0; }
  int edges() const { return dart_count / 2; }
};

struct Validation {
  bool ok = true;
  std::string failure;  // which invariant failed
};

Validation validate(const Skeleton& sk);
void require_valid(const Skeleton& sk);  // throws DomainError with the failure

// Orbits of `next`: vertex id per dart, plus orbit lists.
std::vector<std::vector<int>> vertices(const Skeleton& sk);
std::vector<int> vertex_of_darts(const Skeleton& sk);
int valency(const Skeleton& sk, const std::vector<std::vector<int>>& verts, int v);

// Orbits of next . twin, in traversal order.
std::vector<std::vector<int>> faces(const Skeleton& sk);
int face_free_darts(const Skeleton& sk, const std::vector<int>& face);

// Relabeling-invariant encoding: minimal BFS code over all start darts.
std::string canonical_form(const Skeleton& sk);
// Same, with an extra per-dart mark table carried through the relabeling
// (used to tell apart skeletons with a distinguished face or fiber).
std::string canonical_form_marked(const Skeleton& sk, const std::vector<char>& marks);
int automorphism_count(const Skeleton& sk);

Skeleton mirror(const Skeleton& sk);
bool is_mirror_symmetric(const Skeleton& sk);

// Exhaustive duplicate-free list of valid skeletons with E <= max_edges,
// canonical representatives sorted by (dart count, canonical form).
// max_edges <= 8. The parallel variant partitions the twin-table search
// across OpenMP threads; the serial one is the reference implementation.
std::vector<Skeleton> enumerate_skeletons(int max_edges);
std::vector<Skeleton> enumerate_skeletons_serial(int max_edges);

// Rebuild a skeleton from its canonical form.
Skeleton skeleton_from_canonical(const std::string& code);

}  // namespace trig

#endif
