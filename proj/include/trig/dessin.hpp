#ifndef TRIG_DESSIN_HPP
#define TRIG_DESSIN_HPP

#include <map>
#include <string>
#include <vector>

#include "trig/skeleton.hpp"

namespace trig {

enum class VertexKind { Black, White, Cross, Mono };
enum class EdgeColor { Solid, Bold, Dotted };

// Oriented colored graph on the sphere. Orientation is stored per dart:
// `outgoing[d]` means the edge is directed away from d's vertex.
struct TrichotomicGraph {
  int dart_count = 0;
  std::vector<int> twin;
  std::vector<int> next;
  std::vector<int> vertex_of;        // dart -> vertex id
  std::vector<VertexKind> kind;      // per vertex
  std::vector<EdgeColor> color;      // per dart, constant on twin pairs
  std::vector<char> outgoing;        // per dart

  int vertex_count() const { return static_cast<int>(kind.size()); }
  int valency(int v) const;
};

// Structural conditions on vertex valencies, colors around vertices, and
// in/out alternation. Admissibility (no oriented monochrome cycles) is a
// separate check.
Validation validate_trichotomic(const TrichotomicGraph& tg);
bool check_admissible(const TrichotomicGraph& tg);

// Singular fiber types of a simplified trigonal curve.
struct FiberType {
  enum Family { A0ss, A1s, A2s, A0s, Ap } family;
  int p = 0;  // for Ap only, p >= 1

  static FiberType a0_star_star() { return {A0ss, 0}; }
  static FiberType a1_star() { return {A1s, 0}; }
  static FiberType a2_star() { return {A2s, 0}; }
  static FiberType a0_star() { return {A0s, 0}; }
  static FiberType a(int p);

  std::string name() const;            // "A~0**", "A~5", ...
  std::string parenthesized() const;   // the D~/E~ companion row, metadata only
  int j_value() const;                 // 0, 1, or 2 standing for infinity
  int ind_j() const;
  int multiplicity() const;
  int delta_deg_j() const;

  auto operator<=>(const FiberType&) const = default;
};

using FiberProfile = std::map<FiberType, int>;

// Vertex-count bookkeeping of a dessin: n_*[i] counts vertices of valency 2i.
struct DessinCounts {
  std::map<int, long> n_black, n_white, n_cross;
  long total() const;
};

struct CompletedDessin {
  TrichotomicGraph graph;
  DessinCounts counts;
};

// The unique maximal dessin over a skeleton: a WHITE vertex on each edge
// (at the free end of a hanging edge), a CROSS in each face joined to the
// black and white corners along the boundary.
CompletedDessin complete_to_dessin(const Skeleton& sk);

DessinCounts dessin_counts(const Skeleton& sk);

long deg_j(const DessinCounts& counts);          // the three sums must agree
int hirzebruch_index(const DessinCounts& counts);  // eq-6k sum / 6
bool check_maximal(const DessinCounts& counts);

FiberProfile fiber_profile(const Skeleton& sk);
long profile_multiplicity_sum(const FiberProfile& profile);

// Necessary count-level conditions for two dessins to be connected by a
// fiberwise deformation: equal degree, equal pole partition, equal nonzero
// residues of root multiplicities mod 3 (over j = 0) and mod 2 (over j = 1).
bool check_deformation_conditions(const DessinCounts& before, const DessinCounts& after);

}  // namespace trig

#endif
