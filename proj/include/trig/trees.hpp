#ifndef TRIG_TREES_HPP
#define TRIG_TREES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trig/skeleton.hpp"

namespace trig {

// Ordered rooted binary tree, stored as a preorder bit code:
// node = 1 . code(left) . code(right), absent child = 0. A tree on s
// vertices uses 2s+1 bits, so desk-scale trees fit in one word.
struct RootedBinaryTree {
  std::uint64_t code = 0;  // the empty tree is the single bit 0
  int size = 0;

  bool operator==(const RootedBinaryTree&) const = default;
  bool operator<(const RootedBinaryTree& rhs) const {
    return size != rhs.size ? size < rhs.size : code < rhs.code;
  }
};

RootedBinaryTree tree_parse(const std::string& text);  // "(L,R)", "-" absent
std::string tree_str(const RootedBinaryTree& t);
RootedBinaryTree tree_mirror(const RootedBinaryTree& t);
bool is_symmetric(const RootedBinaryTree& t);

std::vector<RootedBinaryTree> enumerate_trees(int s);  // s <= 14

// Skeleton of Prop-C type: root marker vertex, valencies completed with
// leaf loops. Keeps the data needed by the monodromy construction.
struct TreeSkeletonData {
  Skeleton sk;
  int k = 0;                       // Hirzebruch index, = tree size + 1
  int root_down_dart = -1;         // dart at the root toward marker/extra leaf
  std::vector<int> leaf_loop_out;  // per leaf: the loop dart right after the stem
  std::vector<int> leaf_stem_up;   // per leaf: stem dart at the leaf vertex
  std::vector<std::string> leaf_word;      // encoding word over {r,l} per leaf
  std::vector<int> toward_root;    // per dart: 1 if the dart points toward the root
  int distinguished_face = -1;     // alt construction: monogon of the extra leaf
};

TreeSkeletonData tree_to_skeleton_data(const RootedBinaryTree& t);
TreeSkeletonData tree_to_skeleton_alt_data(const RootedBinaryTree& t);

Skeleton tree_to_skeleton(const RootedBinaryTree& t);
// Returns the skeleton and the distinguished face id (index into faces()).
std::pair<Skeleton, int> tree_to_skeleton_alt(const RootedBinaryTree& t);

}  // namespace trig

#endif
