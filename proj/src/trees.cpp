#include "trig/trees.hpp"

#include <algorithm>

namespace trig {

namespace {

int code_bits(int size) { return 2 * size + 1; }

struct BitReader {
  std::uint64_t code;
  int pos;  // next bit to read, counting down
  bool read() { return (code >> --pos) & 1; }
};

struct Node {
  int left = -1, right = -1;
};

int decode_subtree(BitReader& br, std::vector<Node>& nodes) {
  if (!br.read()) return -1;
  int id = static_cast<int>(nodes.size());
  nodes.push_back({});
  nodes[id].left = decode_subtree(br, nodes);
  nodes[id].right = decode_subtree(br, nodes);
  return id;
}

std::vector<Node> decode(const RootedBinaryTree& t) {
  std::vector<Node> nodes;
  BitReader br{t.code, code_bits(t.size)};
  decode_subtree(br, nodes);
  return nodes;
}

struct Enc {
  std::uint64_t bits;
  int len;
};

Enc encode_subtree(const std::vector<Node>& nodes, int id) {
  if (id < 0) return {0, 1};
  Enc l = encode_subtree(nodes, nodes[id].left);
  Enc r = encode_subtree(nodes, nodes[id].right);
  return {(1ull << (l.len + r.len)) | (l.bits << r.len) | r.bits, 1 + l.len + r.len};
}

RootedBinaryTree from_nodes(const std::vector<Node>& nodes) {
  Enc e = nodes.empty() ? Enc{0, 1} : encode_subtree(nodes, 0);
  return {e.bits, static_cast<int>(nodes.size())};
}

int mirror_nodes(const std::vector<Node>& in, int id, std::vector<Node>& out) {
  if (id < 0) return -1;
  int nid = static_cast<int>(out.size());
  out.push_back({});
  int l = mirror_nodes(in, in[id].right, out);
  int r = mirror_nodes(in, in[id].left, out);
  out[nid].left = l;
  out[nid].right = r;
  return nid;
}

}  // namespace

std::string tree_str(const RootedBinaryTree& t) {
  std::vector<Node> nodes = decode(t);
  std::string out;
  auto rec = [&](auto&& self, int id) -> void {
    if (id < 0) {
      out += '-';
      return;
    }
    out += '(';
    self(self, nodes[id].left);
    out += ',';
    self(self, nodes[id].right);
    out += ')';
  };
  if (nodes.empty())
    out = "-";
  else
    rec(rec, 0);
  return out;
}

RootedBinaryTree tree_parse(const std::string& text) {
  std::vector<Node> nodes;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto rec = [&](auto&& self) -> int {
    skip_space();
    if (pos >= text.size()) throw DomainError("tree parse: unexpected end");
    if (text[pos] == '-') {
      ++pos;
      return -1;
    }
    if (text[pos] != '(') throw DomainError("tree parse: expected '(' or '-'");
    ++pos;
    int id = static_cast<int>(nodes.size());
    nodes.push_back({});
    int l = self(self);
    skip_space();
    if (pos >= text.size() || text[pos] != ',') throw DomainError("tree parse: expected ','");
    ++pos;
    int r = self(self);
    skip_space();
    if (pos >= text.size() || text[pos] != ')') throw DomainError("tree parse: expected ')'");
    ++pos;
    nodes[id].left = l;
    nodes[id].right = r;
    return id;
  };
  rec(rec);
  skip_space();
  if (pos != text.size()) throw DomainError("tree parse: trailing input");
  return from_nodes(nodes);
}

RootedBinaryTree tree_mirror(const RootedBinaryTree& t) {
  std::vector<Node> nodes = decode(t), out;
  out.reserve(nodes.size());
  if (!nodes.empty()) mirror_nodes(nodes, 0, out);
  return from_nodes(out);
}

bool is_symmetric(const RootedBinaryTree& t) { return t == tree_mirror(t); }

std::vector<RootedBinaryTree> enumerate_trees(int s) {
  if (s < 0 || s > 14) throw DomainError("enumerate_trees: size out of range 0..14");
  std::vector<std::vector<std::uint64_t>> by_size(s + 1);
  by_size[0] = {0};
  for (int n = 1; n <= s; ++n) {
    for (int ls = 0; ls < n; ++ls) {
      int rs = n - 1 - ls;
      int lbits = code_bits(ls), rbits = code_bits(rs);
      for (std::uint64_t l : by_size[ls])
        for (std::uint64_t r : by_size[rs])
          by_size[n].push_back((1ull << (lbits + rbits)) | (l << rbits) | r);
    }
  }
  std::vector<RootedBinaryTree> out;
  out.reserve(by_size[s].size());
  for (std::uint64_t c : by_size[s]) out.push_back({c, s});
  return out;
}

namespace {

// Shared body of the two skeleton constructions. With a marker, the root's
// downward edge ends in a monovalent vertex; otherwise it carries an extra
// leaf. Rotation at a tree vertex is (parent, right, left) counterclockwise,
// at a leaf vertex (stem, loop-out, loop-in); both match the planar picture
// of a tree growing upward with leaves completing the missing branches.
TreeSkeletonData build(const RootedBinaryTree& t, bool with_marker) {
  if (t.size < 1) throw DomainError("tree skeleton requires k >= 2, i.e. tree size >= 1");
  std::vector<Node> nodes = decode(t);
  const int s = static_cast<int>(nodes.size());

  TreeSkeletonData data;
  data.k = s + 1;

  // collect leaves (missing child slots) with their words, in DFS order
  struct LeafSlot {
    int parent;
    bool right_slot;
    std::string word;
  };
  std::vector<LeafSlot> leaves;
  auto dfs = [&](auto&& self, int id, const std::string& word) -> void {
    if (nodes[id].right >= 0)
      self(self, nodes[id].right, word + "r");
    else
      leaves.push_back({id, true, word + "r"});
    if (nodes[id].left >= 0)
      self(self, nodes[id].left, word + "l");
    else
      leaves.push_back({id, false, word + "l"});
  };
  dfs(dfs, 0, "");

  int extra_leaf = -1;
  if (!with_marker) {
    extra_leaf = static_cast<int>(leaves.size());
    leaves.push_back({0, false, ""});  // attached at the root's downward slot
  }
  const int nleaves = static_cast<int>(leaves.size());

  Skeleton& sk = data.sk;
  sk.dart_count = 3 * s + 3 * nleaves + (with_marker ? 1 : 0);
  sk.twin.assign(sk.dart_count, -1);
  sk.next.assign(sk.dart_count, -1);
  sk.is_free.assign(sk.dart_count, 0);
  data.toward_root.assign(sk.dart_count, 0);

  auto parent_dart = [&](int v) { return 3 * v; };
  auto right_dart = [&](int v) { return 3 * v + 1; };
  auto left_dart = [&](int v) { return 3 * v + 2; };
  auto stem_dart = [&](int l) { return 3 * s + 3 * l; };

  for (int v = 0; v < s; ++v) {
    sk.next[parent_dart(v)] = right_dart(v);
    sk.next[right_dart(v)] = left_dart(v);
    sk.next[left_dart(v)] = parent_dart(v);
    data.toward_root[parent_dart(v)] = 1;
    if (nodes[v].left >= 0) {
      sk.twin[left_dart(v)] = parent_dart(nodes[v].left);
      sk.twin[parent_dart(nodes[v].left)] = left_dart(v);
    }
    if (nodes[v].right >= 0) {
      sk.twin[right_dart(v)] = parent_dart(nodes[v].right);
      sk.twin[parent_dart(nodes[v].right)] = right_dart(v);
    }
  }
  for (int l = 0; l < nleaves; ++l) {
    int sd = stem_dart(l), lo = sd + 1, li = sd + 2;
    sk.next[sd] = lo;
    sk.next[lo] = li;
    sk.next[li] = sd;
    sk.twin[lo] = li;
    sk.twin[li] = lo;
    data.toward_root[sd] = 1;
    int slot = l == extra_leaf              ? parent_dart(0)
               : leaves[l].right_slot       ? right_dart(leaves[l].parent)
                                            : left_dart(leaves[l].parent);
    sk.twin[slot] = sd;
    sk.twin[sd] = slot;
    data.leaf_stem_up.push_back(sd);
    data.leaf_loop_out.push_back(lo);
    data.leaf_word.push_back(leaves[l].word);
  }
  data.root_down_dart = parent_dart(0);
  if (with_marker) {
    int m = sk.dart_count - 1;
    sk.next[m] = m;
    sk.twin[m] = parent_dart(0);
    sk.twin[parent_dart(0)] = m;
    data.toward_root[m] = 1;
  } else {
    // monogon of the extra leaf
    int li = stem_dart(extra_leaf) + 2;
    auto fs = faces(sk);
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (std::find(fs[f].begin(), fs[f].end(), li) != fs[f].end())
        data.distinguished_face = static_cast<int>(f);
  }
  require_valid(sk);
  return data;
}

}  // namespace

TreeSkeletonData tree_to_skeleton_data(const RootedBinaryTree& t) { return build(t, true); }

TreeSkeletonData tree_to_skeleton_alt_data(const RootedBinaryTree& t) { return build(t, false); }

Skeleton tree_to_skeleton(const RootedBinaryTree& t) { return build(t, true).sk; }

std::pair<Skeleton, int> tree_to_skeleton_alt(const RootedBinaryTree& t) {
  TreeSkeletonData d = build(t, false);
  return {d.sk, d.distinguished_face};
}

}  // namespace trig
