#include "exsum/tree.hpp"

#include "exsum/errors.hpp"

namespace exsum {

namespace {

int build(std::vector<ProductTree::Node>& nodes, std::vector<std::size_t>& leaf_index,
          const std::vector<Poly>& ps, std::size_t lo, std::size_t hi) {
  const int id = static_cast<int>(nodes.size());
  nodes.push_back({lo, hi, Poly(), -1, -1});
  if (hi - lo == 1) {
    nodes[id].product = ps[lo];
    leaf_index[lo] = static_cast<std::size_t>(id);
    return id;
  }
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  const int l = build(nodes, leaf_index, ps, lo, mid);
  const int r = build(nodes, leaf_index, ps, mid, hi);
  nodes[id].left = l;
  nodes[id].right = r;
  nodes[id].product = poly_mul(nodes[l].product, nodes[r].product);
  return id;
}

}  // namespace

ProductTree product_tree(const std::vector<Poly>& ps) {
  if (ps.empty()) throw ContractError("product tree over an empty list");
  for (const Poly& p : ps) {
    if (p.is_zero()) throw ContractError("product tree over a zero polynomial");
  }
  ProductTree tree;
  tree.leaf_count_ = ps.size();
  tree.leaf_index_.assign(ps.size(), 0);
  tree.nodes_.reserve(2 * ps.size());
  build(tree.nodes_, tree.leaf_index_, ps, 0, ps.size());
  return tree;
}

std::vector<Poly> remainder_tree(const Poly& p, const ProductTree& tree) {
  const auto& nodes = tree.nodes();
  std::vector<Poly> out(tree.leaf_count());
  // Explicit stack of (node, dividend already reduced mod the parent).
  std::vector<std::pair<int, Poly>> stack;
  stack.emplace_back(0, p);
  while (!stack.empty()) {
    auto [id, dividend] = std::move(stack.back());
    stack.pop_back();
    const auto& node = nodes[static_cast<std::size_t>(id)];
    Poly r = poly_rem(dividend, node.product);
    if (node.left < 0) {
      out[node.lo] = std::move(r);
      continue;
    }
    stack.emplace_back(node.right, r);
    stack.emplace_back(node.left, std::move(r));
  }
  return out;
}

}  // namespace exsum
