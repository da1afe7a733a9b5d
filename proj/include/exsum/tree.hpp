#ifndef EXSUM_TREE_HPP
#define EXSUM_TREE_HPP

#include <cstddef>
#include <vector>

#include "exsum/poly.hpp"

namespace exsum {

/// Subproduct tree over a list of polynomials. Node 0 is the root; a node
/// covering leaves [lo, hi) with more than one leaf has children covering
/// [lo, mid) and [mid, hi) with mid = lo + ⌈(hi - lo)/2⌉.
class ProductTree {
 public:
  struct Node {
    std::size_t lo, hi;
    Poly product;
    int left = -1;
    int right = -1;
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }
  const Poly& root_product() const { return nodes_.front().product; }
  std::size_t leaf_count() const { return leaf_count_; }
  /// Node index holding leaf i.
  std::size_t leaf_node(std::size_t i) const { return leaf_index_[i]; }

 private:
  friend ProductTree product_tree(const std::vector<Poly>& ps);
  std::vector<Node> nodes_;
  std::vector<std::size_t> leaf_index_;
  std::size_t leaf_count_ = 0;
};

/// Throws ContractError for an empty list or a zero polynomial.
ProductTree product_tree(const std::vector<Poly>& ps);

/// p mod ps[i] for every leaf, reducing top-down through the tree.
std::vector<Poly> remainder_tree(const Poly& p, const ProductTree& tree);

}  // namespace exsum

#endif  // EXSUM_TREE_HPP
