#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bchresum {

/// Labeled rooted tree whose internal nodes have even arity >= 2. Children
/// are unordered; the canonical form keeps them sorted by smallest leaf
/// label. Leaf labels in one tree are expected to be distinct.
class Tree {
  public:
    static Tree leaf(int label);
    /// Throws DomainError for odd arity or fewer than two children.
    static Tree node(std::vector<Tree> children);

    bool is_leaf() const { return children_.empty(); }
    int label() const { return label_; }
    const std::vector<Tree> &children() const { return children_; }
    int arity() const { return static_cast<int>(children_.size()); }

    int leaf_count() const;
    int vertex_count() const;
    int min_label() const { return min_label_; }
    std::vector<int> labels() const;

    /// Nested-bracket form with leaf labels, e.g. "<<1,2>_2,3>_2".
    std::string to_string() const;
    /// Same form with every leaf printed as `leaf_symbol`,
    /// e.g. "<<psi0,psi0>_2,psi0>_2".
    std::string expression(std::string_view leaf_symbol) const;
    /// Label-free canonical key; two trees have the same key iff they have
    /// the same shape.
    std::string shape_key() const;

    friend bool operator==(const Tree &a, const Tree &b);

  private:
    Tree() = default;

    int label_ = 0;
    int min_label_ = 0;
    std::vector<Tree> children_;
};

/// Every distinct labeled tree on leaves 1..m with at most max_nodes
/// internal nodes, each exactly once. Children of a node partition the
/// node's leaf set, so one tree corresponds to one set partition chain.
std::vector<Tree> descendants(int m, int max_nodes);

} // namespace bchresum
