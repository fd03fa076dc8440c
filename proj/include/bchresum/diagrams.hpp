#pragma once

#include "bchresum/resummation.hpp"
#include "bchresum/scalar.hpp"
#include "bchresum/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bchresum {

struct DiagramEntry {
    Tree tree;
    Scalar weight;
    int k_order = 0;
    int leaves = 0;
    int vertices = 0;
    long labelings = 0;
};

/// The diagrams making up pi_n.
struct DiagramDoc {
    int order = 0;
    std::vector<DiagramEntry> entries;
};

/// DOT digraph for one diagram. Incoming lines start at plaintext nodes
/// leaf<i>; each vertex<j> is labeled with its arity 2n and kernel weight
/// k_{2n}; the outgoing line ends at the point node "out". Vertices are
/// numbered in preorder from the root, so output is stable.
std::string tree_to_dot(const Tree &tree, const Scalar &weight, std::string_view graph_name = "diagram");

/// "1/2 <<psi0,psi0>_2,psi0>_2"
std::string tree_to_text(const Tree &tree, const Scalar &weight);

DiagramDoc pi_diagrams(int n);

/// sum of weight * eval_tree over the document.
TSeries evaluate_diagrams(const DiagramDoc &doc, const TSeries &leaf_value);

} // namespace bchresum
