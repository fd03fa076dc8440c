#include "bchresum/diagrams.hpp"

#include "bchresum/errors.hpp"
#include "bchresum/kernel.hpp"

#include <sstream>

namespace bchresum {

namespace {

struct DotWriter {
    std::ostringstream nodes;
    std::ostringstream edges;
    int next_vertex = 1;

    std::string visit(const Tree &t)
    {
        if (t.is_leaf()) {
            std::string id = "leaf" + std::to_string(t.label());
            nodes << "  " << id << " [shape=plaintext, label=\"" << t.label() << "\"];\n";
            return id;
        }
        std::string id = "vertex" + std::to_string(next_vertex++);
        nodes << "  " << id << " [shape=circle, label=\"" << t.arity() << "\\n"
              << k_coeff(t.arity()).to_short_string() << "\"];\n";
        for (const auto &c : t.children()) {
            std::string child = visit(c);
            edges << "  " << child << " -> " << id << ";\n";
        }
        return id;
    }
};

} // namespace

std::string tree_to_dot(const Tree &tree, const Scalar &weight, std::string_view graph_name)
{
    DotWriter w;
    std::string root = w.visit(tree);
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=BT;\n";
    os << "  label=\"" << weight.to_short_string() << " " << tree.expression("psi0") << "\";\n";
    os << w.nodes.str();
    os << "  out [shape=point];\n";
    os << w.edges.str();
    os << "  " << root << " -> out;\n";
    os << "}\n";
    return os.str();
}

std::string tree_to_text(const Tree &tree, const Scalar &weight)
{
    return weight.to_short_string() + " " + tree.expression("psi0");
}

DiagramDoc pi_diagrams(int n)
{
    if (n < 1)
        throw DomainError("pi_diagrams: order must be >= 1");
    DiagramDoc doc;
    doc.order = n;
    for (auto &wt : descendant_expansion(n)) {
        if (wt.order != n)
            continue;
        int leaves = wt.tree.leaf_count();
        int vertices = wt.tree.vertex_count();
        doc.entries.push_back({std::move(wt.tree), wt.weight, wt.order, leaves, vertices, wt.labelings});
    }
    return doc;
}

TSeries evaluate_diagrams(const DiagramDoc &doc, const TSeries &leaf_value)
{
    TSeries sum(leaf_value.alphabet(), leaf_value.trunc_degree());
    for (const auto &e : doc.entries)
        sum += eval_tree(e.tree, leaf_value) * e.weight;
    return sum;
}

} // namespace bchresum
