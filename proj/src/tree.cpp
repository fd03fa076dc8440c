#include "bchresum/tree.hpp"

#include "bchresum/errors.hpp"

#include <algorithm>

namespace bchresum {

Tree Tree::leaf(int label)
{
    Tree t;
    t.label_ = label;
    t.min_label_ = label;
    return t;
}

Tree Tree::node(std::vector<Tree> children)
{
    if (children.size() < 2 || children.size() % 2 != 0)
        throw DomainError("tree vertex must have even arity >= 2, got " + std::to_string(children.size()));
    std::sort(children.begin(), children.end(), [](const Tree &a, const Tree &b) {
        if (a.min_label_ != b.min_label_)
            return a.min_label_ < b.min_label_;
        return a.shape_key() < b.shape_key();
    });
    Tree t;
    t.min_label_ = children.front().min_label_;
    t.children_ = std::move(children);
    return t;
}

int Tree::leaf_count() const
{
    if (is_leaf())
        return 1;
    int n = 0;
    for (const auto &c : children_)
        n += c.leaf_count();
    return n;
}

int Tree::vertex_count() const
{
    if (is_leaf())
        return 0;
    int n = 1;
    for (const auto &c : children_)
        n += c.vertex_count();
    return n;
}

std::vector<int> Tree::labels() const
{
    if (is_leaf())
        return {label_};
    std::vector<int> out;
    for (const auto &c : children_) {
        auto sub = c.labels();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::string Tree::to_string() const
{
    if (is_leaf())
        return std::to_string(label_);
    std::string s = "<";
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i)
            s += ',';
        s += children_[i].to_string();
    }
    return s + ">_" + std::to_string(arity());
}

std::string Tree::expression(std::string_view leaf_symbol) const
{
    if (is_leaf())
        return std::string(leaf_symbol);
    std::vector<std::string> parts;
    for (const auto &c : children_)
        parts.push_back(c.expression(leaf_symbol));
    // leaves last, deeper subtrees first, to match the usual way of writing
    // <<a,b>_2,c>_2
    std::stable_sort(parts.begin(), parts.end(), [&](const std::string &a, const std::string &b) {
        bool la = a == leaf_symbol, lb = b == leaf_symbol;
        if (la != lb)
            return lb;
        return a > b;
    });
    std::string s = "<";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += ',';
        s += parts[i];
    }
    return s + ">_" + std::to_string(arity());
}

std::string Tree::shape_key() const
{
    if (is_leaf())
        return "L";
    std::vector<std::string> keys;
    for (const auto &c : children_)
        keys.push_back(c.shape_key());
    std::sort(keys.begin(), keys.end());
    std::string s = "(";
    for (const auto &k : keys)
        s += k;
    return s + ")";
}

bool operator==(const Tree &a, const Tree &b)
{
    return a.label_ == b.label_ && a.children_ == b.children_;
}

namespace {

struct Candidate {
    Tree tree;
    int nodes;
};

std::vector<Candidate> trees_on(const std::vector<int> &leaves, int budget);

// All set partitions of `items` into exactly `blocks` nonempty blocks, as
// restricted growth strings (block of items[0] is 0, and so on).
void partitions(std::size_t n, int blocks, std::vector<int> &assign, int used, std::size_t pos,
                std::vector<std::vector<int>> &out)
{
    if (pos == n) {
        if (used == blocks)
            out.push_back(assign);
        return;
    }
    // not enough items left to open the remaining blocks
    if (static_cast<int>(n - pos) < blocks - used)
        return;
    for (int b = 0; b < used; ++b) {
        assign[pos] = b;
        partitions(n, blocks, assign, used, pos + 1, out);
    }
    if (used < blocks) {
        assign[pos] = used;
        partitions(n, blocks, assign, used + 1, pos + 1, out);
    }
}

void combine(const std::vector<std::vector<Candidate>> &per_block, std::size_t idx, int budget,
             std::vector<Tree> &chosen, int nodes_used, std::vector<Candidate> &out)
{
    if (idx == per_block.size()) {
        out.push_back({Tree::node(chosen), nodes_used + 1});
        return;
    }
    for (const auto &c : per_block[idx]) {
        if (nodes_used + c.nodes + 1 > budget)
            continue;
        chosen.push_back(c.tree);
        combine(per_block, idx + 1, budget, chosen, nodes_used + c.nodes, out);
        chosen.pop_back();
    }
}

std::vector<Candidate> trees_on(const std::vector<int> &leaves, int budget)
{
    std::vector<Candidate> out;
    if (leaves.size() == 1) {
        out.push_back({Tree::leaf(leaves.front()), 0});
        return out;
    }
    if (budget < 1)
        return out;
    const std::size_t n = leaves.size();
    for (int blocks = 2; blocks <= static_cast<int>(n); blocks += 2) {
        std::vector<std::vector<int>> parts;
        std::vector<int> assign(n, 0);
        partitions(n, blocks, assign, 0, 0, parts);
        for (const auto &p : parts) {
            std::vector<std::vector<int>> block_leaves(static_cast<std::size_t>(blocks));
            for (std::size_t i = 0; i < n; ++i)
                block_leaves[static_cast<std::size_t>(p[i])].push_back(leaves[i]);
            std::vector<std::vector<Candidate>> per_block;
            bool feasible = true;
            for (const auto &bl : block_leaves) {
                per_block.push_back(trees_on(bl, budget - 1));
                if (per_block.back().empty()) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible)
                continue;
            std::vector<Tree> chosen;
            combine(per_block, 0, budget, chosen, 0, out);
        }
    }
    return out;
}

} // namespace

std::vector<Tree> descendants(int m, int max_nodes)
{
    if (m < 1)
        throw DomainError("descendants: need at least one leaf");
    std::vector<int> leaves(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        leaves[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Tree> out;
    for (auto &c : trees_on(leaves, max_nodes))
        out.push_back(std::move(c.tree));
    return out;
}

} // namespace bchresum
