#include "bchresum/errors.hpp"
#include "bchresum/tree.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace bchresum;

namespace {

// Brute force: apply every reduction sequence (replace any 2n items of the
// current list by one vertex) and collect the final trees.
void reduce_all(std::vector<Tree> items, int nodes, int max_nodes, std::set<std::string> &distinct, long &sequences)
{
    if (items.size() == 1) {
        distinct.insert(items.front().to_string());
        ++sequences;
        return;
    }
    if (nodes >= max_nodes)
        return;
    const std::size_t n = items.size();
    for (std::size_t size = 2; size <= n; size += 2) {
        // every subset of `size` positions
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != size)
                continue;
            std::vector<Tree> chosen, rest;
            for (std::size_t i = 0; i < n; ++i)
                ((mask >> i) & 1U ? chosen : rest).push_back(items[i]);
            rest.insert(rest.begin(), Tree::node(chosen));
            reduce_all(rest, nodes + 1, max_nodes, distinct, sequences);
        }
    }
}

std::set<std::string> brute_force(int m, int max_nodes, long *sequences = nullptr)
{
    std::vector<Tree> leaves;
    for (int i = 1; i <= m; ++i)
        leaves.push_back(Tree::leaf(i));
    std::set<std::string> out;
    long seq = 0;
    reduce_all(leaves, 0, max_nodes, out, seq);
    if (sequences)
        *sequences = seq;
    return out;
}

std::set<std::string> as_strings(const std::vector<Tree> &ts)
{
    std::set<std::string> s;
    for (const auto &t : ts)
        s.insert(t.to_string());
    return s;
}

} // namespace

TEST(Descendants, SingleLeaf)
{
    auto ts = descendants(1, 5);
    ASSERT_EQ(ts.size(), 1U);
    EXPECT_TRUE(ts[0].is_leaf());
    EXPECT_EQ(ts[0].to_string(), "1");
}

TEST(Descendants, ThreeLeavesGiveThreeBracketings)
{
    auto ts = descendants(3, 10);
    EXPECT_EQ(as_strings(ts), (std::set<std::string>{"<<1,2>_2,3>_2", "<<1,3>_2,2>_2", "<1,<2,3>_2>_2"}));
    for (const auto &t : ts) {
        EXPECT_EQ(t.vertex_count(), 2);
        EXPECT_EQ(t.shape_key(), "((LL)L)");
    }
}

TEST(Descendants, FourLeaves)
{
    auto ts = descendants(4, 10);
    ASSERT_EQ(ts.size(), 16U);
    int caterpillar = 0, balanced = 0, single = 0;
    for (const auto &t : ts) {
        auto k = t.shape_key();
        if (k == "(((LL)L)L)")
            ++caterpillar;
        else if (k == "((LL)(LL))")
            ++balanced;
        else if (k == "(LLLL)")
            ++single;
    }
    EXPECT_EQ(caterpillar, 12);
    EXPECT_EQ(balanced, 3);
    EXPECT_EQ(single, 1);
}

TEST(Descendants, MatchesBruteForceReduction)
{
    for (int m = 1; m <= 6; ++m)
        for (int max_nodes = 0; max_nodes <= m; ++max_nodes) {
            auto ts = descendants(m, max_nodes);
            auto strings = as_strings(ts);
            EXPECT_EQ(strings.size(), ts.size()) << "duplicate tree for m=" << m;
            EXPECT_EQ(strings, brute_force(m, max_nodes)) << "m=" << m << " max_nodes=" << max_nodes;
        }
}

TEST(Descendants, SequenceCountingWouldDoubleBalancedTrees)
{
    long sequences = 0;
    auto distinct = brute_force(4, 3, &sequences);
    // each balanced tree arises from two reduction orders
    EXPECT_EQ(distinct.size(), 16U);
    EXPECT_EQ(sequences, 12 + 3 * 2 + 1);
}

TEST(Descendants, NodeBudget)
{
    EXPECT_TRUE(descendants(3, 1).empty());
    EXPECT_EQ(descendants(4, 1).size(), 1U);
    EXPECT_EQ(descendants(2, 0).size(), 0U);
    for (const auto &t : descendants(6, 2))
        EXPECT_LE(t.vertex_count(), 2);
    EXPECT_THROW(descendants(0, 1), DomainError);
}

TEST(Tree, CanonicalFormIgnoresChildOrder)
{
    auto a = Tree::node({Tree::leaf(3), Tree::node({Tree::leaf(2), Tree::leaf(1)})});
    auto b = Tree::node({Tree::node({Tree::leaf(1), Tree::leaf(2)}), Tree::leaf(3)});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.to_string(), "<<1,2>_2,3>_2");
    EXPECT_EQ(a.expression("psi0"), "<<psi0,psi0>_2,psi0>_2");
    EXPECT_EQ(a.leaf_count(), 3);
    EXPECT_EQ(a.labels(), (std::vector<int>{1, 2, 3}));
    EXPECT_THROW(Tree::node({Tree::leaf(1), Tree::leaf(2), Tree::leaf(3)}), DomainError);
    EXPECT_THROW(Tree::node({Tree::leaf(1)}), DomainError);
}
