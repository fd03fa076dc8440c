#pragma once

#include "bchresum/ncpoly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bchresum {

/// log(exp(x) exp(y)) in the free algebra over {x, y}, truncated at D.
NCPoly bch_direct(int trunc_degree);

/// sum_m q_m(u -> x+y, w -> x-y), truncated at D.
NCPoly qseries_to_xy(const std::vector<NCPoly> &q, int trunc_degree);

struct Discrepancy {
    std::string word;
    Scalar expected;
    Scalar actual;
};

struct ComparisonReport {
    int trunc_degree = 0;
    int max_order = 0;
    bool matched = false;
    std::optional<Discrepancy> first_discrepancy;
    /// Nonzero oracle terms per word length 0..D.
    std::vector<std::size_t> per_degree_term_counts;

    nlohmann::ordered_json to_json() const;
};

/// Word-by-word comparison of an already computed q-series against the
/// oracle. The first discrepancy is the smallest word in length-then-lex
/// order.
ComparisonReport compare_with_oracle(const std::vector<NCPoly> &q, int max_order, int trunc_degree);

/// Computes q_1..q_N by the descendant construction and compares. Requires
/// N >= D.
ComparisonReport verify(int max_order, int trunc_degree, int threads = 1);

} // namespace bchresum
