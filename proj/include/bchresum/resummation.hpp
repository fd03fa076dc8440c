#pragma once

#include "bchresum/ncpoly.hpp"
#include "bchresum/tree.hpp"
#include "bchresum/tseries.hpp"

#include <map>
#include <span>
#include <vector>

namespace bchresum {

/// e^{(t/2) ad w} int_0^t e^{-(tau/2) ad w} f(tau) dtau, the linear flow
/// shared by psi_0 and every vertex.
TSeries conjugated_integral(const TSeries &f);

/// g_{2n}(v) = k_{2n} * conjugated_integral((ad v)^{2n} u).
TSeries vertex_g(int two_n, const TSeries &v);

/// Symmetric multilinear vertex <v_1,...,v_{2n}>_{2n}: k_{2n} times the
/// conjugated integral of sum over all orderings sigma of
/// ad v_{sigma(1)} ... ad v_{sigma(2n)} u. Equal arguments are grouped, so
/// only distinct orderings are expanded.
TSeries vertex(int two_n, std::span<const TSeries> args);

/// Bottom-up evaluation with every leaf carrying leaf_value.
TSeries eval_tree(const Tree &tree, const TSeries &leaf_value);

/// psi = sum_n pi_n, graded by the power of u (the bookkeeping parameter k).
struct GradedSeries {
    int trunc_degree = 0;
    int max_order = 0;
    /// pi_1 .. pi_max_order, zero series included.
    std::vector<TSeries> parts;

    /// pi_n; DomainError outside 1..max_order.
    const TSeries &part(int n) const;
    TSeries total() const;

    friend bool operator==(const GradedSeries &, const GradedSeries &) = default;
};

/// One tree shape of the descendant sum with its exact weight:
/// (number of labelings) / r!.
struct WeightedTree {
    Tree tree; ///< representative labeling, leaves 1..r
    Scalar weight;
    int order = 0; ///< r + s
    long labelings = 0;
};

/// Every tree shape contributing to pi_1..pi_N, ordered by leaf count and
/// then by first appearance in descendants().
std::vector<WeightedTree> descendant_expansion(int max_order);

struct ResumOptions {
    /// Worker threads for tree evaluation; output does not depend on it.
    int threads = 1;
};

/// pi_n = sum over labeled trees with r leaves and s vertices, r + s = n,
/// of eval_tree(tree, psi_0) / r!.
GradedSeries psi_via_descendants(int max_order, int trunc_degree, const ResumOptions &opts = {});

/// Order-by-order fixed point of psi = psi_0 + sum_n 1/(2n)! <psi,...,psi>_{2n}.
/// iterations < 0 selects ceil(N/2) + 1, after which orders 1..N are
/// stationary.
GradedSeries psi_via_picard(int max_order, int trunc_degree, int iterations = -1);

/// q_m = pi_m at t = 1.
NCPoly q_m(const GradedSeries &g, int m);
/// q_1 .. q_N.
std::vector<NCPoly> q_series(const GradedSeries &g);

struct ResidualReport {
    /// dpsi/dt - k(ad psi) u - 1/2 [w, psi], restricted to u-degree <= N.
    TSeries residual;
    /// psi at t = 0.
    NCPoly initial_value;

    bool vanishes() const { return residual.is_zero() && initial_value.is_zero(); }
};

ResidualReport ode_residual(const GradedSeries &g);

/// Every word's length equals the power of t it multiplies.
bool is_t_homogeneous(const TSeries &s);

} // namespace bchresum
