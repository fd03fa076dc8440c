#pragma once

#include "bchresum/scalar.hpp"
#include "bchresum/tseries.hpp"

#include <vector>

namespace bchresum {

/// B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
Scalar bernoulli(int n);
/// B_0 ... B_max_n.
std::vector<Scalar> bernoulli_table(int max_n);

/// k_{2p} = B_{2p} / (2p)!, the coefficients of
/// k(z) = z/(1 - e^{-z}) - z/2 = 1 + sum_p k_{2p} z^{2p}.
Scalar k_coeff(int two_p);

/// Checks the expansion of z/(1 - e^{-z}) - z/2 against 1 + sum k_{2p} z^{2p}
/// through degree 2P using univariate power-series division.
bool kernel_series_check(int max_p);

/// Coefficients of z/(1 - e^{-z}) - z/2 through z^max_degree, computed by
/// series inversion (no Bernoulli numbers involved).
std::vector<Scalar> kernel_function_series(int max_degree);

/// Cached Bernoulli numbers and kernel coefficients for p = 1..P.
class KernelTable {
  public:
    /// Throws std::logic_error if B_2, B_4, B_6 do not come out as
    /// 1/6, -1/30, 1/42.
    explicit KernelTable(int max_p);

    int max_p() const { return max_p_; }
    /// k_{2p}; p must lie in 1..max_p().
    const Scalar &k(int p) const;
    const std::vector<Scalar> &bernoulli() const { return bernoulli_; }

  private:
    int max_p_;
    std::vector<Scalar> k_;
    std::vector<Scalar> bernoulli_;
};

/// Largest p needed to reach k-order N: a 2p-ary vertex first appears at
/// order 2p + 1.
int kernel_p_for_order(int max_order);

/// Process-wide table covering at least max_p; grows on demand. Thread-safe.
const KernelTable &shared_kernel_table(int max_p);

/// psi_0 = sum_{n=0}^{D-1} t^{n+1} / ((n+1)! 2^n) (ad w)^n u, truncated at D.
TSeries psi0(int trunc_degree);

} // namespace bchresum
