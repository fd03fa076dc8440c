#include "bchresum/kernel.hpp"

#include "bchresum/errors.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace bchresum {

std::vector<Scalar> bernoulli_table(int max_n)
{
    if (max_n < 0)
        throw DomainError("bernoulli index must be nonnegative");
    std::vector<Scalar> b(static_cast<std::size_t>(max_n) + 1);
    b[0] = Scalar(1);
    for (int n = 1; n <= max_n; ++n) {
        // C(n+1, n) B_n = -sum_{j<n} C(n+1, j) B_j
        Scalar acc;
        for (int j = 0; j < n; ++j)
            if (!b[j].is_zero())
                acc += Scalar::binomial(n + 1, j) * b[j];
        b[n] = -acc / Scalar(n + 1);
    }
    return b;
}

Scalar bernoulli(int n) { return bernoulli_table(n).back(); }

Scalar k_coeff(int two_p)
{
    if (two_p < 2 || two_p % 2 != 0)
        throw DomainError("k_coeff: index must be even and >= 2, got " + std::to_string(two_p));
    return bernoulli(two_p) / Scalar::factorial(two_p);
}

std::vector<Scalar> kernel_function_series(int max_degree)
{
    // (1 - e^{-z}) / z = sum_j (-1)^j z^j / (j+1)!
    const auto n = static_cast<std::size_t>(max_degree) + 1;
    std::vector<Scalar> denom(n);
    for (std::size_t j = 0; j < n; ++j)
        denom[j] = Scalar(j % 2 == 0 ? 1 : -1) / Scalar::factorial(static_cast<unsigned>(j + 1));

    // inverse series: inv[0] = 1, inv[m] = -sum_{j=1}^{m} denom[j] inv[m-j]
    std::vector<Scalar> inv(n);
    inv[0] = Scalar(1) / denom[0];
    for (std::size_t m = 1; m < n; ++m) {
        Scalar acc;
        for (std::size_t j = 1; j <= m; ++j)
            acc += denom[j] * inv[m - j];
        inv[m] = -acc / denom[0];
    }
    if (n > 1)
        inv[1] -= Scalar(1, 2);
    return inv;
}

bool kernel_series_check(int max_p)
{
    if (max_p < 1)
        return false;
    const auto series = kernel_function_series(2 * max_p);
    const auto b = bernoulli_table(2 * max_p);
    for (int d = 0; d <= 2 * max_p; ++d) {
        Scalar expected;
        if (d == 0)
            expected = Scalar(1);
        else if (d % 2 == 0)
            expected = b[d] / Scalar::factorial(d);
        if (series[d] != expected)
            return false;
    }
    return true;
}

KernelTable::KernelTable(int max_p) : max_p_(max_p)
{
    if (max_p < 0)
        throw DomainError("KernelTable: negative size");
    bernoulli_ = bernoulli_table(std::max(2 * max_p, 6));
    if (bernoulli_[2] != Scalar(1, 6) || bernoulli_[4] != Scalar(-1, 30) || bernoulli_[6] != Scalar(1, 42))
        throw std::logic_error("Bernoulli convention check failed (B2, B4, B6)");
    bernoulli_.resize(static_cast<std::size_t>(2 * max_p) + 1);
    k_.reserve(static_cast<std::size_t>(max_p));
    for (int p = 1; p <= max_p; ++p)
        k_.push_back(bernoulli_[2 * p] / Scalar::factorial(2 * p));
}

const Scalar &KernelTable::k(int p) const
{
    if (p < 1 || p > max_p_)
        throw DomainError("KernelTable: index p=" + std::to_string(p) + " outside 1.." +
                          std::to_string(max_p_));
    return k_[static_cast<std::size_t>(p - 1)];
}

int kernel_p_for_order(int max_order) { return std::max(1, (max_order - 1) / 2); }

const KernelTable &shared_kernel_table(int max_p)
{
    static std::mutex mutex;
    static std::unique_ptr<const KernelTable> table;
    std::lock_guard lock(mutex);
    if (!table || table->max_p() < max_p) {
        // Older references must stay valid, so superseded tables are kept.
        static std::vector<std::unique_ptr<const KernelTable>> retired;
        if (table)
            retired.push_back(std::move(table));
        table = std::make_unique<const KernelTable>(std::max(max_p, 1));
    }
    return *table;
}

TSeries psi0(int trunc_degree)
{
    if (trunc_degree < 1)
        throw DomainError("psi0: truncation degree must be >= 1");
    const NCPoly u = NCPoly::generator(Alphabet::UW, 0, trunc_degree);
    const NCPoly w = NCPoly::generator(Alphabet::UW, 1, trunc_degree);
    TSeries r(Alphabet::UW, trunc_degree);
    NCPoly nested = u;
    Scalar two_pow(1);
    for (int n = 0; n < trunc_degree; ++n) {
        r.add_term(n + 1, nested * (Scalar(1) / (Scalar::factorial(n + 1) * two_pow)));
        nested = commutator(w, nested);
        two_pow *= Scalar(2);
    }
    return r;
}

} // namespace bchresum
