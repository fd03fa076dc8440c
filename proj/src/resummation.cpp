#include "bchresum/resummation.hpp"

#include "bchresum/errors.hpp"
#include "bchresum/kernel.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <unordered_map>

namespace bchresum {

namespace {

TSeries u_series(int degree) { return TSeries::monomial(0, NCPoly::generator(Alphabet::UW, 0, degree)); }

const Scalar &kernel_coeff(int two_n)
{
    if (two_n < 2 || two_n % 2 != 0)
        throw DomainError("vertex arity must be even and >= 2, got " + std::to_string(two_n));
    return shared_kernel_table(two_n / 2).k(two_n / 2);
}

// Sum over distinct orderings of the grouped arguments of
// ad a_{s1} ... ad a_{sk} (current); the innermost bracket is chosen first.
void symmetrized_chain(std::span<const TSeries> reps, std::vector<int> &remaining, const TSeries &current,
                       TSeries &acc)
{
    bool any = false;
    for (std::size_t g = 0; g < reps.size(); ++g) {
        if (remaining[g] == 0)
            continue;
        any = true;
        TSeries next = tseries_commutator(reps[g], current);
        if (next.is_zero())
            continue;
        --remaining[g];
        symmetrized_chain(reps, remaining, next, acc);
        ++remaining[g];
    }
    if (!any)
        acc += current;
}

TSeries eval_memo(const Tree &tree, const TSeries &leaf, std::unordered_map<std::string, TSeries> &memo)
{
    if (tree.is_leaf())
        return leaf;
    const std::string key = tree.shape_key();
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    std::vector<TSeries> args;
    args.reserve(tree.children().size());
    for (const auto &c : tree.children())
        args.push_back(eval_memo(c, leaf, memo));
    TSeries value = vertex(tree.arity(), args);
    memo.emplace(key, value);
    return value;
}

void check_order_degree(int max_order, int trunc_degree)
{
    if (max_order < 1)
        throw ConfigError("max order must be >= 1");
    if (trunc_degree < 1)
        throw ConfigError("truncation degree must be >= 1");
}

GradedSeries empty_graded(int max_order, int trunc_degree)
{
    GradedSeries g;
    g.trunc_degree = trunc_degree;
    g.max_order = max_order;
    g.parts.assign(static_cast<std::size_t>(max_order), TSeries(Alphabet::UW, trunc_degree));
    return g;
}

} // namespace

TSeries conjugated_integral(const TSeries &f)
{
    return apply_exp_ad_w(tseries_integrate(apply_exp_ad_w(f, Scalar(-1, 2))), Scalar(1, 2));
}

TSeries vertex_g(int two_n, const TSeries &v)
{
    const Scalar &k = kernel_coeff(two_n);
    TSeries chain = u_series(v.trunc_degree());
    for (int i = 0; i < two_n && !chain.is_zero(); ++i)
        chain = tseries_commutator(v, chain);
    return conjugated_integral(chain) * k;
}

TSeries vertex(int two_n, std::span<const TSeries> args)
{
    const Scalar &k = kernel_coeff(two_n);
    if (static_cast<int>(args.size()) != two_n)
        throw DomainError("vertex of arity " + std::to_string(two_n) + " given " +
                          std::to_string(args.size()) + " arguments");
    const int degree = args.front().trunc_degree();

    std::vector<TSeries> reps;
    std::vector<int> counts;
    for (const auto &a : args) {
        if (a.is_zero())
            return TSeries(Alphabet::UW, degree);
        auto it = std::find(reps.begin(), reps.end(), a);
        if (it == reps.end()) {
            reps.push_back(a);
            counts.push_back(1);
        } else {
            ++counts[static_cast<std::size_t>(it - reps.begin())];
        }
    }

    TSeries sum(Alphabet::UW, degree);
    std::vector<int> remaining = counts;
    symmetrized_chain(reps, remaining, u_series(degree), sum);

    // each distinct ordering stands for prod(count!) permutations
    Scalar multiplicity(1);
    for (int c : counts)
        multiplicity *= Scalar::factorial(static_cast<unsigned>(c));
    return conjugated_integral(sum) * (k * multiplicity);
}

TSeries eval_tree(const Tree &tree, const TSeries &leaf_value)
{
    std::unordered_map<std::string, TSeries> memo;
    return eval_memo(tree, leaf_value, memo);
}

const TSeries &GradedSeries::part(int n) const
{
    if (n < 1 || n > max_order)
        throw DomainError("order " + std::to_string(n) + " outside computed range 1.." +
                          std::to_string(max_order));
    return parts[static_cast<std::size_t>(n - 1)];
}

TSeries GradedSeries::total() const
{
    TSeries s(Alphabet::UW, trunc_degree);
    for (const auto &p : parts)
        s += p;
    return s;
}

std::vector<WeightedTree> descendant_expansion(int max_order)
{
    // All leaves carry the same value, so a tree's value depends only on its
    // shape; labelings of one shape are merged.
    std::vector<WeightedTree> shapes;
    for (int r = 1; r <= max_order; ++r) {
        std::unordered_map<std::string, std::size_t> index;
        const std::size_t first = shapes.size();
        for (auto &t : descendants(r, max_order - r)) {
            auto [it, inserted] = index.try_emplace(t.shape_key(), shapes.size());
            if (inserted)
                shapes.push_back({t, Scalar(), r + t.vertex_count(), 0});
            ++shapes[it->second].labelings;
        }
        for (std::size_t i = first; i < shapes.size(); ++i)
            shapes[i].weight = Scalar(shapes[i].labelings) / Scalar::factorial(static_cast<unsigned>(r));
    }
    return shapes;
}

GradedSeries psi_via_descendants(int max_order, int trunc_degree, const ResumOptions &opts)
{
    check_order_degree(max_order, trunc_degree);
    const TSeries leaf = psi0(trunc_degree);
    GradedSeries g = empty_graded(max_order, trunc_degree);

    const auto shapes = descendant_expansion(max_order);

    std::vector<TSeries> values(shapes.size(), TSeries(Alphabet::UW, trunc_degree));
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        std::unordered_map<std::string, TSeries> memo;
        for (std::size_t i = 0; i < shapes.size(); ++i)
            values[i] = eval_memo(shapes[i].tree, leaf, memo);
    } else {
        std::vector<std::future<void>> jobs;
        for (int w = 0; w < threads; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                std::unordered_map<std::string, TSeries> memo;
                for (std::size_t i = static_cast<std::size_t>(w); i < shapes.size();
                     i += static_cast<std::size_t>(threads))
                    values[i] = eval_memo(shapes[i].tree, leaf, memo);
            }));
        }
        for (auto &j : jobs)
            j.get();
    }

    for (std::size_t i = 0; i < shapes.size(); ++i)
        g.parts[static_cast<std::size_t>(shapes[i].order - 1)] += values[i] * shapes[i].weight;
    return g;
}

namespace {

// Nondecreasing tuples of orders (each an index with a nonzero part) of
// length `slots` whose sum stays <= max_sum.
void order_tuples(const std::vector<int> &orders, int slots, int max_sum, std::size_t start,
                  std::vector<int> &cur, int sum, std::vector<std::vector<int>> &out)
{
    if (static_cast<int>(cur.size()) == slots) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < orders.size(); ++i) {
        int remaining_slots = slots - static_cast<int>(cur.size()) - 1;
        // orders are sorted, so the cheapest completion repeats orders[i]
        if (sum + orders[i] * (remaining_slots + 1) > max_sum)
            break;
        cur.push_back(orders[i]);
        order_tuples(orders, slots, max_sum, i, cur, sum + orders[i], out);
        cur.pop_back();
    }
}

} // namespace

GradedSeries psi_via_picard(int max_order, int trunc_degree, int iterations)
{
    check_order_degree(max_order, trunc_degree);
    if (iterations < 0)
        iterations = (max_order + 1) / 2 + 1;
    const TSeries seed = psi0(trunc_degree);
    GradedSeries cur = empty_graded(max_order, trunc_degree);

    for (int it = 0; it < iterations; ++it) {
        GradedSeries next = empty_graded(max_order, trunc_degree);
        next.parts[0] = seed;
        std::vector<int> live;
        for (int n = 1; n <= max_order; ++n)
            if (!cur.part(n).is_zero())
                live.push_back(n);

        for (int two_n = 2; two_n + 1 <= max_order; two_n += 2) {
            std::vector<std::vector<int>> tuples;
            std::vector<int> scratch;
            order_tuples(live, two_n, max_order - 1, 0, scratch, 0, tuples);
            for (const auto &tuple : tuples) {
                std::vector<TSeries> args;
                int order = 1;
                for (int o : tuple) {
                    args.push_back(cur.part(o));
                    order += o;
                }
                // (1/(2n)!) * (2n)!/prod(c!) ordered tuples per multiset
                Scalar weight(1);
                for (std::size_t i = 0; i < tuple.size();) {
                    std::size_t j = i;
                    while (j < tuple.size() && tuple[j] == tuple[i])
                        ++j;
                    weight /= Scalar::factorial(static_cast<unsigned>(j - i));
                    i = j;
                }
                next.parts[static_cast<std::size_t>(order - 1)] += vertex(two_n, args) * weight;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

NCPoly q_m(const GradedSeries &g, int m)
{
    if (m < 1 || m > g.max_order)
        throw DomainError("q_" + std::to_string(m) + " requested but only orders 1.." +
                          std::to_string(g.max_order) + " were computed");
    return tseries_eval_t1(g.part(m));
}

std::vector<NCPoly> q_series(const GradedSeries &g)
{
    std::vector<NCPoly> out;
    for (int m = 1; m <= g.max_order; ++m)
        out.push_back(q_m(g, m));
    return out;
}

ResidualReport ode_residual(const GradedSeries &g)
{
    const int degree = g.trunc_degree;
    const TSeries psi = g.total();
    const TSeries u = u_series(degree);
    const TSeries w = TSeries::monomial(0, NCPoly::generator(Alphabet::UW, 1, degree));

    TSeries rhs = u + tseries_commutator(w, psi) * Scalar(1, 2);
    TSeries chain = u;
    for (int p = 1; 2 * p + 1 <= g.max_order; ++p) {
        chain = tseries_commutator(psi, tseries_commutator(psi, chain));
        rhs += chain * k_coeff(2 * p);
    }
    TSeries residual = tseries_derivative(psi) - rhs;
    return {letter_degree_at_most(residual, 0, g.max_order), psi.coeff(0)};
}

bool is_t_homogeneous(const TSeries &s)
{
    for (const auto &[p, c] : s.coeffs())
        for (const auto &[w, x] : c.terms())
            if (w.length != p)
                return false;
    return true;
}

} // namespace bchresum
