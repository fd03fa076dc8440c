#include "bchresum/oracle.hpp"

#include "bchresum/errors.hpp"
#include "bchresum/resummation.hpp"

#include <set>

namespace bchresum {

NCPoly bch_direct(int trunc_degree)
{
    if (trunc_degree < 1)
        throw ConfigError("bch_direct: truncation degree must be >= 1");
    const NCPoly x = NCPoly::generator(Alphabet::XY, 0, trunc_degree);
    const NCPoly y = NCPoly::generator(Alphabet::XY, 1, trunc_degree);
    return log_truncated(exp_truncated(x) * exp_truncated(y));
}

NCPoly qseries_to_xy(const std::vector<NCPoly> &q, int trunc_degree)
{
    const NCPoly x = NCPoly::generator(Alphabet::XY, 0, trunc_degree);
    const NCPoly y = NCPoly::generator(Alphabet::XY, 1, trunc_degree);
    const NCPoly sum = x + y;
    const NCPoly diff = x - y;
    NCPoly out(Alphabet::XY, trunc_degree);
    for (const auto &qm : q) {
        if (qm.alphabet() != Alphabet::UW)
            throw ConfigError("qseries_to_xy expects polynomials over {u, w}");
        out += substitute(qm, sum, diff);
    }
    return out;
}

nlohmann::ordered_json ComparisonReport::to_json() const
{
    nlohmann::ordered_json j;
    j["trunc_degree"] = trunc_degree;
    j["max_order"] = max_order;
    j["matched"] = matched;
    if (first_discrepancy) {
        j["first_discrepancy"] = {{"word", first_discrepancy->word},
                                  {"expected", first_discrepancy->expected.to_string()},
                                  {"actual", first_discrepancy->actual.to_string()}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    j["per_degree_term_counts"] = per_degree_term_counts;
    return j;
}

ComparisonReport compare_with_oracle(const std::vector<NCPoly> &q, int max_order, int trunc_degree)
{
    ComparisonReport report;
    report.trunc_degree = trunc_degree;
    report.max_order = max_order;

    const NCPoly expected = bch_direct(trunc_degree);
    const NCPoly actual = qseries_to_xy(q, trunc_degree);

    report.per_degree_term_counts.assign(static_cast<std::size_t>(trunc_degree) + 1, 0);
    for (const auto &[w, c] : expected.terms())
        ++report.per_degree_term_counts[w.length];

    std::set<Word> words;
    for (const auto &[w, c] : expected.terms())
        words.insert(w);
    for (const auto &[w, c] : actual.terms())
        words.insert(w);
    for (const Word &w : words) {
        Scalar e = expected.coeff(w), a = actual.coeff(w);
        if (e != a) {
            report.first_discrepancy = Discrepancy{w.to_string(Alphabet::XY), e, a};
            break;
        }
    }
    report.matched = !report.first_discrepancy.has_value();
    return report;
}

ComparisonReport verify(int max_order, int trunc_degree, int threads)
{
    if (trunc_degree < 1)
        throw ConfigError("verify: degree must be >= 1");
    if (max_order < trunc_degree)
        throw ConfigError("verify: max order (" + std::to_string(max_order) +
                          ") must be at least the degree (" + std::to_string(trunc_degree) +
                          "); q_m has u-degree m, so every q_m with m <= D is needed");
    const auto g = psi_via_descendants(max_order, trunc_degree, {threads});
    return compare_with_oracle(q_series(g), max_order, trunc_degree);
}

} // namespace bchresum
