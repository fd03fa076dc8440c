#include "bchresum/tseries.hpp"

#include "bchresum/errors.hpp"

#include <sstream>

namespace bchresum {

TSeries::TSeries(Alphabet alphabet, int trunc_degree) : alphabet_(alphabet), degree_(trunc_degree)
{
    if (trunc_degree < 0 || trunc_degree > kMaxWordLength)
        throw ConfigError("truncation degree out of range: " + std::to_string(trunc_degree));
}

TSeries TSeries::monomial(int power, NCPoly c)
{
    TSeries r(c.alphabet(), c.trunc_degree());
    r.add_term(power, c);
    return r;
}

std::size_t TSeries::term_count() const
{
    std::size_t n = 0;
    for (const auto &[p, c] : coeffs_)
        n += c.size();
    return n;
}

NCPoly TSeries::coeff(int power) const
{
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? zero_poly() : it->second;
}

void TSeries::add_term(int power, const NCPoly &c)
{
    if (power < 0)
        throw DomainError("negative power of t");
    if (c.alphabet() != alphabet_ || c.trunc_degree() != degree_)
        throw ConfigError("TSeries coefficient has mismatched alphabet or degree");
    if (c.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

void TSeries::check_compatible(const TSeries &o) const
{
    if (alphabet_ != o.alphabet_)
        throw ConfigError("alphabet mismatch");
    if (degree_ != o.degree_)
        throw ConfigError("truncation degree mismatch: " + std::to_string(degree_) + " vs " +
                          std::to_string(o.degree_));
}

TSeries &TSeries::operator+=(const TSeries &o)
{
    check_compatible(o);
    for (const auto &[p, c] : o.coeffs_)
        add_term(p, c);
    return *this;
}

TSeries &TSeries::operator-=(const TSeries &o)
{
    check_compatible(o);
    for (const auto &[p, c] : o.coeffs_)
        add_term(p, -c);
    return *this;
}

TSeries &TSeries::operator*=(const Scalar &s)
{
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto &[p, c] : coeffs_)
        c *= s;
    return *this;
}

TSeries TSeries::operator-() const
{
    TSeries r = *this;
    for (auto &[p, c] : r.coeffs_)
        c = -c;
    return r;
}

TSeries operator*(const TSeries &a, const TSeries &b)
{
    a.check_compatible(b);
    TSeries r(a.alphabet_, a.degree_);
    for (const auto &[pa, ca] : a.coeffs_)
        for (const auto &[pb, cb] : b.coeffs_)
            r.add_term(pa + pb, ca * cb);
    return r;
}

std::string TSeries::to_text() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[p, c] : coeffs_) {
        if (!first)
            os << " + ";
        first = false;
        if (p == 0)
            os << '(' << c.to_text() << ')';
        else if (p == 1)
            os << "t (" << c.to_text() << ')';
        else
            os << "t^" << p << " (" << c.to_text() << ')';
    }
    return os.str();
}

TSeries tseries_mul(const TSeries &a, const TSeries &b) { return a * b; }

TSeries tseries_commutator(const TSeries &a, const TSeries &b) { return a * b - b * a; }

TSeries tseries_integrate(const TSeries &a)
{
    TSeries r(a.alphabet(), a.trunc_degree());
    for (const auto &[p, c] : a.coeffs())
        r.add_term(p + 1, c * Scalar(1, p + 1));
    return r;
}

TSeries tseries_derivative(const TSeries &a)
{
    TSeries r(a.alphabet(), a.trunc_degree());
    for (const auto &[p, c] : a.coeffs())
        if (p > 0)
            r.add_term(p - 1, c * Scalar(p));
    return r;
}

NCPoly tseries_eval_t1(const TSeries &a)
{
    NCPoly r = a.zero_poly();
    for (const auto &[p, c] : a.coeffs())
        r += c;
    return r;
}

TSeries apply_exp_ad_w(const TSeries &v, const Scalar &s)
{
    if (s.is_zero())
        return v;
    const NCPoly w = NCPoly::generator(v.alphabet(), 1, v.trunc_degree());
    TSeries r(v.alphabet(), v.trunc_degree());
    for (const auto &[p, c] : v.coeffs()) {
        NCPoly nested = c;
        Scalar weight(1);
        for (int j = 0; !nested.is_zero(); ++j) {
            r.add_term(p + j, nested * weight);
            nested = commutator(w, nested);
            weight *= s;
            weight /= Scalar(j + 1);
        }
    }
    return r;
}

TSeries letter_degree_part(const TSeries &a, int letter, int degree)
{
    TSeries r(a.alphabet(), a.trunc_degree());
    for (const auto &[p, c] : a.coeffs())
        r.add_term(p, letter_degree_part(c, letter, degree));
    return r;
}

TSeries letter_degree_at_most(const TSeries &a, int letter, int max_degree)
{
    TSeries r(a.alphabet(), a.trunc_degree());
    for (const auto &[p, c] : a.coeffs()) {
        NCPoly kept = a.zero_poly();
        for (const auto &[w, x] : c.terms())
            if (w.count(letter) <= max_degree)
                kept.add_term(w, x);
        r.add_term(p, kept);
    }
    return r;
}

TSeries truncated(const TSeries &a, int new_degree)
{
    TSeries r(a.alphabet(), new_degree);
    for (const auto &[p, c] : a.coeffs())
        r.add_term(p, c.truncated(new_degree));
    return r;
}

} // namespace bchresum
