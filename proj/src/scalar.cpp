#include "bchresum/scalar.hpp"

#include "bchresum/errors.hpp"

namespace bchresum {

Scalar::Scalar(long num, long den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw DomainError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw DomainError("malformed rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(mpq_class(f));
}

Scalar Scalar::binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b));
}

std::string Scalar::to_string() const
{
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Scalar::to_short_string() const
{
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return to_string();
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

} // namespace bchresum
