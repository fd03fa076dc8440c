#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace bchresum {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long value) : q_(value) {}
    Scalar(int value) : q_(value) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "num/den" or "num".
    static Scalar parse(std::string_view text);

    static Scalar factorial(unsigned n);
    static Scalar binomial(unsigned n, unsigned k);

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Canonical "num/den" form; the denominator is always printed.
    std::string to_string() const;
    /// "num" for integers, "num/den" otherwise.
    std::string to_short_string() const;

    Scalar operator-() const { return Scalar(mpq_class(-q_)); }
    Scalar &operator+=(const Scalar &o) { q_ += o.q_; return *this; }
    Scalar &operator-=(const Scalar &o) { q_ -= o.q_; return *this; }
    Scalar &operator*=(const Scalar &o) { q_ *= o.q_; return *this; }
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

    const mpq_class &raw() const { return q_; }

  private:
    mpq_class q_{0};
};

} // namespace bchresum
