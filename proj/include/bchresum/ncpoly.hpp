#pragma once

#include "bchresum/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace bchresum {

/// Two-letter alphabets. UW stands for (x+y, x-y); XY for the original
/// generators.
enum class Alphabet : std::uint8_t { UW, XY };

std::array<char, 2> letters_of(Alphabet a);
std::string_view alphabet_name(Alphabet a);

/// Longest word a Word can hold.
inline constexpr int kMaxWordLength = 62;

/// Word over a two-letter alphabet, letters encoded as bits (0 = first
/// letter). The first letter sits in the most significant position, so the
/// natural ordering is length-then-lexicographic.
struct Word {
    std::uint64_t bits = 0;
    std::uint8_t length = 0;

    static Word empty() { return {}; }
    static Word letter(int which) { return {static_cast<std::uint64_t>(which & 1), 1}; }
    /// Parses a string of alphabet letters, e.g. "wu"; "" is the empty word.
    static Word parse(Alphabet alphabet, std::string_view text);

    int at(int i) const { return static_cast<int>((bits >> (length - 1 - i)) & 1U); }
    int count(int which) const;
    std::string to_string(Alphabet alphabet) const;

    friend Word operator+(Word a, Word b);

    friend bool operator==(const Word &, const Word &) = default;
    friend std::strong_ordering operator<=>(const Word &a, const Word &b)
    {
        if (auto c = a.length <=> b.length; c != 0)
            return c;
        return a.bits <=> b.bits;
    }
};

/// Element of the free associative algebra on two generators with rational
/// coefficients, truncated at words of length trunc_degree().
class NCPoly {
  public:
    using TermMap = std::map<Word, Scalar>;

    NCPoly(Alphabet alphabet, int trunc_degree);

    static NCPoly unit(Alphabet alphabet, int trunc_degree);
    static NCPoly generator(Alphabet alphabet, int letter, int trunc_degree);
    static NCPoly monomial(Alphabet alphabet, int trunc_degree, Word w, Scalar c);

    Alphabet alphabet() const { return alphabet_; }
    int trunc_degree() const { return degree_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coeff(Word w) const;
    Scalar coeff(std::string_view word) const { return coeff(Word::parse(alphabet_, word)); }
    Scalar constant_term() const { return coeff(Word::empty()); }

    /// Adds c to the coefficient of w; words longer than the truncation are
    /// dropped and zero results are erased.
    void add_term(Word w, const Scalar &c);

    /// Drops every word longer than new_degree (which must not exceed the
    /// current truncation).
    NCPoly truncated(int new_degree) const;

    NCPoly &operator+=(const NCPoly &o);
    NCPoly &operator-=(const NCPoly &o);
    NCPoly &operator*=(const Scalar &c);
    NCPoly operator-() const;

    friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
    friend NCPoly operator*(const NCPoly &a, const NCPoly &b);
    friend NCPoly operator*(NCPoly a, const Scalar &c) { return a *= c; }
    friend NCPoly operator*(const Scalar &c, NCPoly a) { return a *= c; }

    friend bool operator==(const NCPoly &, const NCPoly &) = default;

    /// Human-readable form such as "u + 1/4 wu - 1/4 uw".
    std::string to_text() const;

  private:
    void check_compatible(const NCPoly &o) const;

    Alphabet alphabet_;
    int degree_;
    TermMap terms_;
};

std::ostream &operator<<(std::ostream &os, const NCPoly &p);

NCPoly poly_add(const NCPoly &a, const NCPoly &b);
NCPoly poly_mul(const NCPoly &a, const NCPoly &b);
NCPoly commutator(const NCPoly &a, const NCPoly &b);
/// [a,[a,...[a,b]...]] with n brackets; n = 0 returns b.
NCPoly ad_pow(const NCPoly &a, int n, const NCPoly &b);

/// sum_{j<=D} a^j / j!; a must have no constant term.
NCPoly exp_truncated(const NCPoly &a);
/// sum_{j<=D} (-1)^{j+1} (a-1)^j / j; a must have constant term 1.
NCPoly log_truncated(const NCPoly &a);

/// Algebra homomorphism sending the first letter to image0 and the second to
/// image1. The result lives in the images' alphabet and truncation.
NCPoly substitute(const NCPoly &a, const NCPoly &image0, const NCPoly &image1);

NCPoly homogeneous_part(const NCPoly &a, int total_degree);
NCPoly by_multidegree(const NCPoly &a, int degree0, int degree1);
/// Terms whose count of `letter` equals `degree`.
NCPoly letter_degree_part(const NCPoly &a, int letter, int degree);

} // namespace bchresum
