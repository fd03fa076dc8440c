#include "bchresum/ncpoly.hpp"

#include "bchresum/errors.hpp"

#include <bit>
#include <sstream>

namespace bchresum {

std::array<char, 2> letters_of(Alphabet a)
{
    return a == Alphabet::UW ? std::array<char, 2>{'u', 'w'} : std::array<char, 2>{'x', 'y'};
}

std::string_view alphabet_name(Alphabet a) { return a == Alphabet::UW ? "uw" : "xy"; }

Word Word::parse(Alphabet alphabet, std::string_view text)
{
    if (text.size() > static_cast<std::size_t>(kMaxWordLength))
        throw ConfigError("word too long: " + std::string(text));
    auto letters = letters_of(alphabet);
    Word w;
    for (char c : text) {
        int bit;
        if (c == letters[0])
            bit = 0;
        else if (c == letters[1])
            bit = 1;
        else
            throw ConfigError(std::string("letter '") + c + "' not in alphabet " +
                              std::string(alphabet_name(alphabet)));
        w.bits = (w.bits << 1) | static_cast<std::uint64_t>(bit);
        ++w.length;
    }
    return w;
}

int Word::count(int which) const
{
    int ones = std::popcount(bits);
    return which == 1 ? ones : length - ones;
}

std::string Word::to_string(Alphabet alphabet) const
{
    auto letters = letters_of(alphabet);
    std::string s;
    s.reserve(length);
    for (int i = 0; i < length; ++i)
        s.push_back(letters[at(i)]);
    return s;
}

Word operator+(Word a, Word b)
{
    if (a.length + b.length > kMaxWordLength)
        throw ConfigError("word length overflow");
    return {(a.bits << b.length) | b.bits, static_cast<std::uint8_t>(a.length + b.length)};
}

NCPoly::NCPoly(Alphabet alphabet, int trunc_degree) : alphabet_(alphabet), degree_(trunc_degree)
{
    if (trunc_degree < 0 || trunc_degree > kMaxWordLength)
        throw ConfigError("truncation degree out of range: " + std::to_string(trunc_degree));
}

NCPoly NCPoly::unit(Alphabet alphabet, int trunc_degree)
{
    return monomial(alphabet, trunc_degree, Word::empty(), Scalar(1));
}

NCPoly NCPoly::generator(Alphabet alphabet, int letter, int trunc_degree)
{
    return monomial(alphabet, trunc_degree, Word::letter(letter), Scalar(1));
}

NCPoly NCPoly::monomial(Alphabet alphabet, int trunc_degree, Word w, Scalar c)
{
    NCPoly p(alphabet, trunc_degree);
    p.add_term(w, c);
    return p;
}

Scalar NCPoly::coeff(Word w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void NCPoly::add_term(Word w, const Scalar &c)
{
    if (w.length > degree_ || c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NCPoly NCPoly::truncated(int new_degree) const
{
    if (new_degree > degree_)
        throw ConfigError("cannot raise truncation degree from " + std::to_string(degree_) + " to " +
                          std::to_string(new_degree));
    NCPoly r(alphabet_, new_degree);
    for (const auto &[w, c] : terms_) {
        if (w.length > new_degree)
            break;
        r.terms_.emplace_hint(r.terms_.end(), w, c);
    }
    return r;
}

void NCPoly::check_compatible(const NCPoly &o) const
{
    if (alphabet_ != o.alphabet_)
        throw ConfigError("alphabet mismatch");
    if (degree_ != o.degree_)
        throw ConfigError("truncation degree mismatch: " + std::to_string(degree_) + " vs " +
                          std::to_string(o.degree_));
}

NCPoly &NCPoly::operator+=(const NCPoly &o)
{
    check_compatible(o);
    for (const auto &[w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o)
{
    check_compatible(o);
    for (const auto &[w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NCPoly &NCPoly::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[w, v] : terms_)
        v *= c;
    return *this;
}

NCPoly NCPoly::operator-() const
{
    NCPoly r = *this;
    for (auto &[w, v] : r.terms_)
        v = -v;
    return r;
}

NCPoly operator*(const NCPoly &a, const NCPoly &b)
{
    a.check_compatible(b);
    NCPoly r(a.alphabet_, a.degree_);
    for (const auto &[wa, ca] : a.terms_) {
        int room = a.degree_ - wa.length;
        if (room < 0)
            break;
        for (const auto &[wb, cb] : b.terms_) {
            // terms are ordered by length first
            if (wb.length > room)
                break;
            r.add_term(wa + wb, ca * cb);
        }
    }
    return r;
}

std::string NCPoly::to_text() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : terms_) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        std::string word = w.length == 0 ? "1" : w.to_string(alphabet_);
        if (mag == Scalar(1))
            os << word;
        else if (w.length == 0)
            os << mag.to_short_string();
        else
            os << mag.to_short_string() << ' ' << word;
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const NCPoly &p) { return os << p.to_text(); }

NCPoly poly_add(const NCPoly &a, const NCPoly &b) { return a + b; }

NCPoly poly_mul(const NCPoly &a, const NCPoly &b) { return a * b; }

NCPoly commutator(const NCPoly &a, const NCPoly &b) { return a * b - b * a; }

NCPoly ad_pow(const NCPoly &a, int n, const NCPoly &b)
{
    if (n < 0)
        throw DomainError("ad_pow with negative exponent");
    NCPoly r = b;
    for (int i = 0; i < n && !r.is_zero(); ++i)
        r = commutator(a, r);
    return r;
}

NCPoly exp_truncated(const NCPoly &a)
{
    if (!a.constant_term().is_zero())
        throw DomainError("exp_truncated: argument has a nonzero constant term");
    NCPoly sum = NCPoly::unit(a.alphabet(), a.trunc_degree());
    NCPoly power = sum;
    for (int j = 1; j <= a.trunc_degree(); ++j) {
        power = power * a;
        power *= Scalar(1, j);
        if (power.is_zero())
            break;
        sum += power;
    }
    return sum;
}

NCPoly log_truncated(const NCPoly &a)
{
    if (a.constant_term() != Scalar(1))
        throw DomainError("log_truncated: constant term must be 1");
    NCPoly r = a - NCPoly::unit(a.alphabet(), a.trunc_degree());
    NCPoly sum(a.alphabet(), a.trunc_degree());
    NCPoly power = NCPoly::unit(a.alphabet(), a.trunc_degree());
    for (int j = 1; j <= a.trunc_degree(); ++j) {
        power = power * r;
        if (power.is_zero())
            break;
        sum += power * Scalar(j % 2 == 1 ? 1 : -1, j);
    }
    return sum;
}

NCPoly substitute(const NCPoly &a, const NCPoly &image0, const NCPoly &image1)
{
    if (image0.alphabet() != image1.alphabet() || image0.trunc_degree() != image1.trunc_degree())
        throw ConfigError("substitute: letter images must share alphabet and truncation degree");
    const Alphabet target = image0.alphabet();
    const int degree = image0.trunc_degree();

    // Image of every prefix, built incrementally; words arrive in
    // length-then-lex order so the prefix is always cached first.
    std::map<Word, NCPoly> cache;
    cache.emplace(Word::empty(), NCPoly::unit(target, degree));
    auto image_of = [&](auto &&self, Word w) -> const NCPoly & {
        if (auto it = cache.find(w); it != cache.end())
            return it->second;
        Word prefix{w.bits >> 1, static_cast<std::uint8_t>(w.length - 1)};
        NCPoly img = self(self, prefix) * ((w.bits & 1U) ? image1 : image0);
        return cache.emplace(w, std::move(img)).first->second;
    };

    NCPoly r(target, degree);
    for (const auto &[w, c] : a.terms()) {
        r += image_of(image_of, w) * c;
    }
    return r;
}

NCPoly homogeneous_part(const NCPoly &a, int total_degree)
{
    NCPoly r(a.alphabet(), a.trunc_degree());
    for (const auto &[w, c] : a.terms())
        if (w.length == total_degree)
            r.add_term(w, c);
    return r;
}

NCPoly by_multidegree(const NCPoly &a, int degree0, int degree1)
{
    NCPoly r(a.alphabet(), a.trunc_degree());
    for (const auto &[w, c] : a.terms())
        if (w.count(0) == degree0 && w.count(1) == degree1)
            r.add_term(w, c);
    return r;
}

NCPoly letter_degree_part(const NCPoly &a, int letter, int degree)
{
    NCPoly r(a.alphabet(), a.trunc_degree());
    for (const auto &[w, c] : a.terms())
        if (w.count(letter) == degree)
            r.add_term(w, c);
    return r;
}

} // namespace bchresum
