#include "bchresum/json_io.hpp"

#include "bchresum/errors.hpp"

namespace bchresum {

namespace {

nlohmann::ordered_json header(Alphabet a, int degree)
{
    auto letters = letters_of(a);
    nlohmann::ordered_json j;
    j["alphabet"] = {std::string(1, letters[0]), std::string(1, letters[1])};
    j["trunc_degree"] = degree;
    j["terms"] = nlohmann::ordered_json::array();
    return j;
}

Alphabet parse_alphabet(const nlohmann::json &j)
{
    auto names = j.at("alphabet").get<std::vector<std::string>>();
    if (names == std::vector<std::string>{"u", "w"})
        return Alphabet::UW;
    if (names == std::vector<std::string>{"x", "y"})
        return Alphabet::XY;
    throw ConfigError("unsupported alphabet in JSON");
}

} // namespace

nlohmann::ordered_json to_json(const NCPoly &p)
{
    auto j = header(p.alphabet(), p.trunc_degree());
    for (const auto &[w, c] : p.terms())
        j["terms"].push_back({{"word", w.to_string(p.alphabet())}, {"coeff", c.to_string()}});
    return j;
}

nlohmann::ordered_json to_json(const TSeries &s)
{
    auto j = header(s.alphabet(), s.trunc_degree());
    for (const auto &[power, c] : s.coeffs())
        for (const auto &[w, x] : c.terms())
            j["terms"].push_back(
                {{"word", w.to_string(s.alphabet())}, {"t_power", power}, {"coeff", x.to_string()}});
    return j;
}

NCPoly poly_from_json(const nlohmann::json &j)
{
    Alphabet a = parse_alphabet(j);
    NCPoly p(a, j.at("trunc_degree").get<int>());
    for (const auto &t : j.at("terms"))
        p.add_term(Word::parse(a, t.at("word").get<std::string>()),
                   Scalar::parse(t.at("coeff").get<std::string>()));
    return p;
}

TSeries tseries_from_json(const nlohmann::json &j)
{
    Alphabet a = parse_alphabet(j);
    const int degree = j.at("trunc_degree").get<int>();
    TSeries s(a, degree);
    for (const auto &t : j.at("terms")) {
        NCPoly c(a, degree);
        c.add_term(Word::parse(a, t.at("word").get<std::string>()),
                   Scalar::parse(t.at("coeff").get<std::string>()));
        s.add_term(t.value("t_power", 0), c);
    }
    return s;
}

} // namespace bchresum
