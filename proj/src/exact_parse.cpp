#include <cstdlib>
#include <stdexcept>
#include <string>

#include "apath/quad_number.hpp"
#include "apath/rational.hpp"

namespace apath {

namespace {

std::string strip(const std::string& s) {
    std::string r;
    for (char c : s)
        if (c != ' ' && c != '\t') r += c;
    return r;
}

long long parse_ll(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer literal: " + s);
    return v;
}

}  // namespace

Rational Rational::parse(const std::string& raw) {
    std::string s = strip(raw);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_ll(s));
    return Rational(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
}

QuadNumber QuadNumber::parse(const std::string& raw, long long d) {
    std::string s = strip(raw);
    if (s.empty()) throw std::invalid_argument("empty quadratic literal");

    // Split at the '+'/'-' that separates the rational and sqrt terms.
    // A leading sign belongs to the first term.
    auto term_of = [d](const std::string& term) -> QuadNumber {
        auto star = term.find("*sqrt(");
        if (star == std::string::npos) {
            if (term.find("sqrt(") == 0) {
                // bare "sqrt(d)" with implicit coefficient 1
                std::string inside = term.substr(5, term.size() - 6);
                if (parse_ll(inside) != d) throw std::invalid_argument("radicand mismatch: " + term);
                return QuadNumber::sqrt_d(d);
            }
            return QuadNumber::rational(Rational::parse(term), d);
        }
        if (term.back() != ')') throw std::invalid_argument("bad sqrt term: " + term);
        std::string coeff = term.substr(0, star);
        std::string inside = term.substr(star + 6, term.size() - star - 7);
        if (parse_ll(inside) != d) throw std::invalid_argument("radicand mismatch: " + term);
        return QuadNumber(Rational(0), Rational::parse(coeff), d);
    };

    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-' &&
            s.find("sqrt(", 0) != 0) {
            // Make sure we are not splitting inside "sqrt(...)".
            auto open = s.find('(');
            if (open != std::string::npos && i > open) continue;
            QuadNumber a = term_of(s.substr(0, i));
            std::string rest = s.substr(s[i] == '+' ? i + 1 : i);
            QuadNumber b = term_of(rest);
            return a + b;
        }
    }
    return term_of(s);
}

}  // namespace apath
