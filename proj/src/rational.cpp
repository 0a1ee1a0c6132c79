#include "srs/rational.hpp"

#include <cctype>
#include <sstream>

namespace srs {

namespace {

Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad number: " + s);
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad number: " + s);
    return Int(s);
}

}  // namespace

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Int p = parse_int(text.substr(0, slash));
        Int q = parse_int(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rat(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rat(parse_int(text));
    // decimal notation, possibly with an exponent
    auto exp_pos = text.find_first_of("eE");
    std::string mantissa = text.substr(0, exp_pos);
    long long exponent = 0;
    if (exp_pos != std::string::npos)
        exponent = std::stoll(text.substr(exp_pos + 1));
    dot = mantissa.find('.');
    std::string digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    long long frac_digits = static_cast<long long>(mantissa.size() - dot - 1);
    Rat value(parse_int(digits));
    long long shift = exponent - frac_digits;
    if (shift > 0) value *= Rat(ipow(Int(10), static_cast<unsigned>(shift)));
    if (shift < 0) value /= Rat(ipow(Int(10), static_cast<unsigned>(-shift)));
    return value;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << '/' << den(r);
    return os.str();
}

}  // namespace srs
