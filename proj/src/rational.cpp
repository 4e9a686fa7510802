#include "arrmorse/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace arrmorse {

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    out = BigInt(s);
    return true;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    const std::string s = trimmed(text);
    if (s.empty()) return std::nullopt;
    const std::size_t slash = s.find('/');
    BigInt num, den;
    if (slash == std::string::npos) {
        if (!parse_integer(s, num)) return std::nullopt;
        return Rational(num);
    }
    if (!parse_integer(trimmed(s.substr(0, slash)), num)) return std::nullopt;
    if (!parse_integer(trimmed(s.substr(slash + 1)), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_gcd(const std::vector<Rational>& xs) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;

    BigInt common_den = 1;
    for (const Rational& x : xs) {
        if (x != 0) common_den = lcm(common_den, denominator(x));
    }
    BigInt g = 0;
    for (const Rational& x : xs) {
        if (x == 0) continue;
        BigInt n = numerator(x) * (common_den / denominator(x));
        if (n < 0) n = -n;
        g = (g == 0) ? n : gcd(g, n);
    }
    if (g == 0) return Rational(0);
    return Rational(g, common_den);
}

}  // namespace arrmorse
