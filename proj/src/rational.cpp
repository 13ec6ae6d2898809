#include "maninforge/rational.hpp"

#include <cctype>

namespace mforge {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer to_integer(const std::string& s) {
    // cpp_int does not accept an explicit leading '+'.
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

} // namespace

std::optional<Rational> rat_parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) return std::nullopt;
        return Rational(to_integer(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    Integer n = to_integer(num);
    Integer d = to_integer(den);
    if (d == 0) return std::nullopt;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

} // namespace mforge
