#include "canon/rational.hpp"

#include <cctype>

namespace canon {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view digits, std::string_view whole)
{
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
    for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("malformed rational '" + std::string(whole) + "'");
    }
    std::string buf(digits);
    if (buf.front() == '+') buf.erase(0, 1);
    return Integer(buf, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty()) throw InputError("empty rational");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(trim(s.substr(0, slash)), s);
        Integer den = parse_integer(trim(s.substr(slash + 1)), s);
        return make_rational(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if (int_part.empty() && frac_part.empty()) throw InputError("malformed rational '" + std::string(s) + "'");
        for (char c : frac_part) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InputError("malformed rational '" + std::string(s) + "'");
        }
        Integer whole = int_part.empty() ? Integer(0) : parse_integer(int_part, s);
        Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part), 10);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Rational r = make_rational(whole * scale + frac, scale);
        return negative ? Rational(-r) : r;
    }

    return Rational(parse_integer(s, s));
}

std::string to_fraction_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display_string(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return to_fraction_string(r);
}

} // namespace canon
