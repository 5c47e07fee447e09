#include "lexfst/rational.hpp"

#include <stdexcept>

namespace lexfst {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    size_t slash = text.find('/');
    auto parse_int = [](std::string_view part) {
        if (part.empty()) throw std::invalid_argument("empty integer in rational");
        size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw std::invalid_argument("sign without digits in rational");
        for (size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("invalid rational: " + std::string(part));
        return boost::multiprecision::cpp_int(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    boost::multiprecision::cpp_int num = parse_int(text.substr(0, slash));
    boost::multiprecision::cpp_int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace lexfst
