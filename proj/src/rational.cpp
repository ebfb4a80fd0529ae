#include "nhmf/rational.hpp"

#include "nhmf/errors.hpp"

#include <cctype>

namespace nhmf {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational parse_rational(const std::string& s) {
    // -?digits(/digits)? with nonzero denominator; nothing else.
    std::size_t i = 0;
    const std::size_t n = s.size();
    if (i < n && s[i] == '-')
        ++i;
    std::size_t num_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == num_start)
        throw ParseError("invalid rational: \"" + s + "\"");
    if (i < n) {
        if (s[i] != '/')
            throw ParseError("invalid rational: \"" + s + "\"");
        ++i;
        std::size_t den_start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == den_start || i != n)
            throw ParseError("invalid rational: \"" + s + "\"");
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("invalid rational: \"" + s + "\"");
    if (r.get_den() == 0)
        throw ParseError("zero denominator in rational: \"" + s + "\"");
    r.canonicalize();
    return r;
}

} // namespace nhmf
