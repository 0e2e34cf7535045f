#include "betticone/rational.hpp"

#include <stdexcept>

namespace betticone {

Rat parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid rational '" + s + "'");
    }
}

std::string format_rational(const Rat& q) {
    return q.get_str();
}

}  // namespace betticone
