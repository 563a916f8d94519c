#include "spherevf/rational.hpp"

#include <stdexcept>

namespace spherevf {

Rational rational_from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // mpq_class(string) accepts "p/q" but not surrounding junk; validate the
    // shape ourselves so error messages are ours and q=0 is rejected early.
    std::size_t slash = s.find('/');
    auto check_int = [](const std::string& part) {
        if (part.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("sign without digits in rational literal");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("malformed rational literal: " + part);
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace spherevf
