#include "enriques/rational.hpp"

#include <ostream>

namespace enriques {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error("Rational: empty string");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(text)));
        }
        const mpz_class num(text.substr(0, slash));
        const mpz_class den(text.substr(slash + 1));
        if (den == 0) throw Error("Rational: zero denominator in '" + text + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw Error("Rational: cannot parse '" + text + "'");
    }
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace enriques
