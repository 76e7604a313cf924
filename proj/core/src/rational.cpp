#include "wtrunc/rational.hpp"

#include <ostream>

namespace wtrunc {

void Rat::normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::pow(unsigned e) const {
    Rat acc(1);
    Rat base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Rat::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    auto slash = s.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("Rat::parse: empty component");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("Rat::parse: bare sign");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("Rat::parse: bad character in '" + t + "'");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    check_int(n);
    check_int(d);
    return Rat(Int(n), Int(d));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace wtrunc
