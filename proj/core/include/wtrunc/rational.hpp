#ifndef WTRUNC_RATIONAL_HPP
#define WTRUNC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wtrunc {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.  Zero is stored as 0/1.  This is the only scalar used by
/// the algebra layer; no floating point appears anywhere downstream.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(const Int& n) : num_(n), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rat operator-() const { return Rat(raw_tag{}, -num_, den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }
    Rat inverse() const { return Rat(1) / *this; }

    Rat pow(unsigned e) const;

    /// Decimal-free exact form: "p" for integers, otherwise "p/q".
    std::string str() const;

    /// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
    static Rat parse(const std::string& s);

private:
    struct raw_tag {};
    Rat(raw_tag, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    Int num_;
    Int den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace wtrunc

#endif
