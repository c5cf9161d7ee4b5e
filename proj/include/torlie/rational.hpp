#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace torlie {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        BigInt g = boost::multiprecision::gcd(den_, o.den_);
        BigInt od_g = o.den_ / g;
        num_ = num_ * od_g + o.num_ * (den_ / g);
        den_ *= od_g;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }

    Rational& operator*=(const Rational& o) {
        if (is_zero() || o.is_zero()) return *this = Rational();
        // cross-cancel before multiplying to keep operands small
        BigInt g1 = boost::multiprecision::gcd(num_, o.den_);
        BigInt g2 = boost::multiprecision::gcd(o.num_, den_);
        num_ = (num_ / g1) * (o.num_ / g2);
        den_ = (den_ / g2) * (o.den_ / g1);
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        if (inv.den_ < 0) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return *this *= inv;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Renders as "p" for integers and "p/q" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "p" or "p/q" with optional sign. Throws on malformed input.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(text));
            BigInt n(text.substr(0, slash));
            BigInt d(text.substr(slash + 1));
            return Rational(std::move(n), std::move(d));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace torlie
