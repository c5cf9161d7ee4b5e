#pragma once

#include "torlie/lattice.hpp"
#include "torlie/rational.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace torlie {

/// Sparse Laurent polynomial over Q in d variables, viewed as the group
/// algebra of Z^d: t^r * t^s = t^(r+s). Zero coefficients are never stored;
/// terms are kept in lexicographic exponent order.
class LaurentPoly {
  public:
    using TermMap = std::map<LatticeVector, Rational>;

    explicit LaurentPoly(std::size_t d) : d_(d) {}

    static LaurentPoly zero(std::size_t d) { return LaurentPoly(d); }
    static LaurentPoly one(std::size_t d) { return monomial(LatticeVector(d), Rational(1)); }

    /// c * t^r
    static LaurentPoly monomial(const LatticeVector& r, const Rational& c) {
        LaurentPoly p(r.dim());
        if (!c.is_zero()) p.terms_[r] = c;
        return p;
    }

    std::size_t dim() const { return d_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const LatticeVector& r) const {
        auto it = terms_.find(r);
        return it == terms_.end() ? Rational() : it->second;
    }

    void add_term(const LatticeVector& r, const Rational& c) {
        if (r.dim() != d_) throw std::invalid_argument("LaurentPoly: exponent dimension mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_dim(o);
        for (const auto& [r, c] : o.terms_) add_term(r, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_dim(o);
        for (const auto& [r, c] : o.terms_) add_term(r, -c);
        return *this;
    }
    LaurentPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [r, c] : terms_) c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly p) { return p *= s; }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    /// Exact product; supports are Minkowski-summed.
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_dim(b);
        LaurentPoly r(a.d_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    /// Canonical text form: '+'-joined "c*t^(a1,...,ad)" terms in
    /// lexicographic exponent order; "0" for the zero polynomial.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [r, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str() << "*t^" << r.str();
        }
        return os.str();
    }

  private:
    void check_dim(const LaurentPoly& o) const {
        if (d_ != o.d_) throw std::invalid_argument("LaurentPoly: dimension mismatch");
    }

    std::size_t d_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

/// The Euler derivation t_axis d/dt_axis: scales each term c*t^m by m_axis.
/// Axis is 0-based.
inline LaurentPoly euler_derive(const LaurentPoly& f, std::size_t axis) {
    if (axis >= f.dim()) throw std::invalid_argument("euler_derive: axis out of range");
    LaurentPoly r(f.dim());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c * Rational(m[axis]));
    return r;
}

}  // namespace torlie
