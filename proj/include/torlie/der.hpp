#pragma once

#include "torlie/lattice.hpp"
#include "torlie/laurent.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace torlie {

/// Element of the Lie algebra of derivations of the Laurent ring: a finite
/// sum of terms D(u,r) = sum_i u_i t^r t_i d/dt_i, stored as r -> u.
/// D(u,r) is linear in u, so same-r terms merge losslessly; the basis view
/// recovers D^i(r) as D(e_i, r).
class DerElement {
  public:
    using TermMap = std::map<LatticeVector, RationalVector>;

    explicit DerElement(std::size_t d) : d_(d) {}

    static DerElement zero(std::size_t d) { return DerElement(d); }

    static DerElement single(const RationalVector& u, const LatticeVector& r) {
        if (u.dim() != r.dim()) throw std::invalid_argument("DerElement: u and r dimension mismatch");
        DerElement x(u.dim());
        x.add_term(u, r);
        return x;
    }

    /// D^i(r), i 0-based.
    static DerElement basis(std::size_t d, std::size_t axis, const LatticeVector& r) {
        return single(RationalVector::unit(d, axis), r);
    }

    std::size_t dim() const { return d_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const RationalVector& u, const LatticeVector& r) {
        if (u.dim() != d_ || r.dim() != d_)
            throw std::invalid_argument("DerElement: dimension mismatch");
        if (u.is_zero()) return;
        auto [it, inserted] = terms_.emplace(r, u);
        if (!inserted) {
            it->second = it->second + u;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DerElement& operator+=(const DerElement& o) {
        check_dim(o);
        for (const auto& [r, u] : o.terms_) add_term(u, r);
        return *this;
    }
    DerElement& operator-=(const DerElement& o) {
        check_dim(o);
        for (const auto& [r, u] : o.terms_) add_term(-u, r);
        return *this;
    }
    DerElement& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [r, u] : terms_) u = s * u;
        return *this;
    }

    friend DerElement operator+(DerElement a, const DerElement& b) { return a += b; }
    friend DerElement operator-(DerElement a, const DerElement& b) { return a -= b; }
    friend DerElement operator*(const Rational& s, DerElement x) { return x *= s; }
    DerElement operator-() const {
        DerElement r = *this;
        for (auto& [m, u] : r.terms_) u = -u;
        return r;
    }

    friend bool operator==(const DerElement& a, const DerElement& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [r, u] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "D(" << u.str() << "," << r.str() << ")";
        }
        return os.str();
    }

    void check_dim(const DerElement& o) const {
        if (d_ != o.d_) throw std::invalid_argument("DerElement: dimension mismatch");
    }

  private:
    std::size_t d_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const DerElement& x) { return os << x.str(); }

/// [D(u,r), D(v,s)] = D((u,s)v - (v,r)u, r+s), extended bilinearly.
inline DerElement bracket_der(const DerElement& x, const DerElement& y) {
    x.check_dim(y);
    DerElement out(x.dim());
    for (const auto& [r, u] : x.terms())
        for (const auto& [s, v] : y.terms()) {
            RationalVector w = dot(u, s) * v - dot(v, r) * u;
            out.add_term(w, r + s);
        }
    return out;
}

/// Derivation action on the ring: D(u,r) . t^s = (u,s) t^(r+s).
inline LaurentPoly act_on_poly(const DerElement& x, const LaurentPoly& f) {
    if (x.dim() != f.dim()) throw std::invalid_argument("act_on_poly: dimension mismatch");
    LaurentPoly out(f.dim());
    for (const auto& [r, u] : x.terms())
        for (const auto& [s, c] : f.terms()) out.add_term(r + s, c * dot(u, s));
    return out;
}

/// Element of the semidirect sum A (+) Der A, with A abelian.
struct ADerElement {
    LaurentPoly poly;
    DerElement der;

    explicit ADerElement(std::size_t d) : poly(d), der(d) {}
    ADerElement(LaurentPoly f, DerElement x) : poly(std::move(f)), der(std::move(x)) {
        if (poly.dim() != der.dim()) throw std::invalid_argument("ADerElement: dimension mismatch");
    }

    std::size_t dim() const { return der.dim(); }
    bool is_zero() const { return poly.is_zero() && der.is_zero(); }

    friend ADerElement operator+(const ADerElement& a, const ADerElement& b) {
        return ADerElement(a.poly + b.poly, a.der + b.der);
    }
    friend ADerElement operator-(const ADerElement& a, const ADerElement& b) {
        return ADerElement(a.poly - b.poly, a.der - b.der);
    }
    friend bool operator==(const ADerElement& a, const ADerElement& b) {
        return a.poly == b.poly && a.der == b.der;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        if (!poly.is_zero()) os << poly.str();
        if (!der.is_zero()) {
            if (!poly.is_zero()) os << " + ";
            os << der.str();
        }
        return os.str();
    }
};

/// [f + X, g + Y] = (X.g - Y.f) + [X,Y]: polynomials commute and Der A acts
/// by the derivation action.
inline ADerElement bracket_a_der(const ADerElement& x, const ADerElement& y) {
    LaurentPoly p = act_on_poly(x.der, y.poly) - act_on_poly(y.der, x.poly);
    return ADerElement(std::move(p), bracket_der(x.der, y.der));
}

}  // namespace torlie
