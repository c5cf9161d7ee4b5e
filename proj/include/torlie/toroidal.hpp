#pragma once

#include "torlie/der.hpp"
#include "torlie/simple_algebra.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace torlie {

/// Element of the full toroidal algebra G (x) A (+) Omega_A/d_A (+) Der A
/// for a simple algebra G given by a SimpleAlgebraSpec:
///   loop part    sum c * x_a (x) t^r          keyed by (a, r)
///   center part  K(u,r) = sum_i u_i t^r K_i   keyed by r
///   derivation part in Der A
/// The center is stored in canonical form modulo the exactness relation
/// sum_i r_i t^r K_i = 0: for r != 0 the coordinate of u at the first
/// nonzero slot of r is reduced to zero, which kills exactly the span of
/// d_A since K(r,r) = 0.
class TauElement {
  public:
    using LoopMap = std::map<std::pair<std::size_t, LatticeVector>, Rational>;
    using CenterMap = std::map<LatticeVector, RationalVector>;

    TauElement(std::size_t d, std::size_t algebra_dim)
        : d_(d), n_(algebra_dim), der_(d) {}

    std::size_t dim() const { return d_; }
    std::size_t algebra_dim() const { return n_; }
    const LoopMap& loop() const { return loop_; }
    const CenterMap& center() const { return center_; }
    const DerElement& der() const { return der_; }
    bool is_zero() const { return loop_.empty() && center_.empty() && der_.is_zero(); }

    static TauElement from_loop(std::size_t algebra_dim, std::size_t basis_index,
                                const LatticeVector& r, const Rational& c = Rational(1)) {
        TauElement x(r.dim(), algebra_dim);
        x.add_loop(basis_index, r, c);
        return x;
    }
    static TauElement from_center(std::size_t algebra_dim, const RationalVector& u,
                                  const LatticeVector& r) {
        TauElement x(r.dim(), algebra_dim);
        x.add_center(u, r);
        return x;
    }
    static TauElement from_der(std::size_t algebra_dim, const DerElement& x) {
        TauElement t(x.dim(), algebra_dim);
        t.der_ += x;
        return t;
    }

    void add_loop(std::size_t a, const LatticeVector& r, const Rational& c) {
        if (a >= n_) throw std::invalid_argument("TauElement: basis index out of range");
        if (r.dim() != d_) throw std::invalid_argument("TauElement: dimension mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = loop_.emplace(std::make_pair(a, r), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) loop_.erase(it);
        }
    }

    /// Adds K(u,r), canonicalizing immediately.
    void add_center(RationalVector u, const LatticeVector& r) {
        if (u.dim() != d_ || r.dim() != d_)
            throw std::invalid_argument("TauElement: dimension mismatch");
        if (!r.is_zero()) {
            std::size_t p = 0;
            while (r[p] == 0) ++p;
            u = u - (u[p] / Rational(r[p])) * RationalVector::from_lattice(r);
        }
        if (u.is_zero()) return;
        auto [it, inserted] = center_.emplace(r, u);
        if (!inserted) {
            it->second = it->second + u;
            if (it->second.is_zero()) center_.erase(it);
        }
    }

    void add_der(const DerElement& x) { der_ += x; }

    TauElement& operator+=(const TauElement& o) {
        check_compatible(o);
        for (const auto& [key, c] : o.loop_) add_loop(key.first, key.second, c);
        for (const auto& [r, u] : o.center_) add_center(u, r);
        der_ += o.der_;
        return *this;
    }
    TauElement& operator-=(const TauElement& o) { return *this += Rational(-1) * o; }
    TauElement& operator*=(const Rational& s) {
        if (s.is_zero()) return *this = TauElement(d_, n_);
        for (auto& [key, c] : loop_) c *= s;
        for (auto& [r, u] : center_) u = s * u;
        der_ *= s;
        return *this;
    }

    friend TauElement operator+(TauElement a, const TauElement& b) { return a += b; }
    friend TauElement operator-(TauElement a, const TauElement& b) { return a -= b; }
    friend TauElement operator*(const Rational& s, TauElement x) { return x *= s; }

    friend bool operator==(const TauElement& a, const TauElement& b) {
        return a.d_ == b.d_ && a.n_ == b.n_ && a.loop_ == b.loop_ && a.center_ == b.center_ &&
               a.der_ == b.der_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        auto sep = [&] {
            if (!first) os << " + ";
            first = false;
        };
        for (const auto& [key, c] : loop_) {
            sep();
            os << c.str() << "*(x" << key.first << " ox t^" << key.second.str() << ")";
        }
        for (const auto& [r, u] : center_) {
            sep();
            os << "K(" << u.str() << "," << r.str() << ")";
        }
        if (!der_.is_zero()) {
            sep();
            os << der_.str();
        }
        return os.str();
    }

    void check_compatible(const TauElement& o) const {
        if (d_ != o.d_ || n_ != o.n_)
            throw std::invalid_argument("TauElement: incompatible elements");
    }

  private:
    std::size_t d_;
    std::size_t n_;
    LoopMap loop_;
    CenterMap center_;
    DerElement der_;
};

inline std::ostream& operator<<(std::ostream& os, const TauElement& x) { return os << x.str(); }

/// Full toroidal bracket:
///   [x_a ox t^r, x_b ox t^s] = [x_a,x_b] ox t^(r+s) + <x_a,x_b> K(r, r+s)
///   [D(u,r), x_b ox t^s]     = (u,s) x_b ox t^(r+s)
///   [D(u,r), D(v,s)]         = D(w, r+s) - (u,s)(v,r) K(r, r+s)
///   [D(u,r), K(v,s)]         = (u,s) K(v, r+s) + (u,v) K(r, r+s)
///   [K, K] = [loop, K] = 0
/// with w = (u,s)v - (v,r)u; the result is canonical modulo d_A.
inline TauElement bracket_tau(const TauElement& x, const TauElement& y,
                              const SimpleAlgebraSpec& g) {
    x.check_compatible(y);
    if (x.algebra_dim() != g.dim())
        throw std::invalid_argument("bracket_tau: algebra spec does not match elements");
    const std::size_t d = x.dim();
    TauElement out(d, g.dim());

    for (const auto& [ka, ca] : x.loop())
        for (const auto& [kb, cb] : y.loop()) {
            const auto& [a, r] = ka;
            const auto& [b, s] = kb;
            Rational c = ca * cb;
            LatticeVector rs = r + s;
            for (std::size_t e = 0; e < g.dim(); ++e) {
                const Rational& sc = g.c(a, b, e);
                if (!sc.is_zero()) out.add_loop(e, rs, c * sc);
            }
            const Rational& pairing = g.form(a, b);
            if (!pairing.is_zero())
                out.add_center((c * pairing) * RationalVector::from_lattice(r), rs);
        }

    auto der_on_loop = [&](const DerElement& der, const TauElement& loops, const Rational& sign) {
        for (const auto& [rt, u] : der.terms())
            for (const auto& [kb, cb] : loops.loop()) {
                const auto& [b, s] = kb;
                Rational c = sign * cb * dot(u, s);
                out.add_loop(b, rt + s, c);
            }
    };
    der_on_loop(x.der(), y, Rational(1));
    der_on_loop(y.der(), x, Rational(-1));

    for (const auto& [r, u] : x.der().terms())
        for (const auto& [s, v] : y.der().terms()) {
            RationalVector w = dot(u, s) * v - dot(v, r) * u;
            out.add_der(DerElement::single(w, r + s));
            Rational coeff = -(dot(u, s) * dot(v, r));
            if (!coeff.is_zero())
                out.add_center(coeff * RationalVector::from_lattice(r), r + s);
        }

    auto der_on_center = [&](const DerElement& der, const TauElement& centers,
                             const Rational& sign) {
        for (const auto& [r, u] : der.terms())
            for (const auto& [s, v] : centers.center()) {
                LatticeVector rs = r + s;
                Rational us = dot(u, s);
                if (!us.is_zero()) out.add_center((sign * us) * v, rs);
                Rational uv = dot(u, v);
                if (!uv.is_zero())
                    out.add_center((sign * uv) * RationalVector::from_lattice(r), rs);
            }
    };
    der_on_center(x.der(), y, Rational(1));
    der_on_center(y.der(), x, Rational(-1));

    return out;
}

}  // namespace torlie
