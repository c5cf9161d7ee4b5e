#pragma once

#include "torlie/rational.hpp"

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace torlie {

/// Point of the exponent lattice Z^d. Comparison is lexicographic, which
/// fixes the canonical term order used everywhere for serialization.
struct LatticeVector {
    std::vector<std::int64_t> c;

    LatticeVector() = default;
    explicit LatticeVector(std::size_t d) : c(d, 0) {}
    LatticeVector(std::initializer_list<std::int64_t> il) : c(il) {}

    std::size_t dim() const { return c.size(); }
    std::int64_t operator[](std::size_t i) const { return c[i]; }
    std::int64_t& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const {
        for (auto x : c)
            if (x != 0) return false;
        return true;
    }

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        check_same_dim(a, b);
        LatticeVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
        check_same_dim(a, b);
        LatticeVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    LatticeVector operator-() const {
        LatticeVector r(dim());
        for (std::size_t i = 0; i < dim(); ++i) r.c[i] = -c[i];
        return r;
    }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.c == b.c; }
    friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) { return a.c <=> b.c; }

    std::int64_t l1_norm() const {
        std::int64_t s = 0;
        for (auto x : c) s += x < 0 ? -x : x;
        return s;
    }

    /// Unit lattice vector e_axis (0-based axis).
    static LatticeVector unit(std::size_t d, std::size_t axis) {
        LatticeVector r(d);
        r.c.at(axis) = 1;
        return r;
    }

    static void check_same_dim(const LatticeVector& a, const LatticeVector& b) {
        if (a.dim() != b.dim())
            throw std::invalid_argument("LatticeVector: dimension mismatch");
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        os << ')';
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

/// Vector in Q^d; the (u,v) pairing is the standard dot product.
struct RationalVector {
    std::vector<Rational> c;

    RationalVector() = default;
    explicit RationalVector(std::size_t d) : c(d) {}
    RationalVector(std::initializer_list<Rational> il) : c(il) {}

    std::size_t dim() const { return c.size(); }
    const Rational& operator[](std::size_t i) const { return c[i]; }
    Rational& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    friend RationalVector operator+(const RationalVector& a, const RationalVector& b) {
        check_same_dim(a, b);
        RationalVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend RationalVector operator-(const RationalVector& a, const RationalVector& b) {
        check_same_dim(a, b);
        RationalVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend RationalVector operator*(const Rational& s, const RationalVector& v) {
        RationalVector r(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) r.c[i] = s * v.c[i];
        return r;
    }
    RationalVector operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.c == b.c; }
    friend auto operator<=>(const RationalVector& a, const RationalVector& b) = default;

    static RationalVector unit(std::size_t d, std::size_t axis) {
        RationalVector r(d);
        r.c.at(axis) = Rational(1);
        return r;
    }

    /// Promotes a lattice vector to rational coordinates.
    static RationalVector from_lattice(const LatticeVector& v) {
        RationalVector r(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) r.c[i] = Rational(v[i]);
        return r;
    }

    static void check_same_dim(const RationalVector& a, const RationalVector& b) {
        if (a.dim() != b.dim())
            throw std::invalid_argument("RationalVector: dimension mismatch");
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) os << ',';
            os << c[i].str();
        }
        os << ')';
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << v.str(); }

/// Standard pairings (e_i, e_j) = delta_ij, extended bilinearly.
inline Rational dot(const RationalVector& u, const RationalVector& v) {
    RationalVector::check_same_dim(u, v);
    Rational s;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return s;
}

inline Rational dot(const RationalVector& u, const LatticeVector& m) {
    if (u.dim() != m.dim()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * Rational(m[i]);
    return s;
}

inline Rational dot(const LatticeVector& m, const RationalVector& u) { return dot(u, m); }

inline std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector::check_same_dim(a, b);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace torlie
