#pragma once

#include "torlie/rational.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace torlie {

/// Finite-dimensional Lie algebra given by structure constants
/// [x_a, x_b] = sum_e c(a,b,e) x_e over a fixed basis, together with a
/// symmetric invariant bilinear form. Antisymmetry, Jacobi, symmetry and
/// invariance of the form are all checked at load time.
///
/// Text format (0-based indices, '#' comments):
///   dim <n>
///   c <a> <b> <e> <value>
///   form <a> <b> <value>
class SimpleAlgebraSpec {
  public:
    explicit SimpleAlgebraSpec(std::size_t n)
        : n_(n), c_(n * n * n), form_(n * n) {}

    std::size_t dim() const { return n_; }

    Rational& c(std::size_t a, std::size_t b, std::size_t e) { return c_[(a * n_ + b) * n_ + e]; }
    const Rational& c(std::size_t a, std::size_t b, std::size_t e) const {
        return c_[(a * n_ + b) * n_ + e];
    }
    Rational& form(std::size_t a, std::size_t b) { return form_[a * n_ + b]; }
    const Rational& form(std::size_t a, std::size_t b) const { return form_[a * n_ + b]; }

    /// Returns an explanation of the first violated axiom, or nullopt when
    /// the constants define a Lie algebra with an invariant symmetric form.
    std::optional<std::string> validate() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t e = 0; e < n_; ++e)
                    if (c(a, b, e) != -c(b, a, e))
                        return fmt_triple("antisymmetry fails", a, b, e);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t x = 0; x < n_; ++x)
                    for (std::size_t e = 0; e < n_; ++e) {
                        Rational s;
                        for (std::size_t f = 0; f < n_; ++f) {
                            s += c(b, x, f) * c(a, f, e);
                            s += c(x, a, f) * c(b, f, e);
                            s += c(a, b, f) * c(x, f, e);
                        }
                        if (!s.is_zero())
                            return fmt_triple("Jacobi fails", a, b, x);
                    }
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (form(a, b) != form(b, a))
                    return "form not symmetric at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")";
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t z = 0; z < n_; ++z) {
                    Rational lhs, rhs;
                    for (std::size_t e = 0; e < n_; ++e) {
                        lhs += c(a, b, e) * form(e, z);
                        rhs += c(b, z, e) * form(a, e);
                    }
                    if (lhs != rhs)
                        return fmt_triple("form not invariant", a, b, z);
                }
        return std::nullopt;
    }

    /// Parses the plain-text format: a structure constant per line as
    /// "a b e value", a form entry as "a b value" (0-based indices, '#'
    /// comments, '/' fractions). The dimension is one more than the largest
    /// index mentioned; an optional "dim n" line pins it explicitly.
    static SimpleAlgebraSpec load(std::istream& in) {
        struct Entry {
            bool is_constant;
            std::size_t a, b, e;
            std::string value;
        };
        std::vector<Entry> entries;
        std::size_t dim_hint = 0;
        std::size_t max_index = 0;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty()) continue;
            auto fail = [&](const std::string& why) -> std::runtime_error {
                return std::runtime_error("algebra spec line " + std::to_string(lineno) + ": " + why);
            };
            try {
                if (tokens[0] == "dim") {
                    if (tokens.size() != 2) throw fail("malformed dim line");
                    dim_hint = std::stoul(tokens[1]);
                } else if (tokens.size() == 4) {
                    Entry entry{true, std::stoul(tokens[0]), std::stoul(tokens[1]),
                                std::stoul(tokens[2]), tokens[3]};
                    max_index = std::max({max_index, entry.a, entry.b, entry.e});
                    entries.push_back(std::move(entry));
                } else if (tokens.size() == 3) {
                    Entry entry{false, std::stoul(tokens[0]), std::stoul(tokens[1]), 0, tokens[2]};
                    max_index = std::max({max_index, entry.a, entry.b});
                    entries.push_back(std::move(entry));
                } else {
                    throw fail("expected 'a b e value' or 'a b value'");
                }
            } catch (const std::invalid_argument&) {
                throw fail("malformed number");
            }
        }
        if (entries.empty()) throw std::runtime_error("algebra spec: no entries");
        std::size_t n = std::max(dim_hint, max_index + 1);
        SimpleAlgebraSpec spec(n);
        for (const auto& entry : entries) {
            if (entry.a >= n || entry.b >= n || entry.e >= n)
                throw std::runtime_error("algebra spec: index out of range");
            if (entry.is_constant)
                spec.c(entry.a, entry.b, entry.e) = Rational::parse(entry.value);
            else
                spec.form(entry.a, entry.b) = Rational::parse(entry.value);
        }
        if (auto why = spec.validate()) throw std::runtime_error("algebra spec invalid: " + *why);
        return spec;
    }

    void save(std::ostream& out) const {
        out << "dim " << n_ << "\n";
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t e = 0; e < n_; ++e)
                    if (!c(a, b, e).is_zero())
                        out << a << " " << b << " " << e << " " << c(a, b, e).str() << "\n";
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (!form(a, b).is_zero())
                    out << a << " " << b << " " << form(a, b).str() << "\n";
    }

    /// sl2 with basis (e, h, f), [e,f] = h, [h,e] = 2e, [h,f] = -2f, and the
    /// trace form of the natural representation.
    static SimpleAlgebraSpec sl2() {
        SimpleAlgebraSpec g(3);
        const std::size_t E = 0, H = 1, F = 2;
        auto set = [&](std::size_t a, std::size_t b, std::size_t e, long long v) {
            g.c(a, b, e) = Rational(v);
            g.c(b, a, e) = Rational(-v);
        };
        set(E, F, H, 1);
        set(H, E, E, 2);
        set(H, F, F, -2);
        g.form(E, F) = g.form(F, E) = Rational(1);
        g.form(H, H) = Rational(2);
        return g;
    }

  private:
    static std::string fmt_triple(const std::string& what, std::size_t a, std::size_t b,
                                  std::size_t e) {
        return what + " at (" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(e) + ")";
    }

    std::size_t n_;
    std::vector<Rational> c_;
    std::vector<Rational> form_;
};

}  // namespace torlie
