#pragma once

#include "torlie/der.hpp"
#include "torlie/gl_rep.hpp"
#include "torlie/matrix.hpp"
#include "torlie/rng.hpp"

#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace torlie {

/// Parameters of the tensor-field module F^alpha(psi,b) = V(psi,b) (x) A.
struct ModuleParams {
    DominantWeight psi;
    RationalVector alpha;
    GlRep rep;

    ModuleParams(DominantWeight w, RationalVector a, std::size_t d)
        : psi(std::move(w)), alpha(std::move(a)), rep(build_irrep(psi, d)) {
        if (alpha.dim() != d) throw std::invalid_argument("ModuleParams: alpha has wrong dimension");
    }

    std::size_t d() const { return rep.d; }
    std::size_t n() const { return rep.dim; }
};

/// Finitely supported element of V(psi,b) (x) A: a map from lattice points m
/// to coordinate vectors, with v (x) t^m written v(m).
class TensorFieldVector {
  public:
    using Support = std::map<LatticeVector, std::vector<Rational>>;

    TensorFieldVector(std::size_t d, std::size_t n) : d_(d), n_(n) {}

    static TensorFieldVector basis(const ModuleParams& p, std::size_t comp,
                                   const LatticeVector& m) {
        TensorFieldVector v(p.d(), p.n());
        std::vector<Rational> w(p.n());
        w.at(comp) = Rational(1);
        v.add(m, w);
        return v;
    }

    std::size_t d() const { return d_; }
    std::size_t n() const { return n_; }
    const Support& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    void add(const LatticeVector& m, const std::vector<Rational>& w) {
        if (m.dim() != d_ || w.size() != n_)
            throw std::invalid_argument("TensorFieldVector: dimension mismatch");
        bool nonzero = false;
        for (const auto& c : w)
            if (!c.is_zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) return;
        auto [it, inserted] = support_.try_emplace(m, w);
        if (!inserted) {
            bool any = false;
            for (std::size_t i = 0; i < n_; ++i) {
                it->second[i] += w[i];
                if (!it->second[i].is_zero()) any = true;
            }
            if (!any) support_.erase(it);
        }
    }

    TensorFieldVector& operator+=(const TensorFieldVector& o) {
        for (const auto& [m, w] : o.support_) add(m, w);
        return *this;
    }
    TensorFieldVector& operator-=(const TensorFieldVector& o) {
        for (const auto& [m, w] : o.support_) {
            std::vector<Rational> neg(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
            add(m, neg);
        }
        return *this;
    }
    friend TensorFieldVector operator+(TensorFieldVector a, const TensorFieldVector& b) {
        return a += b;
    }
    friend TensorFieldVector operator-(TensorFieldVector a, const TensorFieldVector& b) {
        return a -= b;
    }
    friend TensorFieldVector operator*(const Rational& s, const TensorFieldVector& v) {
        TensorFieldVector out(v.d_, v.n_);
        if (s.is_zero()) return out;
        for (const auto& [m, w] : v.support_) {
            std::vector<Rational> sw(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) sw[i] = s * w[i];
            out.add(m, sw);
        }
        return out;
    }
    friend bool operator==(const TensorFieldVector& a, const TensorFieldVector& b) {
        return a.d_ == b.d_ && a.n_ == b.n_ && a.support_ == b.support_;
    }

    std::string str() const {
        if (support_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, w] : support_) {
            if (!first) os << " + ";
            first = false;
            os << '(';
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) os << ',';
                os << w[i].str();
            }
            os << ")(" << m.str() << ")";
        }
        return os.str();
    }

  private:
    std::size_t d_;
    std::size_t n_;
    Support support_;
};

/// The operator sum_(i,j) u_i r_j E_ji of the representation.
inline RatMatrix field_matrix(const RationalVector& u, const LatticeVector& r, const GlRep& rep) {
    RatMatrix m(rep.dim, rep.dim);
    for (std::size_t i = 0; i < rep.d; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < rep.d; ++j) {
            if (r[j] == 0) continue;
            Rational c = u[i] * Rational(r[j]);
            m += c * rep.E(j, i);
        }
    }
    return m;
}

/// D(u,r) . v(m) = (u, m+alpha) v(m+r) + (sum u_i r_j E_ji v)(m+r),
/// extended bilinearly over the terms of x and the support of v.
inline TensorFieldVector act_der_field(const DerElement& x, const TensorFieldVector& v,
                                       const ModuleParams& p) {
    if (x.dim() != p.d()) throw std::invalid_argument("act_der_field: dimension mismatch");
    TensorFieldVector out(p.d(), p.n());
    for (const auto& [r, u] : x.terms()) {
        RatMatrix m_ur = field_matrix(u, r, p.rep);
        for (const auto& [m, w] : v.support()) {
            Rational scalar = dot(u, m) + dot(u, p.alpha);
            std::vector<Rational> img = m_ur.apply(w);
            for (std::size_t i = 0; i < img.size(); ++i) img[i] += scalar * w[i];
            out.add(m + r, img);
        }
    }
    return out;
}

/// t^m . v(r) = v(m+r), extended linearly: the A action translates support.
inline TensorFieldVector act_a_field(const LaurentPoly& f, const TensorFieldVector& v) {
    if (f.dim() != v.d()) throw std::invalid_argument("act_a_field: dimension mismatch");
    TensorFieldVector out(v.d(), v.n());
    for (const auto& [m, c] : f.terms())
        for (const auto& [r, w] : v.support()) {
            std::vector<Rational> cw(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) cw[i] = c * w[i];
            out.add(m + r, cw);
        }
    return out;
}

/// Action of a combined A (+) Der A element.
inline TensorFieldVector act_ader_field(const ADerElement& x, const TensorFieldVector& v,
                                        const ModuleParams& p) {
    TensorFieldVector out = act_a_field(x.poly, v);
    out += act_der_field(x.der, v, p);
    return out;
}

/// T(u,r) on a single weight space: w -> (sum u_i r_j E_ji) w. The result
/// does not depend on which weight space it is applied in.
inline std::vector<Rational> act_t_weightspace(const RationalVector& u, const LatticeVector& r,
                                               const std::vector<Rational>& w,
                                               const ModuleParams& p) {
    return field_matrix(u, r, p.rep).apply(w);
}

/// Counterexample report for the module axiom.
struct ModuleAxiomReport {
    std::size_t trials = 0;
    bool ok = true;
    std::string witness;
};

/// Checks [x,y].v = x.(y.v) - y.(x.v) exactly for random pairs in
/// A (+) Der A and random finitely supported v.
inline ModuleAxiomReport check_module_axiom(const ModuleParams& p, std::size_t trials,
                                            Sampler& sampler) {
    ModuleAxiomReport report;
    report.trials = trials;
    const std::size_t d = p.d();
    auto random_ader = [&] {
        ADerElement x(d);
        std::size_t poly_terms = sampler.rng.below(3);
        for (std::size_t i = 0; i < poly_terms; ++i)
            x.poly.add_term(sampler.lattice(), sampler.coeff());
        std::size_t der_terms = 1 + sampler.rng.below(2);
        for (std::size_t i = 0; i < der_terms; ++i)
            x.der.add_term(sampler.rational_vector(), sampler.lattice());
        return x;
    };
    auto random_vector = [&] {
        TensorFieldVector v(d, p.n());
        std::size_t points = 1 + sampler.rng.below(2);
        for (std::size_t i = 0; i < points; ++i) {
            std::vector<Rational> w(p.n());
            for (auto& c : w) c = sampler.coeff();
            v.add(sampler.lattice(), w);
        }
        return v;
    };
    for (std::size_t t = 0; t < trials; ++t) {
        ADerElement x = random_ader();
        ADerElement y = random_ader();
        TensorFieldVector v = random_vector();
        TensorFieldVector lhs = act_ader_field(bracket_a_der(x, y), v, p);
        TensorFieldVector rhs =
            act_ader_field(x, act_ader_field(y, v, p), p) -
            act_ader_field(y, act_ader_field(x, v, p), p);
        if (!(lhs == rhs)) {
            report.ok = false;
            std::ostringstream os;
            os << "x=" << x.str() << " y=" << y.str() << " v=" << v.str();
            report.witness = os.str();
            return report;
        }
    }
    return report;
}

enum class ScanMode { DerOnly, ADer };

inline std::string to_string(ScanMode m) { return m == ScanMode::DerOnly ? "der" : "ader"; }

/// Result of a truncated submodule scan. Saturation inside the window is
/// evidence of irreducibility, never proof; the flag reports whether a
/// stabilized closure stayed strictly below full weight-space dimension on
/// the core region (l1-distance at most word_length - 2 from the origin).
struct ScanReport {
    ScanMode mode = ScanMode::DerOnly;
    std::size_t word_length = 0;
    std::int64_t window = 0;
    std::int64_t core_l1 = 0;
    bool stabilized = false;
    bool proper_submodule = false;
    std::map<LatticeVector, std::size_t> per_weight_dims;
    std::string witness;
    std::size_t module_dim = 0;  // N = dim V(psi)
};

/// Closes `start` under the unit-vector generator set (D(e_i, +-e_j) and
/// D(e_i, 0); in ADer mode also t^(+-e_i)) up to the given word length,
/// recording exact span dimensions for every weight in the window box.
///
/// Every generator maps one weight space into one weight space, and the
/// Cartan generators D(e_i, 0) act by scalars there, so the closure is
/// tracked weight by weight: the frontier holds (weight, coordinates)
/// pairs and each bucket keeps an exact reduced span of V-coordinates.
inline ScanReport submodule_scan(const ModuleParams& p, const TensorFieldVector& start,
                                 std::size_t word_length, std::int64_t window,
                                 ScanMode mode) {
    if (start.is_zero()) throw std::invalid_argument("submodule_scan: empty start vector");
    const std::size_t d = p.d();
    const std::size_t n = p.n();

    // moving generators: D(e_i, r) with r = +-e_j, plus translations t^(+-e_j)
    // in ADer mode. D(e_i, 0) scales inside a weight space and never grows a
    // span, so applying it is a no-op for the closure.
    struct Generator {
        LatticeVector shift;
        RatMatrix matrix;      // weight-dependent scalar is added separately
        std::size_t scalar_axis;
        bool translation;
    };
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (int sign : {1, -1}) {
                LatticeVector r = LatticeVector(d);
                r[j] = sign;
                gens.push_back({r, field_matrix(RationalVector::unit(d, i), r, p.rep), i, false});
            }
    if (mode == ScanMode::ADer)
        for (std::size_t j = 0; j < d; ++j)
            for (int sign : {1, -1}) {
                LatticeVector r = LatticeVector(d);
                r[j] = sign;
                gens.push_back({r, RatMatrix(), 0, true});
            }

    std::map<LatticeVector, RowSpan<std::size_t>> per_weight;
    using Front = std::pair<LatticeVector, std::vector<Rational>>;
    std::deque<Front> frontier;

    auto insert = [&](const LatticeVector& m, const std::vector<Rational>& w,
                      std::deque<Front>* sink) {
        SparseVec<std::size_t> comp;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_zero()) comp[i] = w[i];
        if (comp.empty()) return false;
        auto& bucket = per_weight[m];
        if (!bucket.insert(std::move(comp))) return false;
        if (sink) {
            std::vector<Rational> dense(n);
            for (const auto& [i, c] : bucket.rows().back()) dense[i] = c;
            sink->push_back({m, std::move(dense)});
        }
        return true;
    };
    auto image = [&](const Generator& g, const LatticeVector& m,
                     const std::vector<Rational>& w) {
        std::vector<Rational> out;
        if (g.translation) {
            out = w;
        } else {
            out = g.matrix.apply(w);
            Rational scalar = Rational(m[g.scalar_axis]) + p.alpha[g.scalar_axis];
            if (!scalar.is_zero())
                for (std::size_t i = 0; i < n; ++i) out[i] += scalar * w[i];
        }
        return out;
    };

    for (const auto& [m, w] : start.support()) insert(m, w, &frontier);
    bool stabilized = false;
    for (std::size_t depth = 1; depth <= word_length; ++depth) {
        std::deque<Front> next;
        for (const auto& [m, w] : frontier)
            for (const auto& g : gens) insert(m + g.shift, image(g, m, w), &next);
        if (next.empty()) {
            stabilized = true;
            break;
        }
        frontier = std::move(next);
    }
    if (!stabilized) {
        // stabilized iff no basis vector of any bucket generates anything new
        stabilized = true;
        for (const auto& [m, bucket] : per_weight) {
            for (const auto& row : bucket.rows()) {
                std::vector<Rational> w(n);
                for (const auto& [i, c] : row) w[i] = c;
                for (const auto& g : gens) {
                    auto img = image(g, m, w);
                    SparseVec<std::size_t> comp;
                    for (std::size_t i = 0; i < n; ++i)
                        if (!img[i].is_zero()) comp[i] = img[i];
                    auto it = per_weight.find(m + g.shift);
                    bool inside = comp.empty() ||
                                  (it != per_weight.end() && it->second.contains(std::move(comp)));
                    if (!inside) {
                        stabilized = false;
                        break;
                    }
                }
                if (!stabilized) break;
            }
            if (!stabilized) break;
        }
    }

    ScanReport report;
    report.mode = mode;
    report.word_length = word_length;
    report.window = window;
    report.core_l1 = static_cast<std::int64_t>(word_length) - 2;
    report.stabilized = stabilized;
    report.module_dim = n;

    std::vector<std::int64_t> idx(d, -window);
    for (;;) {
        LatticeVector m(d);
        for (std::size_t i = 0; i < d; ++i) m[i] = idx[i];
        auto it = per_weight.find(m);
        report.per_weight_dims[m] = it == per_weight.end() ? 0 : it->second.dim();
        std::size_t pos = 0;
        while (pos < d && ++idx[pos] > window) idx[pos++] = -window;
        if (pos == d) break;
    }

    if (stabilized) {
        for (const auto& [m, dim] : report.per_weight_dims) {
            if (m.l1_norm() > report.core_l1) continue;
            if (dim < n) {
                report.proper_submodule = true;
                std::ostringstream os;
                os << "closure of " << start.str() << " stabilized with weight " << m.str()
                   << " at dimension " << dim << " < " << n;
                report.witness = os.str();
                break;
            }
        }
    }
    return report;
}

}  // namespace torlie
