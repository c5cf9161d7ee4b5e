#pragma once

#include "torlie/laurent.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace torlie {

// Jets at the point t = (1,...,1) and the augmentation-power membership
// oracle.
//
// Let M be the ideal of Laurent polynomials vanishing at t = 1 (the
// augmentation ideal of the group algebra). M is spanned by t^r - t^s =
// t^s (t^(r-s) - 1), so M^k coincides with the span of the products
// t^r (1-t^(m_1)) ... (1-t^(m_k)) over nonzero m_i. Substituting
// t_i = 1 + x_i identifies A / M^k with Q[x] / (x)^k, so f lies in M^k
// exactly when its Taylor expansion at t = 1 starts in degree k, i.e. when
// every iterated derivative of order < k vanishes at the point. The Euler
// derivations t_i d/dt_i generate the same jets as d/dt_i there (the change
// of frame is triangular with unit diagonal), and they commute, so jets are
// indexed by multisets of axes rather than sequences.

/// Multiset of axes, stored as a sorted vector of 0-based indices.
using AxisMultiset = std::vector<std::size_t>;

/// All multisets over {0,...,d-1} of the given size, in lexicographic order.
inline std::vector<AxisMultiset> axis_multisets(std::size_t d, std::size_t size) {
    std::vector<AxisMultiset> out;
    AxisMultiset cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t a = start; a < d; ++a) {
            cur.push_back(a);
            self(self, a);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::string multiset_str(const AxisMultiset& ms) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) os << ',';
        os << "t" << (ms[i] + 1);
    }
    os << '}';
    return os.str();
}

/// Value of the iterated Euler derivative prescribed by the multiset,
/// evaluated at t = (1,...,1). Each monomial c*t^m contributes
/// c * prod_a m_a^(multiplicity of a).
inline Rational jet_value(const LaurentPoly& f, const AxisMultiset& ms) {
    Rational total;
    for (const auto& [m, c] : f.terms()) {
        BigInt scale = 1;
        for (std::size_t a : ms) scale *= m[a];
        if (scale.is_zero()) continue;
        total += c * Rational(scale);
    }
    return total;
}

/// All jets of order <= max_order, keyed by axis multiset.
inline std::map<AxisMultiset, Rational> jet_at_one(const LaurentPoly& f, std::size_t max_order) {
    std::map<AxisMultiset, Rational> out;
    for (std::size_t j = 0; j <= max_order; ++j)
        for (const auto& ms : axis_multisets(f.dim(), j)) out[ms] = jet_value(f, ms);
    return out;
}

/// The product (1-t^(m_1)) ... (1-t^(m_k)). Every m_i must be nonzero,
/// otherwise a factor would be identically zero minus nothing useful.
inline LaurentPoly augmentation_product(std::size_t d, const std::vector<LatticeVector>& ms) {
    LaurentPoly p = LaurentPoly::one(d);
    for (const auto& m : ms) {
        if (m.dim() != d) throw std::invalid_argument("augmentation_product: dimension mismatch");
        if (m.is_zero()) throw std::invalid_argument("augmentation_product: zero shift");
        LaurentPoly factor = LaurentPoly::one(d);
        factor.add_term(m, Rational(-1));
        p = p * factor;
    }
    return p;
}

/// Nonzero jet certifying non-membership.
struct JetWitness {
    AxisMultiset multiset;
    Rational value;

    std::string str() const { return multiset_str(multiset) + " -> " + value.str(); }
};

/// First nonzero jet of f in orders [min_order, max_order], if any.
inline std::optional<JetWitness> first_nonzero_jet(const LaurentPoly& f, std::size_t min_order,
                                                   std::size_t max_order) {
    for (std::size_t j = min_order; j <= max_order; ++j)
        for (const auto& ms : axis_multisets(f.dim(), j)) {
            Rational v = jet_value(f, ms);
            if (!v.is_zero()) return JetWitness{ms, v};
        }
    return std::nullopt;
}

/// Membership of f in the k-th augmentation-ideal power (jets of orders
/// 0..k-1 all vanish). With ignore_constant set, decides membership in
/// M^k + Q instead, checking orders 1..k-1 only.
inline bool in_augmentation_power(const LaurentPoly& f, std::size_t k, bool ignore_constant = false) {
    if (k < 1) throw std::invalid_argument("in_augmentation_power: k must be >= 1");
    std::size_t lo = ignore_constant ? 1 : 0;
    return !first_nonzero_jet(f, lo, k - 1).has_value();
}

}  // namespace torlie
