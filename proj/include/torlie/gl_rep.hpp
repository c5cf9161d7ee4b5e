#pragma once

#include "torlie/lattice.hpp"
#include "torlie/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace torlie {

/// Dominant integral weight for sl_d, as coefficients a_1..a_(d-1) of the
/// fundamental weights, together with the scalar b by which the identity
/// matrix acts.
struct DominantWeight {
    std::vector<unsigned> a;
    Rational b;

    DominantWeight() = default;
    DominantWeight(std::vector<unsigned> coeffs, Rational scalar)
        : a(std::move(coeffs)), b(std::move(scalar)) {}

    static DominantWeight zero(std::size_t d, Rational scalar = Rational(0)) {
        return DominantWeight(std::vector<unsigned>(d - 1, 0), std::move(scalar));
    }
    static DominantWeight fundamental(std::size_t d, std::size_t k, Rational scalar = Rational(0)) {
        DominantWeight w = zero(d, std::move(scalar));
        w.a.at(k - 1) = 1;  // k is 1-based
        return w;
    }

    /// Partition lambda with lambda_i = a_i + ... + a_(d-1), lambda_d = 0.
    std::vector<std::int64_t> partition(std::size_t d) const {
        if (a.size() + 1 != d) throw std::invalid_argument("DominantWeight: wrong length for d");
        std::vector<std::int64_t> lambda(d, 0);
        for (std::size_t i = d - 1; i-- > 0;) lambda[i] = lambda[i + 1] + a[i];
        return lambda;
    }

    std::int64_t total(std::size_t d) const {
        auto lambda = partition(d);
        std::int64_t n = 0;
        for (auto x : lambda) n += x;
        return n;
    }

    std::string str() const {
        std::ostringstream os;
        os << "psi=(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) os << ',';
            os << a[i];
        }
        os << "), b=" << b.str();
        return os.str();
    }
};

/// Weyl dimension formula: prod_(i<j) (lambda_i - lambda_j + j - i)/(j - i).
/// Serves as the independent oracle for the explicit construction below.
inline BigInt weyl_dim(const DominantWeight& psi, std::size_t d) {
    auto lambda = psi.partition(d);
    Rational dim(1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::int64_t gap = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
            dim *= Rational(BigInt(lambda[i] - lambda[j] + gap), BigInt(gap));
        }
    if (!dim.is_integer()) throw std::logic_error("weyl_dim: product is not an integer");
    return dim.num();
}

/// Explicit gl_d module: dimension, the d^2 matrices of the E_ij in a fixed
/// basis, and the d-tuple of E_ii eigenvalues for each basis vector. The
/// basis is weight-graded (weights in descending lexicographic order) and
/// deterministic within each weight.
struct GlRep {
    std::size_t d = 0;
    std::size_t dim = 0;
    Rational b;
    std::vector<RatMatrix> matrices;             // d*d entries, E_ij at i*d+j
    std::vector<RationalVector> weight_labels;   // one d-tuple per basis vector

    RatMatrix& E(std::size_t i, std::size_t j) { return matrices[i * d + j]; }
    const RatMatrix& E(std::size_t i, std::size_t j) const { return matrices[i * d + j]; }

    /// Text dump: one matrix per E_ij, row-major, exact fractions.
    void dump(std::ostream& os) const {
        os << "d " << d << "\n" << "dim " << dim << "\n" << "b " << b.str() << "\n";
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                os << "E " << i << " " << j << "\n";
                for (std::size_t r = 0; r < dim; ++r) {
                    for (std::size_t c = 0; c < dim; ++c) {
                        if (c) os << ' ';
                        os << E(i, j).at(r, c).str();
                    }
                    os << "\n";
                }
            }
        os << "weights\n";
        for (const auto& w : weight_labels) os << w.str() << "\n";
    }
};

namespace detail {

// Tensor-power machinery: a basis tensor of (Q^d)^(x n) is a base-d word of
// length n, encoded as an integer.

inline std::uint64_t pow_u64(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

inline LatticeVector word_content(std::uint64_t idx, std::size_t d, std::size_t n) {
    LatticeVector mu(d);
    for (std::size_t p = 0; p < n; ++p) {
        mu[idx % d] += 1;
        idx /= d;
    }
    return mu;
}

/// E_ab on a tensor word: sum over positions carrying letter b, replaced by
/// letter a.
inline SparseVec<std::uint64_t> apply_e_tensor(std::size_t a, std::size_t b,
                                               const SparseVec<std::uint64_t>& v, std::size_t d,
                                               std::size_t n) {
    SparseVec<std::uint64_t> out;
    for (const auto& [idx, c] : v) {
        std::uint64_t rest = idx;
        std::uint64_t place = 1;
        for (std::size_t p = 0; p < n; ++p) {
            std::uint64_t letter = rest % d;
            if (letter == b) {
                std::uint64_t img = idx + (static_cast<std::uint64_t>(a) - b) * place;
                auto [it, inserted] = out.emplace(img, c);
                if (!inserted) {
                    it->second += c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
            rest /= d;
            place *= d;
        }
    }
    return out;
}

/// Highest-weight tensor for the partition lambda: the product over Young
/// columns of antisymmetrized e_0 ^ ... ^ e_(h-1) blocks. Raising operators
/// kill it because every replacement duplicates a letter inside a column.
inline SparseVec<std::uint64_t> highest_weight_tensor(const std::vector<std::int64_t>& lambda,
                                                      std::size_t d) {
    std::vector<std::size_t> heights;
    for (std::int64_t col = 1; col <= (lambda.empty() ? 0 : lambda[0]); ++col) {
        std::size_t h = 0;
        for (auto part : lambda)
            if (part >= col) ++h;
        heights.push_back(h);
    }
    SparseVec<std::uint64_t> v;
    v[0] = Rational(1);  // empty word
    std::uint64_t place = 1;
    for (std::size_t h : heights) {
        // expand the antisymmetrizer of one column
        std::vector<std::size_t> perm(h);
        for (std::size_t i = 0; i < h; ++i) perm[i] = i;
        SparseVec<std::uint64_t> column;
        do {
            int sign = 1;
            for (std::size_t i = 0; i < h; ++i)
                for (std::size_t j = i + 1; j < h; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            std::uint64_t word = 0;
            std::uint64_t p = place;
            for (std::size_t i = 0; i < h; ++i) {
                word += perm[i] * p;
                p *= d;
            }
            column[word] = Rational(sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
        SparseVec<std::uint64_t> next;
        for (const auto& [w1, c1] : v)
            for (const auto& [w2, c2] : column) next[w1 + w2] = c1 * c2;
        v = std::move(next);
        place *= pow_u64(d, h);
    }
    return v;
}

struct WeightBucket {
    RowSpan<std::uint64_t> span;
    std::size_t offset = 0;                 // global index of first basis vector
    std::vector<std::size_t> order;         // internal row index per basis slot
    std::vector<std::size_t> slot_of_row;   // inverse of order
};

}  // namespace detail

/// Builds the irreducible gl_d module V(psi, b): the sl_d module of highest
/// weight psi realized inside the |lambda|-fold tensor power of the natural
/// module by closing the highest-weight tensor under the simple lowering
/// operators, extended to gl_d by shifting each E_ii by (b - |lambda|)/d so
/// that the identity acts by b.
inline GlRep build_irrep(const DominantWeight& psi, std::size_t d) {
    if (d < 1) throw std::invalid_argument("build_irrep: d must be positive");
    auto lambda = psi.partition(d);
    const std::size_t n = static_cast<std::size_t>(psi.total(d));

    using detail::WeightBucket;
    std::map<LatticeVector, WeightBucket, std::greater<LatticeVector>> buckets;

    auto hw = detail::highest_weight_tensor(lambda, d);
    std::deque<std::pair<LatticeVector, SparseVec<std::uint64_t>>> work;
    {
        LatticeVector mu = detail::word_content(hw.begin()->first, d, n);
        buckets[mu].span.insert(hw);
        work.emplace_back(mu, buckets[mu].span.rows().back());
    }
    while (!work.empty()) {
        auto [mu, v] = std::move(work.front());
        work.pop_front();
        for (std::size_t i = 0; i + 1 < d; ++i) {
            auto img = detail::apply_e_tensor(i + 1, i, v, d, n);
            if (img.empty()) continue;
            LatticeVector nu = mu;
            nu[i] -= 1;
            nu[i + 1] += 1;
            auto& bucket = buckets[nu];
            if (bucket.span.insert(std::move(img)))
                work.emplace_back(nu, bucket.span.rows().back());
        }
    }

    GlRep rep;
    rep.d = d;
    rep.b = psi.b;
    std::size_t total = 0;
    for (auto& [mu, bucket] : buckets) {
        std::size_t count = bucket.span.dim();
        bucket.offset = total;
        total += count;
        // order rows by pivot for a deterministic basis
        std::vector<std::pair<std::uint64_t, std::size_t>> pivots;
        for (std::size_t i = 0; i < count; ++i)
            pivots.emplace_back(bucket.span.rows()[i].begin()->first, i);
        std::sort(pivots.begin(), pivots.end());
        bucket.order.resize(count);
        bucket.slot_of_row.resize(count);
        for (std::size_t slot = 0; slot < count; ++slot) {
            bucket.order[slot] = pivots[slot].second;
            bucket.slot_of_row[pivots[slot].second] = slot;
        }
    }
    rep.dim = total;

    const Rational shift = (psi.b - Rational(BigInt(n))) / Rational(BigInt(d));
    rep.weight_labels.reserve(total);
    for (const auto& [mu, bucket] : buckets)
        for (std::size_t slot = 0; slot < bucket.span.dim(); ++slot) {
            RationalVector label(d);
            for (std::size_t i = 0; i < d; ++i) label[i] = Rational(mu[i]) + shift;
            rep.weight_labels.push_back(label);
        }

    rep.matrices.assign(d * d, RatMatrix(total, total));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            RatMatrix& m = rep.E(a, b);
            for (const auto& [mu, bucket] : buckets) {
                for (std::size_t slot = 0; slot < bucket.span.dim(); ++slot) {
                    std::size_t col = bucket.offset + slot;
                    const auto& v = bucket.span.rows()[bucket.order[slot]];
                    auto img = detail::apply_e_tensor(a, b, v, d, n);
                    if (!img.empty()) {
                        LatticeVector nu = mu;
                        nu[b] -= 1;
                        nu[a] += 1;
                        auto it = buckets.find(nu);
                        if (it == buckets.end())
                            throw std::logic_error("build_irrep: closure is not invariant");
                        auto coords = it->second.span.coordinates(std::move(img));
                        if (!coords)
                            throw std::logic_error("build_irrep: image left the module");
                        for (std::size_t row = 0; row < coords->size(); ++row)
                            if (!(*coords)[row].is_zero())
                                m.at(it->second.offset + it->second.slot_of_row[row], col) =
                                    (*coords)[row];
                    }
                    if (a == b && !shift.is_zero()) m.at(col, col) += shift;
                }
            }
        }
    return rep;
}

/// Outcome of an exact verification; `where` names the first failing
/// bracket indices when ok is false.
struct RepCheck {
    bool ok = true;
    std::string where;

    explicit operator bool() const { return ok; }
};

/// Verifies every [E_ij, E_kl] = delta_jk E_il - delta_li E_kj as an exact
/// matrix identity, the trace condition sum_i E_ii = b Id, and that each
/// E_ii is diagonal with the recorded weight labels.
inline RepCheck check_rep(const GlRep& rep) {
    const std::size_t d = rep.d;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    RatMatrix expect(rep.dim, rep.dim);
                    if (j == k) expect += rep.E(i, l);
                    if (l == i) expect -= rep.E(k, j);
                    if (!(rep.E(i, j).commutator(rep.E(k, l)) == expect)) {
                        std::ostringstream os;
                        os << "bracket (" << i << "," << j << "," << k << "," << l << ")";
                        return {false, os.str()};
                    }
                }
    RatMatrix trace_sum(rep.dim, rep.dim);
    for (std::size_t i = 0; i < d; ++i) trace_sum += rep.E(i, i);
    if (!(trace_sum == rep.b * RatMatrix::identity(rep.dim)))
        return {false, "identity does not act by b"};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < rep.dim; ++r)
            for (std::size_t c = 0; c < rep.dim; ++c) {
                const Rational& want =
                    r == c ? rep.weight_labels[r][i] : Rational(0);
                if (!(rep.E(i, i).at(r, c) == want))
                    return {false, "weight label mismatch on E_" + std::to_string(i)};
            }
    return {};
}

/// Cyclic-closure witness: the span of the generated images of `start`
/// under all E_ij. Irreducibility predicts saturation from every nonzero
/// start vector.
inline bool cyclic_closure_spans(const GlRep& rep, const std::vector<Rational>& start) {
    RowSpan<std::size_t> span;
    auto to_sparse = [](const std::vector<Rational>& v) {
        SparseVec<std::size_t> s;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) s[i] = v[i];
        return s;
    };
    std::deque<std::vector<Rational>> work{start};
    if (!span.insert(to_sparse(start))) return rep.dim == 0;
    while (!work.empty() && span.dim() < rep.dim) {
        auto v = std::move(work.front());
        work.pop_front();
        for (const auto& m : rep.matrices) {
            auto img = m.apply(v);
            if (span.insert(to_sparse(img))) work.push_back(std::move(img));
        }
    }
    return span.dim() == rep.dim;
}

/// Runs the cyclic witness from standard basis vectors (all of them up to
/// dimension 20, a deterministic spread beyond that) plus two dense
/// vectors.
inline bool irreducibility_witness(const GlRep& rep) {
    std::size_t stride = rep.dim <= 20 ? 1 : (rep.dim + 7) / 8;
    for (std::size_t q = 0; q < rep.dim; q += stride) {
        std::vector<Rational> v(rep.dim);
        v[q] = Rational(1);
        if (!cyclic_closure_spans(rep, v)) return false;
    }
    std::vector<Rational> ones(rep.dim, Rational(1));
    std::vector<Rational> ramp(rep.dim);
    for (std::size_t q = 0; q < rep.dim; ++q) ramp[q] = Rational(BigInt(q + 1));
    return cyclic_closure_spans(rep, ones) && cyclic_closure_spans(rep, ramp);
}

}  // namespace torlie
