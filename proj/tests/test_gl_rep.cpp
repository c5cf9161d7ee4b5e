#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torlie/gl_rep.hpp"

#include <sstream>
#include <vector>

using namespace torlie;

namespace {

// all fundamental-coefficient vectors with sum <= cap
std::vector<std::vector<unsigned>> weight_grid(std::size_t d, unsigned cap) {
    std::vector<std::vector<unsigned>> out{std::vector<unsigned>(d - 1, 0)};
    for (std::size_t slot = 0; slot < d - 1; ++slot) {
        std::vector<std::vector<unsigned>> grown;
        for (const auto& w : out) {
            unsigned used = 0;
            for (auto x : w) used += x;
            for (unsigned v = 0; used + v <= cap; ++v) {
                auto copy = w;
                copy[slot] = v;
                grown.push_back(copy);
            }
        }
        out = std::move(grown);
    }
    return out;
}

}  // namespace

TEST_CASE("Weyl dimension oracle on closed forms") {
    CHECK(weyl_dim(DominantWeight::zero(2), 2) == 1);
    CHECK(weyl_dim(DominantWeight::zero(4), 4) == 1);
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(weyl_dim(DominantWeight({n}, Rational(0)), 2) == n + 1);
    CHECK(weyl_dim(DominantWeight({1, 1}, Rational(0)), 3) == 8);
    CHECK(weyl_dim(DominantWeight({1, 0, 0}, Rational(0)), 4) == 4);
    CHECK(weyl_dim(DominantWeight({1, 1, 1}, Rational(0)), 4) == 64);
}

TEST_CASE("trivial weight gives the one-dimensional module with scalar b/d") {
    for (std::size_t d : {2u, 3u}) {
        Rational b(BigInt(5), BigInt(7));
        GlRep rep = build_irrep(DominantWeight::zero(d, b), d);
        CHECK(rep.dim == 1);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rational expect = i == j ? b / Rational(BigInt(d)) : Rational(0);
                CHECK(rep.E(i, j).at(0, 0) == expect);
            }
        CHECK(check_rep(rep).ok);
    }
}

TEST_CASE("natural module for d = 2") {
    GlRep rep = build_irrep(DominantWeight({1}, Rational(1)), 2);
    CHECK(rep.dim == 2);
    CHECK(check_rep(rep).ok);
    // b = 1 = |lambda| means no diagonal shift: E_ij are the unit matrices
    CHECK(rep.E(0, 1).at(0, 1) == Rational(1));
    CHECK(rep.E(0, 1).at(1, 0) == Rational(0));
    CHECK(rep.E(1, 0).at(1, 0) == Rational(1));
    CHECK(rep.E(0, 0).at(0, 0) == Rational(1));
    CHECK(rep.E(0, 0).at(1, 1) == Rational(0));
}

TEST_CASE("adjoint-type module for d = 3 has dimension 8") {
    GlRep rep = build_irrep(DominantWeight({1, 1}, Rational(0)), 3);
    CHECK(rep.dim == 8);
    CHECK(BigInt(rep.dim) == weyl_dim(DominantWeight({1, 1}, Rational(0)), 3));
    CHECK(check_rep(rep).ok);
}

TEST_CASE("built dimension equals the Weyl formula across the grid") {
    for (std::size_t d : {2u, 3u}) {
        for (const auto& a : weight_grid(d, 3)) {
            DominantWeight psi(a, Rational(BigInt(5), BigInt(7)));
            GlRep rep = build_irrep(psi, d);
            CHECK(BigInt(rep.dim) == weyl_dim(psi, d));
            auto check = check_rep(rep);
            INFO(psi.str(), " -> ", check.where);
            CHECK(check.ok);
            CHECK(irreducibility_witness(rep));
        }
    }
    // one non-trivial d = 4 point; the full grid runs in the acceptance suite
    DominantWeight psi({0, 1, 0}, Rational(2));
    GlRep rep = build_irrep(psi, 4);
    CHECK(BigInt(rep.dim) == weyl_dim(psi, 4));  // 6
    CHECK(check_rep(rep).ok);
    CHECK(irreducibility_witness(rep));
}

TEST_CASE("weight labels are exact eigenvalues of the diagonal matrices") {
    GlRep rep = build_irrep(DominantWeight({2}, Rational(3)), 2);
    CHECK(rep.dim == 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t q = 0; q < rep.dim; ++q) {
            std::vector<Rational> basis(rep.dim);
            basis[q] = Rational(1);
            auto image = rep.E(i, i).apply(basis);
            for (std::size_t r = 0; r < rep.dim; ++r) {
                Rational expect = r == q ? rep.weight_labels[q][i] : Rational(0);
                CHECK(image[r] == expect);
            }
        }
    // the identity acts by b = 3
    RatMatrix sum(rep.dim, rep.dim);
    for (std::size_t i = 0; i < 2; ++i) sum += rep.E(i, i);
    CHECK(sum == Rational(3) * RatMatrix::identity(rep.dim));
}

TEST_CASE("a perturbed matrix entry is detected with named indices") {
    GlRep rep = build_irrep(DominantWeight({1}, Rational(1)), 2);
    REQUIRE(check_rep(rep).ok);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t r = 0; r < rep.dim; ++r)
                for (std::size_t c = 0; c < rep.dim; ++c) {
                    GlRep bad = rep;
                    bad.E(i, j).at(r, c) += Rational(1);
                    auto check = check_rep(bad);
                    CHECK_FALSE(check.ok);
                    CHECK_FALSE(check.where.empty());
                }
}

TEST_CASE("dimension-one module with b = 0 passes") {
    GlRep rep = build_irrep(DominantWeight::zero(3, Rational(0)), 3);
    CHECK(rep.dim == 1);
    CHECK(check_rep(rep).ok);
    CHECK(irreducibility_witness(rep));
}

TEST_CASE("dump contains the dimensions and exact fractions") {
    GlRep rep = build_irrep(DominantWeight::zero(2, Rational(BigInt(1), BigInt(3))), 2);
    std::ostringstream os;
    rep.dump(os);
    std::string text = os.str();
    CHECK(text.find("dim 1") != std::string::npos);
    CHECK(text.find("1/6") != std::string::npos);  // b/d = 1/6
}
