#pragma once

#include "torlie/der.hpp"
#include "torlie/report.hpp"
#include "torlie/rng.hpp"
#include "torlie/toroidal.hpp"

#include <functional>
#include <sstream>
#include <string>

namespace torlie {

inline DerElement random_der(Sampler& s, std::size_t max_terms = 2) {
    DerElement x(s.d);
    std::size_t terms = 1 + s.rng.below(max_terms);
    for (std::size_t i = 0; i < terms; ++i) x.add_term(s.rational_vector(), s.lattice());
    return x;
}

inline ADerElement random_a_der(Sampler& s) {
    ADerElement x(s.d);
    std::size_t poly_terms = s.rng.below(3);
    for (std::size_t i = 0; i < poly_terms; ++i) x.poly.add_term(s.lattice(), s.coeff());
    x.der = random_der(s);
    return x;
}

inline LaurentPoly random_poly(Sampler& s, std::size_t max_terms = 3) {
    LaurentPoly f(s.d);
    std::size_t terms = 1 + s.rng.below(max_terms);
    for (std::size_t i = 0; i < terms; ++i) f.add_term(s.lattice(), s.coeff());
    return f;
}

inline TauElement random_tau(Sampler& s, const SimpleAlgebraSpec& g) {
    TauElement x(s.d, g.dim());
    std::size_t loops = s.rng.below(3);
    for (std::size_t i = 0; i < loops; ++i)
        x.add_loop(s.rng.below(g.dim()), s.lattice(), s.coeff());
    if (s.rng.below(2)) x.add_center(s.rational_vector(), s.lattice());
    x.add_der(random_der(s, 1));
    return x;
}

/// Antisymmetry and the Jacobi identity, checked exactly on sampled
/// triples; the generator and bracket are supplied by the caller.
template <class Elem>
IdentityReport verify_jacobi(const std::string& identity, const std::string& law,
                             std::size_t trials, const std::function<Elem()>& gen,
                             const std::function<Elem(const Elem&, const Elem&)>& br) {
    std::size_t count = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Elem x = gen();
        Elem y = gen();
        Elem z = gen();
        ++count;
        if (!br(x, x).is_zero()) {
            std::ostringstream os;
            os << "[x,x] != 0 for x=" << x.str();
            return IdentityReport::fail(identity, law, count, os.str());
        }
        Elem jac = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y));
        if (!jac.is_zero()) {
            std::ostringstream os;
            os << "jacobiator " << jac.str() << " for x=" << x.str() << " y=" << y.str()
               << " z=" << z.str();
            return IdentityReport::fail(identity, law, count, os.str());
        }
    }
    return IdentityReport::pass(identity, law, count);
}

inline IdentityReport verify_jacobi_der(Sampler& s, std::size_t trials) {
    return verify_jacobi<DerElement>(
        "jacobi_der", "[D(u,r),D(v,s)] = D((u,s)v - (v,r)u, r+s)", trials,
        [&] { return random_der(s); },
        [](const DerElement& a, const DerElement& b) { return bracket_der(a, b); });
}

inline IdentityReport verify_jacobi_a_der(Sampler& s, std::size_t trials) {
    return verify_jacobi<ADerElement>(
        "jacobi_a_der", "[t^r,t^s] = 0, [D(u,r),t^m] = (u,m) t^(r+m)", trials,
        [&] { return random_a_der(s); },
        [](const ADerElement& a, const ADerElement& b) { return bracket_a_der(a, b); });
}

inline IdentityReport verify_jacobi_tau(Sampler& s, const SimpleAlgebraSpec& g,
                                        std::size_t trials) {
    return verify_jacobi<TauElement>(
        "jacobi_tau",
        "[X ox t^r, Y ox t^s] = [X,Y] ox t^(r+s) + <X,Y> K(r,r+s); "
        "[D(u,r),D(v,s)] = D(w,r+s) - (u,s)(v,r) K(r,r+s)",
        trials, [&] { return random_tau(s, g); },
        [&](const TauElement& a, const TauElement& b) { return bracket_tau(a, b, g); });
}

/// The derivation action is a Lie action on the ring:
/// act([x,y], f) = act(x, act(y,f)) - act(y, act(x,f)).
inline IdentityReport verify_der_action(Sampler& s, std::size_t trials) {
    std::size_t count = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        DerElement x = random_der(s);
        DerElement y = random_der(s);
        LaurentPoly f = random_poly(s);
        ++count;
        LaurentPoly lhs = act_on_poly(bracket_der(x, y), f);
        LaurentPoly rhs = act_on_poly(x, act_on_poly(y, f)) - act_on_poly(y, act_on_poly(x, f));
        if (!(lhs == rhs))
            return IdentityReport::fail("der_action",
                                        "act([x,y],f) = act(x,act(y,f)) - act(y,act(x,f))", count,
                                        "x=" + x.str() + " y=" + y.str() + " f=" + f.str());
        LaurentPoly g = random_poly(s);
        LaurentPoly leibniz =
            act_on_poly(x, f * g) - act_on_poly(x, f) * g - f * act_on_poly(x, g);
        if (!leibniz.is_zero())
            return IdentityReport::fail("der_action", "D(fg) = D(f) g + f D(g)", count,
                                        "x=" + x.str() + " f=" + f.str() + " g=" + g.str());
    }
    return IdentityReport::pass(
        "der_action", "act([x,y],f) = act(x,act(y,f)) - act(y,act(x,f)); D(fg) = D(f)g + f D(g)",
        count);
}

}  // namespace torlie
