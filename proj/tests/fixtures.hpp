#pragma once

// Shared test fixtures: the four-vertex running example
//   4 --g--> 3 ==b1,b2==> 2 --a--> 1,  relations  b1.g  and  a.b2.g
// and a few small companions.

#include "monrep/lambda.hpp"
#include "monrep/quiver.hpp"

namespace fixtures {

inline monrep::Quiver ex224_quiver() {
    return monrep::Quiver(4, {{"g", 4, 3}, {"b1", 3, 2}, {"b2", 3, 2}, {"a", 2, 1}});
}

// Arrow ids in declaration order.
inline constexpr int kG = 0, kB1 = 1, kB2 = 2, kA = 3;

inline monrep::MonomialIdeal ex224_ideal(const monrep::Quiver& q) {
    return monrep::MonomialIdeal(q, {monrep::Path::walk(q, {kG, kB1}),
                                     monrep::Path::walk(q, {kG, kB2, kA})});
}

inline monrep::Quiver a2_quiver() { return monrep::Quiver(2, {{"a", 2, 1}}); }

inline monrep::MonomialIdeal empty_ideal(const monrep::Quiver& q) {
    return monrep::MonomialIdeal(q, {});
}

// Dual numbers k[x]/(x^2) over the four-vertex quiver: the running example.
inline monrep::LambdaContext ex224_context(monrep::Field f = monrep::Field::prime(101)) {
    monrep::BaseAlgebra a(f, {"*"}, {{"x", 0, 0}}, {{0, 0}});
    monrep::Quiver q = ex224_quiver();
    monrep::MonomialIdeal ideal = ex224_ideal(q);
    return monrep::LambdaContext(std::move(a), std::move(q), std::move(ideal));
}

// One-vertex outer quiver: representations are plain A-modules.
inline monrep::LambdaContext point_context(monrep::Field f = monrep::Field::prime(101)) {
    monrep::BaseAlgebra a(f, {"*"}, {{"x", 0, 0}}, {{0, 0}});
    return monrep::LambdaContext(std::move(a), monrep::Quiver(1, {}),
                                 monrep::MonomialIdeal(monrep::Quiver(1, {}), {}));
}

// The running example with trivial coefficients A = k.
inline monrep::LambdaContext ex224_over_k(monrep::Field f = monrep::Field::prime(101)) {
    monrep::BaseAlgebra a(f, {"*"}, {}, {});
    monrep::Quiver q = ex224_quiver();
    monrep::MonomialIdeal ideal = ex224_ideal(q);
    return monrep::LambdaContext(std::move(a), std::move(q), std::move(ideal));
}

// The hand-checked monic representation of the running example: branches
// k, A+k, A, k+k at vertices 4, 3 (as A), 2 (A plus a simple), 1 (two
// simples); basis of A is (e, x).
inline monrep::LambdaRep ex224_golden_rep(const monrep::LambdaContext& c) {
    using namespace monrep;
    const Field& f = c.field();
    AModule x4{{1}, {Matrix(f, 1, 1)}};
    AModule x3{{2}, {Matrix::from_int_rows(f, {{0, 0}, {1, 0}})}};
    AModule x2{{3}, {Matrix::from_int_rows(f, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}})}};
    AModule x1{{2}, {Matrix(f, 2, 2)}};
    LambdaRep x;
    x.branch = {x1, x2, x3, x4};
    x.arrow.resize(4);
    x.arrow[kG] = AMap{{Matrix::from_int_rows(f, {{0}, {1}})}};
    x.arrow[kB1] = AMap{{Matrix::from_int_rows(f, {{0, 0}, {0, 0}, {1, 0}})}};
    x.arrow[kB2] = AMap{{Matrix::from_int_rows(f, {{1, 0}, {0, 1}, {1, 0}})}};
    x.arrow[kA] = AMap{{Matrix::from_int_rows(f, {{1, 0, 0}, {0, 0, 1}})}};
    return x;
}

} // namespace fixtures
