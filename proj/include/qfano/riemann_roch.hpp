#pragma once

#include <span>
#include <vector>

#include "qfano/arith.hpp"
#include "qfano/basket.hpp"

namespace qfano {

/// A point together with the local index i of a divisor D there (D ~ iK near the point).
class LocalDatum {
public:
    LocalDatum(OrbifoldPoint point, int index);

    const OrbifoldPoint &point() const { return point_; }
    int index() const { return index_; }

private:
    OrbifoldPoint point_;
    int index_;
};

/*
 * Local correction term of the orbifold Riemann-Roch formula at a point
 * 1/r(1,-1,b) for a divisor of local index i:
 *
 *   c = -i(r^2-1)/(12r) + sum_{j=0}^{i-1} (jb mod r)(r - (jb mod r))/(2r)
 */
Rational local_term(const LocalDatum &datum);

/*
 * l(m) = sum over points of sum_{j=0}^{m-1} (jb mod r)(r - (jb mod r))/(2r).
 *
 * Indexed by the number of summands m, so chi(-nK) uses l_value(basket, n + 1).
 * l_value(basket, 1) is always 0. Throws std::invalid_argument for m < 1.
 */
Rational l_value(const Basket &basket, int m);

/// chi(-nK) = n(n+1)(2n+1) c1^3 / 12 + 2n + 1 - l(n+1), for n >= 0.
Rational chi_neg_nK(const Basket &basket, const Rational &c13, int n);

/// h0(-K) = c1^3/2 + 3 - l(2). Callers test membership in Z>=0.
Rational h0_neg_K(const Basket &basket, const Rational &c13);

/// [chi(0), chi(-K), ..., chi(-NK)]: the first N+1 coefficients of the anticanonical Hilbert series.
std::vector<Rational> hilbert_coeffs(const Basket &basket, const Rational &c13, int N);

/*
 * chi(D) = 1 + ddk/12 + c2d/12 + sum of local terms, where
 * ddk = D(D-K)(2D-K) and c2d = c2.D are supplied by the caller.
 */
Rational chi_weil(std::span<const LocalDatum> locals, const Rational &ddk, const Rational &c2d);

} // namespace qfano
