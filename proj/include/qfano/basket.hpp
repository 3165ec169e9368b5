#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qfano/arith.hpp"

namespace qfano {

/// Terminal cyclic quotient point of type 1/r(1,-1,b), stored with 0 < b <= r/2.
class OrbifoldPoint {
public:
    /// Accepts any b coprime to r with 0 < b < r and folds b > r/2 to r - b.
    OrbifoldPoint(int b, int r);

    int b() const { return b_; }
    int r() const { return r_; }

    /// r - 1/r, the point's contribution to the singularity sum.
    Rational cost() const;

    std::string str() const;

    // Canonical order: by r, then b.
    friend auto operator<=>(const OrbifoldPoint &x, const OrbifoldPoint &y)
    {
        if (auto c = x.r_ <=> y.r_; c != 0)
            return c;
        return x.b_ <=> y.b_;
    }
    friend bool operator==(const OrbifoldPoint &, const OrbifoldPoint &) = default;

private:
    int b_;
    int r_;
};

/*
 * Finite multiset of orbifold points kept in canonical sorted order, so
 * two baskets built from permutations of the same points compare equal.
 * The empty basket is the Gorenstein case.
 *
 * Text grammar: comma-separated "b/r" pairs, e.g. "1/3,2/7,3/7"; the
 * empty string is the empty basket.
 */
class Basket {
public:
    Basket() = default;
    explicit Basket(std::vector<OrbifoldPoint> points);

    static Basket parse(std::string_view text);

    const std::vector<OrbifoldPoint> &points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// Sorted multiset of the r's.
    std::vector<int> r_values() const;

    /// "1/3,2/7,3/7"
    std::string str() const;
    /// "3,7^2"
    std::string r_set_str() const;

    friend auto operator<=>(const Basket &, const Basket &) = default;
    friend bool operator==(const Basket &, const Basket &) = default;

private:
    std::vector<OrbifoldPoint> points_;
};

/// lcm of all r; 1 for the empty basket.
Integer gorenstein_index(const Basket &basket);

/// Sum over points of (r - 1/r).
Rational singularity_sum(const Basket &basket);

/// 24 - singularity_sum. Not clamped; may be <= 0.
Rational c2c1_from_basket(const Basket &basket);

/// Formats a sorted multiset of r's with "^k" multiplicities: {2,2,8} -> "2^2,8".
std::string format_r_set(const std::vector<int> &rs);

/// Inverse of format_r_set; returns the sorted multiset.
std::vector<int> parse_r_set(std::string_view text);

} // namespace qfano
