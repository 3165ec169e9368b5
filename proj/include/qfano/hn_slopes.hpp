#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfano/arith.hpp"

namespace qfano {

/// Graded piece of a filtration of the tangent sheaf: c1 = degree * A, rank = rank.
struct SlopePiece {
    int degree = 0;
    int rank = 0;

    friend auto operator<=>(const SlopePiece &, const SlopePiece &) = default;
};

/// A candidate Harder-Narasimhan shape for a rank 3 tangent sheaf with c1 = q A.
struct HNType {
    int q = 0;
    std::vector<SlopePiece> pieces;

    const SlopePiece &destabilizing() const { return pieces.front(); }
    std::string str() const; // "(4,2)(1,1)"

    friend auto operator<=>(const HNType &, const HNType &) = default;
};

/*
 * Upper bound imposed on a rank-one first piece.
 *
 * Canonical: 2 q1 < q (strict). Terminal additionally requires
 * (2 r_X + 1) q1 <= r_X q for the given Gorenstein index.
 */
struct SlopeCapRule {
    enum class Kind { Canonical, Terminal } kind = Kind::Canonical;
    int gorenstein_index = 1;

    static SlopeCapRule canonical() { return {}; }
    static SlopeCapRule terminal(int gorenstein_index) { return {Kind::Terminal, gorenstein_index}; }
};

/// All HN types of length 2 or 3 with q_i >= 1, strictly decreasing slopes,
/// q1/r1 > q/3 and the rank-one cap. Sorted.
std::vector<HNType> hn_types(int q, SlopeCapRule cap = SlopeCapRule::canonical());

/// Distinct (q1, r1) over the given types, sorted by (r1, q1).
std::vector<std::pair<int, int>> destabilizing_pairs(const std::vector<HNType> &types);

/*
 * b = 6 / (2 - (3 q1 - q r1)^2 / (r1 (3 - r1) q^2)), the constant in
 * c1^3 <= b c2c1 coming from a destabilizing pair (q1, r1).
 * Throws std::domain_error unless r1 is 1 or 2 and 3 q1 > q r1.
 */
Rational langer_bound(int q, int q1, int r1);

/// r1 -> max langer_bound over HN types of this q with that rank. Absent
/// key means no destabilizing type of that rank. Needs 4 <= q <= 8.
std::map<int, Rational> table2(int q);

struct KMBound {
    Rational value;
    std::string provenance;
};

/// Ratio bound c1^3 <= b c2c1 for index q.
KMBound km_bound(int q);

struct ConeData {
    int qL = 0;
    int qX = 0;
    bool terminal = false;
    bool canonical = false;
    Rational cap_ratio;
};

/// Normal generalised cone Z_m over a Fano manifold of index i.
ConeData cone_data(int i, int m);

struct SlopeCaps {
    Rational canonical_cap;
    Rational terminal_cap;
};

/// Largest c1(L)/c1(X) for a rank one subsheaf L, canonical and terminal cases.
SlopeCaps slope_caps(int gorenstein_index);

} // namespace qfano
