#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfano/arith.hpp"
#include "qfano/basket.hpp"

namespace qfano {

/// Which Fano index the candidate is computed for: qW (Weil) or qQ (Q-linear).
enum class IndexMode { Weil, QLinear };

std::string to_string(IndexMode mode);
IndexMode parse_index_mode(std::string_view text);

/// Raised when a formula needs gcd(q, r) = 1 and the basket violates it.
class Incompatible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The unique i in [0, r) with q*i = -t (mod r). Needs gcd(q, r) = 1 and -q < t < 0.
int local_index_tA(int q, int t, int r);

/*
 * Primitive volume A^3 from the t = -1 vanishing chi(-A) = 0:
 *
 *   A^3 = 12/((q-1)(q-2)) * (1 - c2c1/(12q) + sum_Q c_Q(-A))
 *
 * Throws std::domain_error for q < 3 and Incompatible when some r shares a
 * factor with q. The result is not checked for positivity.
 */
Rational primitive_volume(int q, const Basket &basket);

/// chi(tA) for -q < t < 0; zero for every such t on a genuine candidate.
Rational chi_tA(int q, const Basket &basket, const Rational &A3, int t);

struct CompatResult {
    bool pass = true;
    std::string reason;

    explicit operator bool() const { return pass; }
};

/// qW mode: gcd(r_X, q) = 1 and r_X * A^3 in Z>=0. qQ mode: only the integrality.
CompatResult compat_check(int q, const Basket &basket, const Rational &A3, IndexMode mode);

/// All q >= 1 with r_X * c13 / q^3 in Z>=0 (and gcd(r_X, q) = 1 in qW mode).
std::vector<int> possible_q(const Integer &gorenstein, const Rational &c13, IndexMode mode);

struct FanoCandidate {
    int q = 0;
    Basket basket;
    Rational A3;
    Rational c13;
    Rational c2c1;
    IndexMode mode = IndexMode::Weil;

    Rational ratio() const { return c13 / c2c1; }
    Rational h0() const;

    /// Builds a candidate from (q, basket) via the primitive volume formula.
    static FanoCandidate from_basket(int q, const Basket &basket, IndexMode mode);

    friend bool operator==(const FanoCandidate &, const FanoCandidate &) = default;
};

/// Canonical output order: by q, then basket.
bool canonical_less(const FanoCandidate &a, const FanoCandidate &b);

/*
 * Window "ratio_lo < c1^3/c2c1 <= ratio_hi" and search bounds for the
 * index-q enumeration. If upper_by_q has an entry for q it overrides
 * ratio_hi for that q. An empty allowed_r means every r in [2, 24].
 */
struct SearchConfig {
    std::vector<int> q_range;
    Rational ratio_lo;
    Rational ratio_hi;
    std::vector<std::pair<int, Rational>> upper_by_q;
    IndexMode mode = IndexMode::Weil;
    int max_points = 16;
    Rational c2c1_min;
    std::vector<int> allowed_r;

    Rational upper_for(int q) const;
    /// Throws std::invalid_argument on a malformed config.
    void validate() const;
};

struct SmallC2C1Config {
    Rational threshold;
    Rational ratio_bound;
    int h_depth = 1;
    IndexMode mode = IndexMode::Weil;
    int max_points = 16;
    std::vector<int> allowed_r;

    void validate() const;
};

struct SmallC2C1Candidate {
    Basket basket;
    Rational c13;
    Rational c2c1;
    std::vector<Rational> hilbert; // chi(-mK) for m = 0..h_depth
    std::vector<int> possible_q;

    friend bool operator==(const SmallC2C1Candidate &, const SmallC2C1Candidate &) = default;
};

/// Canonical output order: by basket, then c13.
bool canonical_less(const SmallC2C1Candidate &a, const SmallC2C1Candidate &b);

/*
 * Every basket (up to max_points points, singularity sum < 24 - c2c1_min,
 * r coprime to q) whose volume, compatibility and all q-1 vanishings
 * chi(tA) = 0 hold and whose ratio lies in the window. Output is sorted
 * canonically. The parallel and serial variants return identical lists.
 */
std::vector<FanoCandidate> enumerate_windowed(const SearchConfig &config);
std::vector<FanoCandidate> enumerate_windowed_serial(const SearchConfig &config);

/*
 * Pairs (basket, c1^3) with 0 < c2c1 < threshold, c1^3 = k / r_X for
 * k >= 1, c1^3 <= ratio_bound * c2c1, and h0(-K) in Z>=0 (plus chi(-mK)
 * in Z>=0 for m <= h_depth). Each carries the indices compatible with it.
 */
std::vector<SmallC2C1Candidate> enumerate_small_c2c1(const SmallC2C1Config &config);
std::vector<SmallC2C1Candidate> enumerate_small_c2c1_serial(const SmallC2C1Config &config);

} // namespace qfano
