#pragma once

#include "zigzag/rational.hpp"

#include <vector>

namespace zigzag {

/// Power series with exact rational coefficients, truncated after t^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order); // zero series
    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int k) const { return coeffs_[k]; }
    Rat& operator[](int k) { return coeffs_[k]; }

    TruncatedSeries operator*(const TruncatedSeries& other) const; // truncates to min order
    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries inverse() const; // pre: constant term nonzero
    TruncatedSeries exp() const;     // pre: constant term zero
    TruncatedSeries log() const;     // pre: constant term one
    TruncatedSeries scale_argument(const Rat& w) const; // t -> w*t

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Rat> coeffs_; // index = power of t
};

/// Ranked interval lengths of a paintbox: alpha (up) and beta (down), each
/// weakly decreasing and positive, total at most 1.
struct RankedFrequencies {
    std::vector<Rat> alpha;
    std::vector<Rat> beta;

    RankedFrequencies() = default;
    RankedFrequencies(std::vector<Rat> a, std::vector<Rat> b); // validates

    Rat gamma() const; // 1 - sum(alpha) - sum(beta)
};

/// Complete homogeneous values as a generating series: coefficient of t^n is
/// the character's value on h_n, i.e. exp(gamma t) * prod(1 + beta_j t) /
/// prod(1 - alpha_i t) truncated after t^order.
TruncatedSeries h_values(const RankedFrequencies& rf, int order);

/// Power-sum values, indexed so that the n-th entry is p_n (entry 0 is
/// unused): p_1 = 1 and, for n >= 2, sum(alpha_i^n) + (-1)^(n-1) sum(beta_j^n).
std::vector<Rat> p_values(const RankedFrequencies& rf, int max_n);

/// Schur value via the h-determinant det[h_{lambda_i - i + j}].  Pre:
/// weakly decreasing positive parts.
Rat schur_value(const RankedFrequencies& rf, const std::vector<int>& partition);

} // namespace zigzag
