#include "zigzag/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace zigzag {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(order + 1, Rat(0));
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    TruncatedSeries out(std::min(order(), other.order()));
    for (int i = 0; i <= out.order(); ++i)
        for (int j = 0; i + j <= out.order(); ++j) out[i + j] += coeffs_[i] * other[j];
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    TruncatedSeries out(std::min(order(), other.order()));
    for (int i = 0; i <= out.order(); ++i) out[i] = coeffs_[i] + other[i];
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] == 0) throw std::invalid_argument("inverse: constant term is zero");
    TruncatedSeries out(order());
    out[0] = 1 / coeffs_[0];
    for (int n = 1; n <= order(); ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += coeffs_[k] * out[n - k];
        out[n] = -acc / coeffs_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (coeffs_[0] != 0) throw std::invalid_argument("exp: constant term must be zero");
    TruncatedSeries out(order());
    out[0] = 1;
    for (int n = 1; n <= order(); ++n) { // n*g_n = sum k*f_k*g_{n-k}
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += Rat(k) * coeffs_[k] * out[n - k];
        out[n] = acc / n;
    }
    return out;
}

TruncatedSeries TruncatedSeries::log() const {
    if (coeffs_[0] != 1) throw std::invalid_argument("log: constant term must be one");
    TruncatedSeries out(order());
    for (int n = 1; n <= order(); ++n) { // n*f_n = n*h_n - sum_{k<n} k*f_k*h_{n-k}
        Rat acc = Rat(n) * coeffs_[n];
        for (int k = 1; k < n; ++k) acc -= Rat(k) * out[k] * coeffs_[n - k];
        out[n] = acc / n;
    }
    return out;
}

TruncatedSeries TruncatedSeries::scale_argument(const Rat& w) const {
    TruncatedSeries out(order());
    Rat power = 1;
    for (int n = 0; n <= order(); ++n) {
        out[n] = coeffs_[n] * power;
        power *= w;
    }
    return out;
}

RankedFrequencies::RankedFrequencies(std::vector<Rat> a, std::vector<Rat> b)
    : alpha(std::move(a)), beta(std::move(b)) {
    Rat total = 0;
    for (const auto* list : {&alpha, &beta})
        for (std::size_t i = 0; i < list->size(); ++i) {
            if ((*list)[i] <= 0) throw std::invalid_argument("ranked frequencies must be positive");
            if (i > 0 && (*list)[i] > (*list)[i - 1])
                throw std::invalid_argument("ranked frequencies must be weakly decreasing");
            total += (*list)[i];
        }
    if (total > 1) throw std::invalid_argument("ranked frequencies sum above 1");
}

Rat RankedFrequencies::gamma() const {
    Rat total = 0;
    for (const auto& x : alpha) total += x;
    for (const auto& x : beta) total += x;
    return Rat(1) - total;
}

TruncatedSeries h_values(const RankedFrequencies& rf, int order) {
    TruncatedSeries gamma_t(order);
    if (order >= 1) gamma_t[1] = rf.gamma();
    TruncatedSeries series = gamma_t.exp();
    for (const auto& b : rf.beta) {
        TruncatedSeries lin = TruncatedSeries::one(order);
        if (order >= 1) lin[1] = b;
        series = series * lin;
    }
    for (const auto& a : rf.alpha) {
        TruncatedSeries geo(order); // 1/(1 - a t)
        Rat power = 1;
        for (int n = 0; n <= order; ++n) {
            geo[n] = power;
            power *= a;
        }
        series = series * geo;
    }
    return series;
}

std::vector<Rat> p_values(const RankedFrequencies& rf, int max_n) {
    if (max_n < 1) throw std::invalid_argument("p_values: max_n must be >= 1");
    // indexed by subscript like h_values; slot 0 has no meaning
    std::vector<Rat> out(max_n + 1);
    out[1] = 1;
    for (int n = 2; n <= max_n; ++n) {
        Rat acc = 0;
        for (const auto& a : rf.alpha) acc += rat_pow(a, n);
        Rat bsum = 0;
        for (const auto& b : rf.beta) bsum += rat_pow(b, n);
        out[n] = acc + (n % 2 == 1 ? bsum : -bsum);
    }
    return out;
}

namespace {

Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rat factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

} // namespace

Rat schur_value(const RankedFrequencies& rf, const std::vector<int>& partition) {
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] < 1) throw std::invalid_argument("schur_value: parts must be positive");
        if (i > 0 && partition[i] > partition[i - 1])
            throw std::invalid_argument("schur_value: parts must be weakly decreasing");
    }
    const int l = static_cast<int>(partition.size());
    if (l == 0) return 1;
    const int max_index = partition[0] + l;
    const TruncatedSeries h = h_values(rf, max_index);
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const int idx = partition[i] - (i + 1) + (j + 1);
            m[i][j] = idx < 0 ? Rat(0) : h[idx];
        }
    return determinant(std::move(m));
}

} // namespace zigzag
