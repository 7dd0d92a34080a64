#include "oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace zigzag::oracle {

namespace {

Composition shape_of(const std::vector<int>& row) {
    std::vector<int> parts;
    int run = row.empty() ? 0 : 1;
    for (std::size_t i = 1; i < row.size(); ++i) {
        if (row[i - 1] < row[i]) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    if (run > 0) parts.push_back(run);
    return Composition(std::move(parts));
}

} // namespace

std::map<Composition, std::vector<Permutation>> enumerate_by_shape(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("enumerate_by_shape: need 0 <= n <= 9");
    std::map<Composition, std::vector<Permutation>> out;
    std::vector<int> row(n);
    std::iota(row.begin(), row.end(), 1);
    do {
        out[shape_of(row)].emplace_back(row);
    } while (std::next_permutation(row.begin(), row.end()));
    return out;
}

namespace {

void merge_all(const std::vector<int>& a, std::size_t ia, const std::vector<int>& b,
               std::size_t ib, std::vector<int>& acc, std::map<Composition, Int>& tally) {
    if (ia == a.size() && ib == b.size()) {
        tally[shape_of(acc)] += 1;
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        merge_all(a, ia + 1, b, ib, acc, tally);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        merge_all(a, ia, b, ib + 1, acc, tally);
        acc.pop_back();
    }
}

} // namespace

std::map<Composition, Int> shuffle_product_oracle(const Composition& a, const Composition& b) {
    const auto rep = [](const Composition& c) {
        if (c.empty()) return std::vector<int>{};
        return enumerate_by_shape(c.size()).at(c).back().values();
    };
    std::vector<int> left = rep(a);
    std::vector<int> right = rep(b);
    for (int& v : right) v += a.size();
    std::map<Composition, Int> tally;
    std::vector<int> acc;
    merge_all(left, 0, right, 0, acc, tally);
    return tally;
}

namespace {

void splittings(const std::string& word, int n, std::size_t factor, int consumed,
                const std::vector<CharacterEvaluator>& factors, const std::vector<Rat>& weights,
                const Rat& partial, Rat& total) {
    if (factor == factors.size()) {
        if (consumed == n) total += partial;
        return;
    }
    for (int len = 0; consumed + len <= n; ++len) {
        const Composition piece =
            len == 0 ? Composition{} : from_word(word.substr(consumed, len - 1));
        const Rat term = partial * rat_pow(weights[factor], len) * factors[factor](piece);
        if (term != 0 || len == 0)
            splittings(word, n, factor + 1, consumed + len, factors, weights, term, total);
    }
}

} // namespace

Rat splitting_sum_oracle(const std::vector<CharacterEvaluator>& factors,
                         const std::vector<Rat>& weights, const Composition& c) {
    if (factors.size() != weights.size())
        throw std::invalid_argument("splitting_sum_oracle: size mismatch");
    const std::string word = c.empty() ? "" : to_word(c);
    Rat total = 0;
    splittings(word, c.size(), 0, 0, factors, weights, Rat(1), total);
    return total;
}

namespace {

// counts[{mu, lambda}] over one full S_n sweep: permutations of shape lambda
// whose values 1..|mu|, in position order, have shape mu.  Every prefix size
// is tallied in the same pass; memoized per n.
const std::map<std::pair<Composition, Composition>, Int>& restriction_counts(int n) {
    static std::map<int, std::map<std::pair<Composition, Composition>, Int>> cache;
    static std::mutex lock;
    std::scoped_lock guard(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::map<std::pair<Composition, Composition>, Int> counts;
    std::vector<int> row(n);
    std::iota(row.begin(), row.end(), 1);
    std::vector<int> prefix;
    prefix.reserve(n);
    do {
        const Composition lambda = shape_of(row);
        counts[{Composition{}, lambda}] += 1;
        for (int m = 1; m <= n; ++m) {
            prefix.clear();
            for (int v : row)
                if (v <= m) prefix.push_back(v);
            counts[{shape_of(prefix), lambda}] += 1;
        }
    } while (std::next_permutation(row.begin(), row.end()));
    return cache.emplace(n, std::move(counts)).first->second;
}

} // namespace

Int kernel_oracle(const Composition& mu, const Composition& lambda) {
    const int m = mu.size(), n = lambda.size();
    if (n > 9) throw std::invalid_argument("kernel_oracle: |lambda| <= 9 required");
    if (m > n) return 0;
    const auto& counts = restriction_counts(n);
    auto it = counts.find({mu, lambda});
    if (it == counts.end()) return 0;
    const Int matching = it->second;
    const Int shape_count = mu.empty() ? Int(1) : restriction_counts(m).at({mu, mu});
    if (matching % shape_count != 0)
        throw std::logic_error("kernel_oracle: count not divisible by shape size");
    return matching / shape_count;
}

Int eulerian(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("eulerian: need 1 <= k <= n");
    std::vector<std::vector<Int>> table(n + 1, std::vector<Int>(n + 2, Int(0)));
    table[1][1] = 1;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            table[i][j] = Int(j) * table[i - 1][j] + Int(i - j + 1) * table[i - 1][j - 1];
    return table[n][k];
}

} // namespace zigzag::oracle
