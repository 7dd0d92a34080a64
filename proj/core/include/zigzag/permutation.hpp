#pragma once

#include "zigzag/composition.hpp"

#include <compare>
#include <string>
#include <vector>

namespace zigzag {

/// Permutation of [n] in one-row notation, values 1..n, 1-indexed positions.
class Permutation {
public:
    Permutation() = default; // empty permutation (n = 0)
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);
    static Permutation parse(const std::string& text); // "1,3,8,4,2,5,6,7"

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    int operator()(int pos) const { return values_[pos - 1]; }

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// Lengths of the maximal increasing runs; a composition of n.
Composition zigzag_shape(const Permutation& p);

/// {j : p(j) > p(j+1)}, ascending.
std::vector<int> descent_set(const Permutation& p);

Permutation inverse(const Permutation& p);

/// Delete the value j and rank what remains onto [n-1].  Pre: 1 <= j <= n.
Permutation restrict(const Permutation& p, int j);

/// All n+1 ways to insert the value n+1; index i holds insertion before
/// position i+1.
std::vector<Permutation> extensions(const Permutation& p);

/// Fixed representative with zigzag shape c: run j takes the block of
/// consecutive values just above run j+1's block, each run ascending, so the
/// descents land exactly on the run boundaries.
Permutation canonical_permutation(const Composition& c);

} // namespace zigzag
