#pragma once

#include <compare>
#include <string>
#include <vector>

namespace zigzag {

/// Composition of n >= 0 with positive parts.  The default-constructed value
/// is the empty composition (n = 0).  Ordering is lexicographic by parts, so
/// e.g. (1,1,1) < (1,2) < (2,1) < (3).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    static Composition parse(const std::string& text); // "3,1,4"; "" is empty

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }            // number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool is_one_row() const { return parts_.size() <= 1; }
    bool is_one_column() const;

    std::string to_string() const; // "3,1,4"; "" for empty

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Word over {+,-} of length n-1: letter j is '+' exactly when boxes j and
/// j+1 share a row.  Pre: c nonempty.
std::string to_word(const Composition& c);

/// Inverse of to_word; the empty word yields (1).  Throws on letters outside
/// {+,-}.
Composition from_word(const std::string& word);

/// Flip +/- and reverse the word.  An involution; fixes the empty composition.
Composition conjugate(const Composition& c);

/// {c_1, c_1+c_2, ...} without the final sum n.
std::vector<int> partial_sums_proper(const Composition& c);

/// Composition of n whose proper partial sums are exactly `descents`
/// (strictly increasing values in [1, n-1]).
Composition composition_from_descents(int n, const std::vector<int>& descents);

/// All compositions of n in lexicographic order; 2^(n-1) of them for n >= 1,
/// just the empty composition for n = 0.
std::vector<Composition> compositions_of(int n);

} // namespace zigzag
