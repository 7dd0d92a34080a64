#pragma once

#include "zigzag/composition.hpp"
#include "zigzag/rational.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zigzag {

enum class Orientation { up, down };

struct OrientedInterval {
    Rat left;
    Rat right;
    Orientation orient;

    Rat length() const { return right - left; }
    /// The endpoint the interval's points accumulate toward: left for up,
    /// right for down.
    Rat initial_point() const { return orient == Orientation::up ? left : right; }

    bool operator==(const OrientedInterval&) const = default;
};

/// Finitely many disjoint open subintervals of ]0,1[, each marked up or
/// down.  Touching endpoints are allowed; overlap is not.  Stored sorted by
/// left endpoint.
class OrientedPaintbox {
public:
    OrientedPaintbox() = default; // the empty paintbox
    explicit OrientedPaintbox(std::vector<OrientedInterval> intervals);

    const std::vector<OrientedInterval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    Rat total_length() const;
    bool finitary() const { return total_length() == 1; }

    /// Maximal complementary segments [a,b] with b > a, in spatial order,
    /// including the ends [0, first) and (last, 1] when nondegenerate.
    std::vector<std::pair<Rat, Rat>> gaps() const;

    std::string to_string() const; // file format, one interval per line

    bool operator==(const OrientedPaintbox&) const = default;

private:
    std::vector<OrientedInterval> intervals_;
};

struct PaintboxParseError : std::runtime_error {
    PaintboxParseError(int line, const std::string& what);
    int line;
};

/// One interval per line: "left right orientation" with rationals "p/q" (or
/// bare integers) and orientation "up"/"down"; lines must be sorted by left
/// endpoint.  The single keyword line "empty" denotes the empty paintbox;
/// a file with no interval lines at all is rejected.
OrientedPaintbox parse_paintbox(std::istream& in);
OrientedPaintbox parse_paintbox(const std::string& text);

/// Reflect through x -> 1-x and swap orientations.
OrientedPaintbox mirror(const OrientedPaintbox& pb);

/// Scale the word's +/- clusters onto ]0,1[: cluster i of length l becomes
/// an interval of length l/(n-1), up for '+' clusters, down for '-'.
/// Pre: |c| >= 2.  The result is finitary.
OrientedPaintbox iota_embedding(const Composition& c);

/// Hausdorff-type distance: the largest over both orientations of the
/// Hausdorff distance between the closed complements of the two up (resp.
/// down) sets in [0,1].  Exact; symmetric; zero iff equal.
Rat paintbox_distance(const OrientedPaintbox& a, const OrientedPaintbox& b);

/// Atoms of the quasi-uniform measure: (location, mass) with mass > 0,
/// sorted by location; intervals sharing an initial point merge.
std::vector<std::pair<Rat, Rat>> quasi_uniform_atoms(const OrientedPaintbox& pb);

/// nu[0,x]: atom masses with location <= x plus Lebesgue measure of the
/// complement within [0,x].
Rat quasi_uniform_cdf(const OrientedPaintbox& pb, const Rat& x);

/// nu[0,x[: as above with strict location < x.
Rat quasi_uniform_cdf_left(const OrientedPaintbox& pb, const Rat& x);

} // namespace zigzag
