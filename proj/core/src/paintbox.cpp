#include "zigzag/paintbox.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zigzag {

OrientedPaintbox::OrientedPaintbox(std::vector<OrientedInterval> intervals)
    : intervals_(std::move(intervals)) {
    std::sort(intervals_.begin(), intervals_.end(),
              [](const OrientedInterval& a, const OrientedInterval& b) { return a.left < b.left; });
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (iv.left < 0 || iv.right > 1 || iv.left >= iv.right)
            throw std::invalid_argument("paintbox interval outside ]0,1[ or empty");
        if (i > 0 && intervals_[i - 1].right > iv.left)
            throw std::invalid_argument("paintbox intervals overlap");
    }
}

Rat OrientedPaintbox::total_length() const {
    Rat total = 0;
    for (const auto& iv : intervals_) total += iv.length();
    return total;
}

std::vector<std::pair<Rat, Rat>> OrientedPaintbox::gaps() const {
    std::vector<std::pair<Rat, Rat>> out;
    Rat cursor = 0;
    for (const auto& iv : intervals_) {
        if (cursor < iv.left) out.emplace_back(cursor, iv.left);
        cursor = iv.right;
    }
    if (cursor < 1) out.emplace_back(cursor, Rat(1));
    return out;
}

std::string OrientedPaintbox::to_string() const {
    if (intervals_.empty()) return "empty\n";
    std::string out;
    for (const auto& iv : intervals_) {
        out += format_rat(iv.left);
        out += ' ';
        out += format_rat(iv.right);
        out += ' ';
        out += iv.orient == Orientation::up ? "up" : "down";
        out += '\n';
    }
    return out;
}

PaintboxParseError::PaintboxParseError(int line_no, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

OrientedPaintbox parse_paintbox(std::istream& in) {
    std::vector<OrientedInterval> intervals;
    std::string line;
    int line_no = 0;
    bool empty_keyword = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string first;
        if (!(row >> first)) continue; // blank line
        if (first == "empty") {
            std::string extra;
            if (row >> extra) throw PaintboxParseError(line_no, "unexpected token after 'empty'");
            empty_keyword = true;
            continue;
        }
        std::string second, third, extra;
        if (!(row >> second >> third))
            throw PaintboxParseError(line_no, "expected 'left right orientation'");
        if (row >> extra) throw PaintboxParseError(line_no, "unexpected trailing token '" + extra + "'");
        OrientedInterval iv;
        try {
            iv.left = parse_rat(first);
            iv.right = parse_rat(second);
        } catch (const std::invalid_argument& e) {
            throw PaintboxParseError(line_no, e.what());
        }
        if (third == "up") {
            iv.orient = Orientation::up;
        } else if (third == "down") {
            iv.orient = Orientation::down;
        } else {
            throw PaintboxParseError(line_no, "orientation must be 'up' or 'down', got '" + third + "'");
        }
        if (iv.left < 0 || iv.right > 1 || iv.left >= iv.right)
            throw PaintboxParseError(line_no, "interval must satisfy 0 <= left < right <= 1");
        if (!intervals.empty()) {
            if (intervals.back().left > iv.left)
                throw PaintboxParseError(line_no, "intervals must be sorted by left endpoint");
            if (intervals.back().right > iv.left)
                throw PaintboxParseError(line_no, "interval overlaps the previous one");
        }
        intervals.push_back(std::move(iv));
    }
    if (empty_keyword && !intervals.empty())
        throw PaintboxParseError(line_no, "'empty' cannot be combined with intervals");
    if (!empty_keyword && intervals.empty())
        throw PaintboxParseError(line_no, "no intervals found (use the keyword 'empty' for the empty paintbox)");
    return OrientedPaintbox(std::move(intervals));
}

OrientedPaintbox parse_paintbox(const std::string& text) {
    std::istringstream in(text);
    return parse_paintbox(in);
}

OrientedPaintbox mirror(const OrientedPaintbox& pb) {
    std::vector<OrientedInterval> flipped;
    flipped.reserve(pb.intervals().size());
    for (const auto& iv : pb.intervals())
        flipped.push_back({Rat(1) - iv.right, Rat(1) - iv.left,
                           iv.orient == Orientation::up ? Orientation::down : Orientation::up});
    return OrientedPaintbox(std::move(flipped));
}

OrientedPaintbox iota_embedding(const Composition& c) {
    if (c.size() < 2) throw std::invalid_argument("iota_embedding: need at least two boxes");
    const std::string word = to_word(c);
    const int denom = c.size() - 1;
    std::vector<OrientedInterval> intervals;
    std::size_t i = 0;
    int consumed = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        const int len = static_cast<int>(j - i);
        intervals.push_back({Rat(consumed, denom), Rat(consumed + len, denom),
                             word[i] == '+' ? Orientation::up : Orientation::down});
        consumed += len;
        i = j;
    }
    return OrientedPaintbox(std::move(intervals));
}

namespace {

// Closed complement of the union of one orientation's intervals within
// [0,1]; may contain degenerate segments.  Always nonempty (holds 0 and 1).
std::vector<std::pair<Rat, Rat>> closed_complement(const OrientedPaintbox& pb, Orientation o) {
    std::vector<std::pair<Rat, Rat>> segs;
    Rat cursor = 0;
    for (const auto& iv : pb.intervals()) {
        if (iv.orient != o) continue;
        segs.emplace_back(cursor, iv.left); // may be degenerate
        cursor = iv.right;
    }
    segs.emplace_back(cursor, Rat(1));
    return segs;
}

Rat point_distance(const Rat& x, const std::vector<std::pair<Rat, Rat>>& segs) {
    Rat best = 2;
    for (const auto& [a, b] : segs) {
        if (x < a) {
            best = std::min(best, Rat(a - x));
            break; // segments sorted; later ones only farther
        }
        if (x <= b) return 0;
        best = std::min(best, Rat(x - b));
    }
    return best;
}

// sup over x in A of dist(x, B); both closed unions of sorted segments
// containing 0 and 1.  The sup is attained at an A-endpoint or at a B-gap
// midpoint lying in A.
Rat one_sided(const std::vector<std::pair<Rat, Rat>>& A, const std::vector<std::pair<Rat, Rat>>& B) {
    Rat worst = 0;
    for (const auto& [a, b] : A) {
        worst = std::max(worst, point_distance(a, B));
        worst = std::max(worst, point_distance(b, B));
    }
    for (std::size_t i = 0; i + 1 < B.size(); ++i) {
        const Rat mid = (B[i].second + B[i + 1].first) / 2;
        if (point_distance(mid, A) == 0) worst = std::max(worst, point_distance(mid, B));
    }
    return worst;
}

} // namespace

Rat paintbox_distance(const OrientedPaintbox& a, const OrientedPaintbox& b) {
    Rat dist = 0;
    for (const auto o : {Orientation::up, Orientation::down}) {
        const auto ca = closed_complement(a, o);
        const auto cb = closed_complement(b, o);
        dist = std::max({dist, one_sided(ca, cb), one_sided(cb, ca)});
    }
    return dist;
}

std::vector<std::pair<Rat, Rat>> quasi_uniform_atoms(const OrientedPaintbox& pb) {
    std::map<Rat, Rat> by_location; // a down and an up interval may share their initial point
    for (const auto& iv : pb.intervals()) by_location[iv.initial_point()] += iv.length();
    return {by_location.begin(), by_location.end()};
}

namespace {

Rat quasi_uniform_mass(const OrientedPaintbox& pb, const Rat& x, bool include_x) {
    if (x < 0 || x > 1) throw std::invalid_argument("quasi_uniform_cdf: x outside [0,1]");
    Rat mass = x; // Lebesgue part plus interval corrections below
    for (const auto& iv : pb.intervals()) {
        if (iv.left < x) mass -= std::min(iv.right, x) - iv.left; // carve out the covered part
        const Rat p = iv.initial_point();
        if (p < x || (include_x && p == x)) mass += iv.length();
    }
    return mass;
}

} // namespace

Rat quasi_uniform_cdf(const OrientedPaintbox& pb, const Rat& x) {
    return quasi_uniform_mass(pb, x, true);
}

Rat quasi_uniform_cdf_left(const OrientedPaintbox& pb, const Rat& x) {
    return quasi_uniform_mass(pb, x, false);
}

} // namespace zigzag
