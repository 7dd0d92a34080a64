#include "zigzag/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zigzag {

double SampleStream::next() {
    while (true) {
        const std::uint64_t bits = gen_() >> 11; // 53 significant bits
        if (bits == 0) continue;                 // keep the value inside ]0,1[
        if (seen_.insert(bits).second) return static_cast<double>(bits) * 0x1.0p-53;
    }
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Permutation ArrangementPrefix::permutation(int k) const {
    if (k < 1 || k > size()) throw std::out_of_range("permutation: k out of range");
    std::vector<int> row;
    row.reserve(k);
    for (int m = 1; m <= k; ++m) row.insert(row.begin() + (initial_ranks[m - 1] - 1), m);
    return Permutation(std::move(row));
}

namespace {

// A paintbox flattened to doubles for point classification.
struct Classifier {
    std::vector<double> lefts, rights;
    std::vector<Orientation> orients;

    explicit Classifier(const OrientedPaintbox& pb) {
        for (const auto& iv : pb.intervals()) {
            lefts.push_back(to_double(iv.left));
            rights.push_back(to_double(iv.right));
            orients.push_back(iv.orient);
        }
    }

    // Index of the open interval containing xi, or -1 for the complement.
    int component(double xi) const {
        const auto it = std::upper_bound(lefts.begin(), lefts.end(), xi);
        if (it == lefts.begin()) return -1;
        const int idx = static_cast<int>(it - lefts.begin()) - 1;
        return xi > lefts[idx] && xi < rights[idx] ? idx : -1; // intervals are open
    }
};

struct Point {
    double xi;
    int comp;
};

std::vector<Point> draw_points(const Classifier& cl, int n, std::uint64_t seed) {
    SampleStream stream(seed);
    std::vector<Point> points(n);
    for (auto& p : points) {
        p.xi = stream.next();
        p.comp = cl.component(p.xi);
    }
    return points;
}

// Left-of test for indices i, j (0-based) per the three ordering rules.
bool left_of(const Classifier& cl, const std::vector<Point>& pts, int i, int j) {
    const Point& a = pts[i];
    const Point& b = pts[j];
    if (a.comp == b.comp && a.comp != -1)
        return cl.orients[a.comp] == Orientation::up ? i < j : i > j;
    // Distinct components or complement: decided by position along [0,1].
    // An interval's points compare through its left endpoint; a complement
    // point tying that endpoint exactly lies left of all of them.
    const double pa = a.comp == -1 ? a.xi : cl.lefts[a.comp];
    const double pb = b.comp == -1 ? b.xi : cl.lefts[b.comp];
    if (pa != pb) return pa < pb;
    return a.comp == -1 && b.comp != -1;
}

// Indices 0..k-1 sorted left to right; position p holds the value order[p]+1.
std::vector<int> order_prefix(const Classifier& cl, const std::vector<Point>& pts, int k) {
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return left_of(cl, pts, i, j); });
    return order;
}

Composition shape_of_order(const std::vector<int>& order) {
    std::vector<int> parts;
    int run = 1;
    for (std::size_t p = 1; p < order.size(); ++p) {
        if (order[p - 1] < order[p]) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

struct Fenwick {
    std::vector<int> tree;
    explicit Fenwick(int n) : tree(n + 1, 0) {}
    void add(int i) {
        for (++i; i < static_cast<int>(tree.size()); i += i & -i) ++tree[i];
    }
    int prefix(int i) const { // count of inserted values <= i
        int total = 0;
        for (++i; i > 0; i -= i & -i) total += tree[i];
        return total;
    }
};

// r_k = rank of k within the order restricted to [k], recovered from the
// positions in the full order.
std::vector<int> ranks_from_order(const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    Fenwick fw(n);
    std::vector<int> ranks(n);
    for (int idx = 0; idx < n; ++idx) {
        fw.add(pos[idx]);
        ranks[idx] = fw.prefix(pos[idx]);
    }
    return ranks;
}

void require_positive(int n) {
    if (n < 1) throw std::invalid_argument("sample size must be >= 1");
}

} // namespace

ArrangementPrefix sample_arrangement(const OrientedPaintbox& pb, int n, std::uint64_t seed) {
    require_positive(n);
    const Classifier cl(pb);
    const auto points = draw_points(cl, n, seed);
    return {ranks_from_order(order_prefix(cl, points, n))};
}

std::map<Composition, std::int64_t> sample_shape_counts(const OrientedPaintbox& pb, int n,
                                                        std::int64_t trials, std::uint64_t seed) {
    require_positive(n);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const Classifier cl(pb);
    std::map<Composition, std::int64_t> counts;
    for (std::int64_t t = 0; t < trials; ++t) {
        const auto points = draw_points(cl, n, trial_seed(seed, static_cast<std::uint64_t>(t)));
        counts[shape_of_order(order_prefix(cl, points, n))] += 1;
    }
    return counts;
}

std::map<Composition, double> empirical_pmf(const OrientedPaintbox& pb, int n, std::int64_t trials,
                                            std::uint64_t seed) {
    std::map<Composition, double> pmf;
    for (const auto& [shape, count] : sample_shape_counts(pb, n, trials, seed))
        pmf[shape] = static_cast<double>(count) / static_cast<double>(trials);
    return pmf;
}

std::vector<std::pair<int, Rat>> lln_trajectory(const OrientedPaintbox& pb,
                                                const std::vector<int>& checkpoints,
                                                std::uint64_t seed) {
    if (checkpoints.empty()) return {};
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 2) throw std::invalid_argument("checkpoints must be >= 2");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("checkpoints must be strictly increasing");
    }
    const Classifier cl(pb);
    const auto points = draw_points(cl, checkpoints.back(), seed);
    std::vector<std::pair<int, Rat>> trajectory;
    trajectory.reserve(checkpoints.size());
    for (int k : checkpoints) {
        const auto shape = shape_of_order(order_prefix(cl, points, k));
        trajectory.emplace_back(k, paintbox_distance(iota_embedding(shape), pb));
    }
    return trajectory;
}

std::vector<double> heights(const OrientedPaintbox& pb, int n, std::uint64_t seed) {
    require_positive(n);
    const Classifier cl(pb);
    const auto points = draw_points(cl, n, seed);
    const auto order = order_prefix(cl, points, n);
    std::vector<double> phi_hat(n);
    for (int p = 0; p < n; ++p) phi_hat[order[p]] = static_cast<double>(p) / n;
    return phi_hat;
}

HeightEncoding encode_heights(const OrientedPaintbox& pb, int n, std::uint64_t seed) {
    require_positive(n);
    const Classifier cl(pb);
    const auto points = draw_points(cl, n, seed);
    HeightEncoding enc;
    enc.phi.reserve(n);
    enc.mark.reserve(n);
    for (const auto& p : points) {
        if (p.comp == -1) {
            enc.phi.emplace_back(p.xi); // dyadic, hence exact
            enc.mark.push_back(Mark::dot);
        } else {
            enc.phi.push_back(pb.intervals()[p.comp].initial_point());
            enc.mark.push_back(pb.intervals()[p.comp].orient == Orientation::up ? Mark::up
                                                                                : Mark::down);
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (enc.phi[i] != enc.phi[j]) return enc.phi[i] < enc.phi[j];
        return i < j ? enc.mark[j] == Mark::up : enc.mark[i] != Mark::up;
    });
    enc.reconstructed = {ranks_from_order(order)};
    return enc;
}

ArrangementPrefix polya_bi_interval(double theta1, double theta2, int n, std::uint64_t seed) {
    require_positive(n);
    if (!(theta1 > 0) || !(theta2 > 0))
        throw std::invalid_argument("polya_bi_interval: thetas must be positive");
    SampleStream stream(seed);
    std::vector<int> ranks{1};
    int downs = 0, ups = 0;
    for (int m = 2; m <= n; ++m) {
        const double p_down = (theta1 + downs) / (theta1 + theta2 + downs + ups);
        if (stream.next() < p_down) {
            ranks.push_back(1);
            ++downs;
        } else {
            ranks.push_back(m);
            ++ups;
        }
    }
    return {std::move(ranks)};
}

Rat polya_down_probability(const Rat& theta1, const Rat& theta2, int downs, int ups) {
    if (theta1 <= 0 || theta2 <= 0 || downs < 0 || ups < 0)
        throw std::invalid_argument("polya_down_probability: bad arguments");
    return (theta1 + downs) / (theta1 + theta2 + downs + ups);
}

} // namespace zigzag
