#pragma once

#include "zigzag/composition.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/permutation.hpp"
#include "zigzag/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <unordered_set>
#include <vector>

namespace zigzag {

/// Seeded stream of 53-bit uniforms in ]0,1[, pairwise distinct within the
/// stream (collisions are redrawn).  mt19937_64 underneath, so the sequence
/// is identical across platforms for a given seed.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : gen_(seed) {}
    double next();

private:
    std::mt19937_64 gen_;
    std::unordered_set<std::uint64_t> seen_;
};

/// Independent per-trial seed derived from (seed, trial) by splitmix64.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Coherent prefix of an infinite arrangement, stored as the stream of
/// initial ranks r_k in [1..k]: the value k enters position r_k of the order
/// on [k].
struct ArrangementPrefix {
    std::vector<int> initial_ranks;

    int size() const { return static_cast<int>(initial_ranks.size()); }
    Permutation permutation(int k) const; // pre: 1 <= k <= size
    Composition shape(int k) const { return zigzag_shape(permutation(k)); }
};

/// Order n points: draw xi_1..xi_n, place i left of j when their components
/// differ (or either is in the complement) and xi_i < xi_j, ascending in
/// index within an up interval, descending within a down interval.
ArrangementPrefix sample_arrangement(const OrientedPaintbox& pb, int n, std::uint64_t seed);

/// Shape counts over `trials` independent arrangements of [n]; each trial's
/// stream is seeded by trial_seed(seed, trial).
std::map<Composition, std::int64_t> sample_shape_counts(const OrientedPaintbox& pb, int n,
                                                        std::int64_t trials, std::uint64_t seed);

/// sample_shape_counts normalized to frequencies.
std::map<Composition, double> empirical_pmf(const OrientedPaintbox& pb, int n,
                                            std::int64_t trials, std::uint64_t seed);

/// One random path: for each checkpoint k, the distance between the scaled
/// shape embedding of the k-prefix and pb.  Pre: checkpoints ascending, each
/// >= 2.
std::vector<std::pair<int, Rat>> lln_trajectory(const OrientedPaintbox& pb,
                                                const std::vector<int>& checkpoints,
                                                std::uint64_t seed);

/// Empirical heights: entry j-1 holds (position of j in the order on [n]
/// minus 1) / n, an estimate of where j's interval sweeps to.
std::vector<double> heights(const OrientedPaintbox& pb, int n, std::uint64_t seed);

enum class Mark { up, down, dot };

struct HeightEncoding {
    std::vector<Rat> phi;             // initial point of the interval hit, or the point itself
    std::vector<Mark> mark;           // orientation hit, or dot on the complement
    ArrangementPrefix reconstructed;  // rebuilt from (phi, mark) alone
};

/// Encode each point by (phi_j, s_j) and rebuild the arrangement using only
/// that data: i (< j) sits left of j iff phi_i < phi_j, or phi_i = phi_j and
/// s_j is up.  Matches sample_arrangement(pb, n, seed) exactly.
HeightEncoding encode_heights(const OrientedPaintbox& pb, int n, std::uint64_t seed);

/// Sequential urn arrangement: each new integer enters at the bottom (rank
/// 1) with probability (theta1 + downs)/(theta1 + theta2 + downs + ups),
/// counting earlier non-trivial steps, else at the top.  Pre: thetas > 0,
/// n >= 1.
ArrangementPrefix polya_bi_interval(double theta1, double theta2, int n, std::uint64_t seed);

/// The exact step law above, for table output and tests.
Rat polya_down_probability(const Rat& theta1, const Rat& theta2, int downs, int ups);

} // namespace zigzag
