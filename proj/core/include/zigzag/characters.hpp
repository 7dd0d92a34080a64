#pragma once

#include "zigzag/composition.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/qsym.hpp"
#include "zigzag/rational.hpp"
#include "zigzag/series.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace zigzag {

/// Normalized nonnegative multiplicative F-functional, presented through its
/// values p(c) on basis elements.  Evaluations are cached; instances share
/// state on copy and are safe to call concurrently.
class CharacterEvaluator {
public:
    using Fn = std::function<Rat(const Composition&)>;

    CharacterEvaluator(std::string provenance, Fn fn);

    const std::string& provenance() const;
    Rat operator()(const Composition& c) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// Value 1 on one-row compositions, 0 elsewhere.
CharacterEvaluator elementary_plus();
/// Value 1 on one-column compositions, 0 elsewhere.
CharacterEvaluator elementary_minus();
/// Value 1/n! in degree n; the empty-paintbox character.
CharacterEvaluator uniform_character();

/// Mix factor characters along consecutive splittings: the piece sizes are
/// weighted geometrically by the factor weights.  Pre: weights nonnegative
/// and summing to 1, sizes match.  Degree-n evaluation costs O(k n^2) cached
/// factor calls.
CharacterEvaluator m_mix(std::vector<CharacterEvaluator> factors, std::vector<Rat> weights);

/// The paintbox's character: up intervals mix an elementary_plus factor, down
/// intervals an elementary_minus factor, and each positive-mass complementary
/// gap a uniform_character factor, in spatial order, weighted by length.
CharacterEvaluator paintbox_character(const OrientedPaintbox& pb);

/// paintbox_character(pb)(c); one-off convenience.
Rat evaluate(const OrientedPaintbox& pb, const Composition& c);

struct RecursionReport {
    bool passed = true;
    std::vector<std::string> failures; // offending compositions, printable
};

/// Check p(empty) = 1 and p(c) = sum of p over successors for all |c| < depth.
RecursionReport check_recursion(const CharacterEvaluator& chi, int depth);

/// Linear extension to an F-basis element.  Pre: F basis.
Rat evaluate_qsym(const CharacterEvaluator& chi, const QSymElement& a);

/// Sorted interval lengths per orientation: alpha from up, beta from down.
RankedFrequencies rank(const OrientedPaintbox& pb);

/// Probability that an a-handed shuffle of n cards produces any one fixed
/// permutation with k-1 descents: binom(n+a-k, n) / a^n.  Pre: 1 <= k <= n,
/// a >= 1.
Rat a_shuffle_pmf(int n, int k, long a);

} // namespace zigzag
