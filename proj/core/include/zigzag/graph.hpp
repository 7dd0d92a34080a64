#pragma once

#include "zigzag/composition.hpp"
#include "zigzag/rational.hpp"

#include <vector>

namespace zigzag {

/// The n+1 compositions covering c (n = |c|): each part incremented, a new
/// leading part 1, and every split of a part into two with the left half
/// incremented.  Duplicate-free by construction.
std::vector<Composition> successors(const Composition& c);

/// Compositions covered by c: one per +/- cluster of the word (delete one
/// letter of the cluster).  (1) is covered by the empty composition only.
std::vector<Composition> predecessors(const Composition& c);

/// Number of standard paths from the empty composition up to c; equals the
/// number of permutations with zigzag shape c.  Memoized, safe to call
/// concurrently.
const Int& dimension(const Composition& c);

/// Number of ascending paths mu -> lambda.  0 when no path exists; 1 when
/// mu == lambda.  Word-level DP over subwords of lambda's word.
Int path_count(const Composition& mu, const Composition& lambda);

/// path_count(mu, lambda) / dimension(lambda), exact.
Rat martin_kernel(const Composition& mu, const Composition& lambda);

} // namespace zigzag
