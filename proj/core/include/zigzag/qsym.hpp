#pragma once

#include "zigzag/composition.hpp"
#include "zigzag/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zigzag {

enum class Basis { F, M };

/// Finite rational linear combination of F- or M-basis elements indexed by
/// compositions.  Zero coefficients are never stored.
class QSymElement {
public:
    explicit QSymElement(Basis basis = Basis::F) : basis_(basis) {}

    static QSymElement unit(Basis basis = Basis::F); // basis element of the empty composition
    static QSymElement term(Basis basis, const Composition& c, const Rat& coeff = 1);

    Basis basis() const { return basis_; }
    const std::map<Composition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    QSymElement& add(const Composition& c, const Rat& coeff);
    Rat coefficient(const Composition& c) const;

    /// Common degree |c| of all terms; nullopt for 0 or mixed degrees.
    std::optional<int> homogeneous_degree() const;

    QSymElement& operator+=(const QSymElement& other); // pre: same basis
    QSymElement& operator-=(const QSymElement& other);
    QSymElement& operator*=(const Rat& scalar);
    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
    friend QSymElement operator*(QSymElement a, const Rat& s) { return a *= s; }

    /// Sorted terms "coeff * F[3,1,4]" joined by " + "; "0" for zero.
    std::string to_string() const;

    bool operator==(const QSymElement&) const = default;

private:
    Basis basis_;
    std::map<Composition, Rat> terms_;
};

/// Shuffle product in the F basis: expand via interleavings of fixed
/// representative permutations; representative-independent.  Pre: both in
/// the F basis.  Memoized per basis pair.
QSymElement f_product(const QSymElement& a, const QSymElement& b);

using TensorSquare = std::map<std::pair<Composition, Composition>, Rat>;
using TensorPower = std::map<std::vector<Composition>, Rat>;

/// Coproduct in the F basis: every F term of degree n contributes its n+1
/// consecutive two-piece splittings.
TensorSquare comultiply(const QSymElement& a);

/// k-fold coproduct: ordered splittings into k consecutive, possibly empty
/// pieces; C(n+k-1, k-1) terms per degree-n basis element.  Pre: k >= 1.
TensorPower comultiply_iterated(const QSymElement& a, int k);

/// Algebra automorphism F_c -> F_conjugate(c).  Pre: F basis.
QSymElement involution(const QSymElement& a);

/// Expand F terms into the M basis: F_c = sum of M_d over refinements d.
QSymElement f_to_m(const QSymElement& a);

/// Inverse change of basis via triangular elimination.  Pre: M basis.
QSymElement m_to_f(const QSymElement& a);

/// F-expansion of the Schur function s_partition: one F term per standard
/// tableau, indexed by its descent composition.  Pre: weakly decreasing
/// positive parts.
QSymElement schur_to_f(const std::vector<int>& partition);

/// Partitions of n, reverse-lexicographic, as weakly decreasing part lists.
std::vector<std::vector<int>> partitions_of(int n);

/// Thinner-than-or-equal compositions: concatenations of one composition of
/// each part.
std::vector<Composition> refinements_of(const Composition& c);

} // namespace zigzag
