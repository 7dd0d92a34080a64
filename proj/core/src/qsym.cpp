#include "zigzag/qsym.hpp"

#include "zigzag/permutation.hpp"

#include <mutex>
#include <stdexcept>

namespace zigzag {

QSymElement QSymElement::unit(Basis basis) { return term(basis, Composition{}, 1); }

QSymElement QSymElement::term(Basis basis, const Composition& c, const Rat& coeff) {
    QSymElement e(basis);
    e.add(c, coeff);
    return e;
}

QSymElement& QSymElement::add(const Composition& c, const Rat& coeff) {
    if (coeff == 0) return *this;
    const auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(c, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Rat QSymElement::coefficient(const Composition& c) const {
    const auto it = terms_.find(c);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> QSymElement::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [c, coeff] : terms_) {
        if (deg && *deg != c.size()) return std::nullopt;
        deg = c.size();
    }
    return deg;
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("basis mismatch");
    for (const auto& [c, coeff] : other.terms_) add(c, coeff);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("basis mismatch");
    for (const auto& [c, coeff] : other.terms_) add(c, -coeff);
    return *this;
}

QSymElement& QSymElement::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string QSymElement::to_string() const {
    if (terms_.empty()) return "0";
    const char* tag = basis_ == Basis::F ? "F" : "M";
    std::string out;
    for (const auto& [c, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += format_rat(coeff);
        out += " * ";
        out += tag;
        out += '[';
        out += c.to_string();
        out += ']';
    }
    return out;
}

namespace {

// Shuffle the values of p with the values of q shifted by |p|, tally zigzag
// shapes of the C(|p|+|q|, |p|) interleavings.
std::map<Composition, Int> shuffle_shapes(const Permutation& p, const Permutation& q) {
    const int k = p.size(), l = q.size(), n = k + l;
    std::map<Composition, Int> tally;
    std::vector<int> merged(n);
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true); // positions taking p's letters
    // iterate over all position subsets via prev_permutation on the mask
    do {
        int ip = 0, iq = 0;
        for (int pos = 0; pos < n; ++pos)
            merged[pos] = pick[pos] ? p.values()[ip++] : q.values()[iq++] + k;
        tally[zigzag_shape(Permutation(merged))] += 1;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return tally;
}

const std::map<Composition, Int>& shuffle_table(const Composition& a, const Composition& b) {
    static std::map<std::pair<Composition, Composition>, std::map<Composition, Int>> cache;
    static std::mutex mx;
    std::lock_guard lock(mx);
    const auto key = std::make_pair(a, b);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache.emplace(key, shuffle_shapes(canonical_permutation(a), canonical_permutation(b)))
        .first->second;
}

} // namespace

QSymElement f_product(const QSymElement& a, const QSymElement& b) {
    if (a.basis() != Basis::F || b.basis() != Basis::F)
        throw std::invalid_argument("f_product: operands must be in the F basis");
    QSymElement out(Basis::F);
    for (const auto& [ca, xa] : a.terms())
        for (const auto& [cb, xb] : b.terms()) {
            const Rat coeff = xa * xb;
            for (const auto& [shape, count] : shuffle_table(ca, cb))
                out.add(shape, coeff * Rat(count));
        }
    return out;
}

namespace {

// The two-piece splittings of c: cut = 0..n, the first piece being the
// subdiagram on boxes 1..cut.  The letter at the cut (if any) is dropped.
std::pair<Composition, Composition> split_at(const std::string& word, int cut) {
    const int n = static_cast<int>(word.size()) + 1;
    const Composition head = cut == 0 ? Composition{} : from_word(word.substr(0, cut - 1));
    const Composition tail = cut == n ? Composition{} : from_word(word.substr(cut));
    return {head, tail};
}

} // namespace

TensorSquare comultiply(const QSymElement& a) {
    if (a.basis() != Basis::F) throw std::invalid_argument("comultiply: F basis required");
    TensorSquare out;
    for (const auto& [c, coeff] : a.terms()) {
        if (c.empty()) {
            out[{Composition{}, Composition{}}] += coeff;
            continue;
        }
        const std::string word = to_word(c);
        for (int cut = 0; cut <= c.size(); ++cut) out[split_at(word, cut)] += coeff;
    }
    return out;
}

TensorPower comultiply_iterated(const QSymElement& a, int k) {
    if (a.basis() != Basis::F) throw std::invalid_argument("comultiply_iterated: F basis required");
    if (k < 1) throw std::invalid_argument("comultiply_iterated: k must be >= 1");
    TensorPower out;
    for (const auto& [c, coeff] : a.terms()) {
        const std::string word = c.empty() ? "" : to_word(c);
        const int n = c.size();
        // ordered cut positions 0 <= cut_1 <= ... <= cut_{k-1} <= n
        std::vector<int> cuts(k - 1, 0);
        while (true) {
            std::vector<Composition> pieces(k);
            int prev = 0;
            for (int j = 0; j < k; ++j) {
                const int next = j < k - 1 ? cuts[j] : n;
                pieces[j] = prev == next ? Composition{}
                                         : from_word(word.substr(prev, next - prev - 1));
                prev = next;
            }
            out[std::move(pieces)] += coeff;
            int bump = k - 2;
            while (bump >= 0 && cuts[bump] == n) --bump;
            if (bump < 0) break;
            const int v = cuts[bump] + 1;
            for (int j = bump; j < k - 1; ++j) cuts[j] = v;
        }
    }
    return out;
}

QSymElement involution(const QSymElement& a) {
    if (a.basis() != Basis::F) throw std::invalid_argument("involution: F basis required");
    QSymElement out(Basis::F);
    for (const auto& [c, coeff] : a.terms()) out.add(conjugate(c), coeff);
    return out;
}

std::vector<Composition> refinements_of(const Composition& c) {
    std::vector<std::vector<int>> acc{{}};
    for (int part : c.parts()) {
        std::vector<std::vector<int>> next;
        for (const auto& piece : compositions_of(part))
            for (const auto& head : acc) {
                auto joined = head;
                joined.insert(joined.end(), piece.parts().begin(), piece.parts().end());
                next.push_back(std::move(joined));
            }
        acc = std::move(next);
    }
    std::vector<Composition> out;
    out.reserve(acc.size());
    for (auto& parts : acc) out.emplace_back(std::move(parts));
    return out;
}

QSymElement f_to_m(const QSymElement& a) {
    if (a.basis() != Basis::F) throw std::invalid_argument("f_to_m: F basis required");
    QSymElement out(Basis::M);
    for (const auto& [c, coeff] : a.terms())
        for (const auto& r : refinements_of(c)) out.add(r, coeff);
    return out;
}

namespace {

// M_c in the F basis: M_c = F_c - sum of M_d over strict refinements d.
const QSymElement& m_term_in_f(const Composition& c) {
    static std::map<Composition, QSymElement> cache;
    static std::mutex mx;
    {
        std::lock_guard lock(mx);
        if (auto it = cache.find(c); it != cache.end()) return it->second;
    }
    QSymElement value = QSymElement::term(Basis::F, c);
    for (const auto& r : refinements_of(c)) {
        if (r == c) continue;
        value -= m_term_in_f(r);
    }
    std::lock_guard lock(mx);
    return cache.emplace(c, std::move(value)).first->second;
}

} // namespace

QSymElement m_to_f(const QSymElement& a) {
    if (a.basis() != Basis::M) throw std::invalid_argument("m_to_f: M basis required");
    QSymElement out(Basis::F);
    for (const auto& [c, coeff] : a.terms()) {
        QSymElement contribution = m_term_in_f(c);
        contribution *= coeff;
        out += contribution;
    }
    return out;
}

namespace {

void fill_tableau(const std::vector<int>& shape, std::vector<int>& fill, std::vector<int>& row_of,
                  int next, QSymElement& out) {
    const int n = static_cast<int>(row_of.size());
    if (next > n) {
        std::vector<int> descents;
        for (int v = 1; v < n; ++v)
            if (row_of[v] > row_of[v - 1]) descents.push_back(v);
        out.add(composition_from_descents(n, descents), 1);
        return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (fill[r] == shape[r]) continue;
        if (r > 0 && fill[r] == fill[r - 1]) continue; // column would break
        ++fill[r];
        row_of[next - 1] = static_cast<int>(r);
        fill_tableau(shape, fill, row_of, next + 1, out);
        --fill[r];
    }
}

} // namespace

QSymElement schur_to_f(const std::vector<int>& partition) {
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] < 1) throw std::invalid_argument("schur_to_f: parts must be positive");
        if (i > 0 && partition[i] > partition[i - 1])
            throw std::invalid_argument("schur_to_f: parts must be weakly decreasing");
    }
    int n = 0;
    for (int p : partition) n += p;
    QSymElement out(Basis::F);
    if (n == 0) return QSymElement::unit();
    std::vector<int> fill(partition.size(), 0);
    std::vector<int> row_of(n, 0);
    fill_tableau(partition, fill, row_of, 1, out);
    return out;
}

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        prefix.push_back(first);
        emit_partitions(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

} // namespace zigzag
