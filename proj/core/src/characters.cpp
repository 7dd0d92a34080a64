#include "zigzag/characters.hpp"

#include "zigzag/graph.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace zigzag {

struct CharacterEvaluator::State {
    std::string provenance;
    Fn fn;
    std::mutex mx;
    std::map<Composition, Rat> cache;
};

CharacterEvaluator::CharacterEvaluator(std::string provenance, Fn fn)
    : state_(std::make_shared<State>()) {
    state_->provenance = std::move(provenance);
    state_->fn = std::move(fn);
}

const std::string& CharacterEvaluator::provenance() const { return state_->provenance; }

Rat CharacterEvaluator::operator()(const Composition& c) const {
    {
        std::lock_guard lock(state_->mx);
        if (auto it = state_->cache.find(c); it != state_->cache.end()) return it->second;
    }
    Rat value = state_->fn(c); // computed outside the lock; fn may recurse
    std::lock_guard lock(state_->mx);
    return state_->cache.emplace(c, std::move(value)).first->second;
}

CharacterEvaluator elementary_plus() {
    return {"elementary_plus", [](const Composition& c) { return Rat(c.is_one_row() ? 1 : 0); }};
}

CharacterEvaluator elementary_minus() {
    return {"elementary_minus", [](const Composition& c) { return Rat(c.is_one_column() ? 1 : 0); }};
}

CharacterEvaluator uniform_character() {
    return {"uniform", [](const Composition& c) { return Rat(1, factorial(c.size())); }};
}

namespace {

Rat mixed_value(const std::vector<CharacterEvaluator>& factors, const std::vector<Rat>& weights,
                const Composition& c) {
    const int n = c.size();
    const std::string word = n == 0 ? "" : to_word(c);
    // dp[b] = weighted sum over ways the factors so far consumed boxes 1..b
    std::vector<Rat> dp(n + 1, Rat(0));
    dp[0] = 1;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        std::vector<Rat> powers(n + 1);
        powers[0] = 1;
        for (int l = 1; l <= n; ++l) powers[l] = powers[l - 1] * weights[j];
        std::vector<Rat> next(n + 1, Rat(0));
        for (int b = 0; b <= n; ++b) {
            if (weights[j] == 0) { // only the empty piece contributes
                next[b] = dp[b];
                continue;
            }
            for (int l = 0; l <= b; ++l) {
                if (dp[b - l] == 0) continue;
                const Composition piece =
                    l == 0 ? Composition{} : from_word(word.substr(b - l, l - 1));
                const Rat val = factors[j](piece);
                if (val == 0) continue;
                next[b] += dp[b - l] * powers[l] * val;
            }
        }
        dp = std::move(next);
    }
    return dp[n];
}

} // namespace

CharacterEvaluator m_mix(std::vector<CharacterEvaluator> factors, std::vector<Rat> weights) {
    if (factors.size() != weights.size())
        throw std::invalid_argument("m_mix: factor/weight count mismatch");
    if (factors.empty()) throw std::invalid_argument("m_mix: at least one factor required");
    Rat total = 0;
    for (const auto& w : weights) {
        if (w < 0) throw std::invalid_argument("m_mix: weights must be nonnegative");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("m_mix: weights must sum to 1");
    std::ostringstream provenance;
    provenance << "mix(";
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j) provenance << ", ";
        provenance << format_rat(weights[j]) << "*" << factors[j].provenance();
    }
    provenance << ")";
    return {provenance.str(),
            [factors = std::move(factors), weights = std::move(weights)](const Composition& c) {
                return mixed_value(factors, weights, c);
            }};
}

CharacterEvaluator paintbox_character(const OrientedPaintbox& pb) {
    std::vector<CharacterEvaluator> factors;
    std::vector<Rat> weights;
    Rat cursor = 0;
    for (const auto& iv : pb.intervals()) {
        if (cursor < iv.left) {
            factors.push_back(uniform_character());
            weights.push_back(iv.left - cursor);
        }
        factors.push_back(iv.orient == Orientation::up ? elementary_plus() : elementary_minus());
        weights.push_back(iv.length());
        cursor = iv.right;
    }
    if (cursor < 1 || factors.empty()) {
        factors.push_back(uniform_character());
        weights.push_back(Rat(1) - cursor);
    }
    auto mixed = m_mix(std::move(factors), std::move(weights));
    std::ostringstream provenance;
    provenance << "paintbox[" << (pb.empty() ? "empty" : "") << "";
    for (std::size_t i = 0; i < pb.intervals().size(); ++i) {
        const auto& iv = pb.intervals()[i];
        if (i) provenance << " ";
        provenance << (iv.orient == Orientation::up ? "u" : "d") << "(" << format_rat(iv.left)
                   << "," << format_rat(iv.right) << ")";
    }
    provenance << "]";
    return {provenance.str(), [mixed](const Composition& c) { return mixed(c); }};
}

Rat evaluate(const OrientedPaintbox& pb, const Composition& c) {
    return paintbox_character(pb)(c);
}

RecursionReport check_recursion(const CharacterEvaluator& chi, int depth) {
    RecursionReport report;
    if (chi(Composition{}) != 1) {
        report.passed = false;
        report.failures.push_back("value at the empty composition is not 1");
    }
    for (int n = 0; n < depth; ++n) {
        for (const auto& c : compositions_of(n)) {
            Rat above = 0;
            for (const auto& s : successors(c)) above += chi(s);
            if (above != chi(c)) {
                report.passed = false;
                report.failures.push_back(n == 0 ? "(empty)" : c.to_string());
            }
        }
    }
    return report;
}

Rat evaluate_qsym(const CharacterEvaluator& chi, const QSymElement& a) {
    if (a.basis() != Basis::F) throw std::invalid_argument("evaluate_qsym: F basis required");
    Rat total = 0;
    for (const auto& [c, coeff] : a.terms()) total += coeff * chi(c);
    return total;
}

RankedFrequencies rank(const OrientedPaintbox& pb) {
    std::vector<Rat> alpha, beta;
    for (const auto& iv : pb.intervals())
        (iv.orient == Orientation::up ? alpha : beta).push_back(iv.length());
    std::sort(alpha.rbegin(), alpha.rend());
    std::sort(beta.rbegin(), beta.rend());
    return {std::move(alpha), std::move(beta)};
}

Rat a_shuffle_pmf(int n, int k, long a) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("a_shuffle_pmf: need 1 <= k <= n");
    if (a < 1) throw std::invalid_argument("a_shuffle_pmf: need a >= 1");
    return Rat(binomial(Int(n) + a - k, n), boost::multiprecision::pow(Int(a), n));
}

} // namespace zigzag
