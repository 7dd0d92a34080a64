#include "zigzag/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace zigzag {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
            throw std::invalid_argument("not a permutation of [n]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = i + 1;
    return Permutation(std::move(vals));
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) return {};
    std::vector<int> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad permutation: '" + text + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("bad permutation: '" + text + "'");
        vals.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Permutation(std::move(vals));
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

Composition zigzag_shape(const Permutation& p) {
    if (p.size() == 0) return {};
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < p.size(); ++i) {
        if (p.values()[i - 1] < p.values()[i]) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

std::vector<int> descent_set(const Permutation& p) {
    std::vector<int> descents;
    for (int j = 1; j < p.size(); ++j)
        if (p.values()[j - 1] > p.values()[j]) descents.push_back(j);
    return descents;
}

Permutation inverse(const Permutation& p) {
    std::vector<int> inv(p.size());
    for (int pos = 1; pos <= p.size(); ++pos) inv[p(pos) - 1] = pos;
    return Permutation(std::move(inv));
}

Permutation restrict(const Permutation& p, int j) {
    if (j < 1 || j > p.size()) throw std::invalid_argument("restrict: value out of range");
    std::vector<int> vals;
    vals.reserve(p.size() - 1);
    for (int v : p.values()) {
        if (v == j) continue;
        vals.push_back(v > j ? v - 1 : v);
    }
    return Permutation(std::move(vals));
}

std::vector<Permutation> extensions(const Permutation& p) {
    std::vector<Permutation> out;
    out.reserve(p.size() + 1);
    for (int slot = 0; slot <= p.size(); ++slot) {
        std::vector<int> vals = p.values();
        vals.insert(vals.begin() + slot, p.size() + 1);
        out.emplace_back(std::move(vals));
    }
    return out;
}

Permutation canonical_permutation(const Composition& c) {
    std::vector<int> vals;
    vals.reserve(c.size());
    int above = c.size(); // first value above the current run's block
    for (int part : c.parts()) {
        for (int v = above - part + 1; v <= above; ++v) vals.push_back(v);
        above -= part;
    }
    return Permutation(std::move(vals));
}

} // namespace zigzag
