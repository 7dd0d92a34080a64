#include "zigzag/graph.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace zigzag {

std::vector<Composition> successors(const Composition& c) {
    std::vector<Composition> out;
    out.reserve(c.size() + 1);
    const auto& parts = c.parts();
    for (std::size_t j = 0; j < parts.size(); ++j) {
        std::vector<int> next = parts;
        ++next[j];
        out.emplace_back(std::move(next));
    }
    {
        std::vector<int> next;
        next.reserve(parts.size() + 1);
        next.push_back(1);
        next.insert(next.end(), parts.begin(), parts.end());
        out.emplace_back(std::move(next));
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (int left = 1; left < parts[j]; ++left) {
            std::vector<int> next;
            next.reserve(parts.size() + 1);
            next.insert(next.end(), parts.begin(), parts.begin() + j);
            next.push_back(left + 1);
            next.push_back(parts[j] - left);
            next.insert(next.end(), parts.begin() + j + 1, parts.end());
            out.emplace_back(std::move(next));
        }
    }
    return out;
}

namespace {

// One deletion per cluster of equal letters yields each distinct subword once.
std::vector<std::string> cluster_deletions(const std::string& word) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && word[i] == word[i - 1]) continue;
        out.push_back(word.substr(0, i) + word.substr(i + 1));
    }
    return out;
}

} // namespace

std::vector<Composition> predecessors(const Composition& c) {
    if (c.empty()) return {};
    if (c.size() == 1) return {Composition{}};
    std::vector<Composition> out;
    for (const auto& w : cluster_deletions(to_word(c))) out.push_back(from_word(w));
    return out;
}

const Int& dimension(const Composition& c) {
    static std::map<Composition, Int> cache{{Composition{}, Int(1)}};
    static std::shared_mutex mx;
    {
        std::shared_lock lock(mx);
        if (auto it = cache.find(c); it != cache.end()) return it->second;
    }
    Int total = 0;
    for (const auto& below : predecessors(c)) total += dimension(below);
    std::unique_lock lock(mx);
    return cache.emplace(c, std::move(total)).first->second; // map nodes are stable
}

Int path_count(const Composition& mu, const Composition& lambda) {
    if (mu.size() > lambda.size()) return 0;
    if (mu.size() == lambda.size()) return mu == lambda ? 1 : 0;
    if (lambda.empty()) return 0;
    if (mu.empty()) return path_count(Composition({1}), lambda); // every path passes (1)

    std::unordered_map<std::string, Int> level{{to_word(lambda), Int(1)}};
    for (int boxes = lambda.size(); boxes > mu.size(); --boxes) {
        std::unordered_map<std::string, Int> below;
        for (const auto& [word, count] : level)
            for (const auto& sub : cluster_deletions(word)) below[sub] += count;
        level = std::move(below);
    }
    const auto it = level.find(to_word(mu));
    return it == level.end() ? Int(0) : it->second;
}

Rat martin_kernel(const Composition& mu, const Composition& lambda) {
    return Rat(path_count(mu, lambda), dimension(lambda));
}

} // namespace zigzag
