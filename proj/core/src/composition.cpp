#include "zigzag/composition.hpp"

#include <numeric>
#include <stdexcept>

namespace zigzag {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(const std::string& text) {
    if (text.empty()) return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad composition: '" + text + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("bad composition: '" + text + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

bool Composition::is_one_column() const {
    for (int p : parts_)
        if (p != 1) return false;
    return true;
}

std::string Composition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string to_word(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("to_word: empty composition has no word");
    std::string w;
    w.reserve(c.size() - 1);
    for (std::size_t i = 0; i < c.parts().size(); ++i) {
        if (i) w += '-';
        w.append(c.parts()[i] - 1, '+');
    }
    return w;
}

Composition from_word(const std::string& word) {
    std::vector<int> parts;
    int run = 1;
    for (char ch : word) {
        if (ch == '+') {
            ++run;
        } else if (ch == '-') {
            parts.push_back(run);
            run = 1;
        } else {
            throw std::invalid_argument("word letters must be '+' or '-'");
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

Composition conjugate(const Composition& c) {
    if (c.empty()) return c;
    std::string w = to_word(c);
    for (char& ch : w) ch = (ch == '+') ? '-' : '+';
    return from_word(std::string(w.rbegin(), w.rend()));
}

std::vector<int> partial_sums_proper(const Composition& c) {
    std::vector<int> sums;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < c.parts().size(); ++i) {
        acc += c.parts()[i];
        sums.push_back(acc);
    }
    return sums;
}

Composition composition_from_descents(int n, const std::vector<int>& descents) {
    if (n < 1) throw std::invalid_argument("composition_from_descents: n must be >= 1");
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        if (d <= prev || d >= n)
            throw std::invalid_argument("descents must be strictly increasing within [1, n-1]");
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

namespace {
void emit_compositions(int n, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= n; ++first) {
        prefix.push_back(first);
        emit_compositions(n - first, prefix, out);
        prefix.pop_back();
    }
}
} // namespace

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: n must be >= 0");
    std::vector<Composition> out;
    std::vector<int> prefix;
    emit_compositions(n, prefix, out); // first-part loop ascends, so output is lex sorted
    return out;
}

} // namespace zigzag
