#include "modasc/patterns.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "modasc/error.hpp"

namespace modasc {

CayleyPattern::CayleyPattern(Word w) : w_(std::move(w)) {
    if (w_.empty()) throw InvalidInput("pattern must be nonempty");
    if (!is_cayley(w_)) throw InvalidInput("pattern is not a Cayley permutation: " + format_word(w_));
}

CayleyPattern parse_pattern(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw InvalidInput("empty pattern");
    return CayleyPattern(parse_word(text));
}

std::vector<CayleyPattern> parse_pattern_set(std::string_view text) {
    std::vector<CayleyPattern> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        out.push_back(parse_pattern(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

std::string format_pattern_set(std::span<const CayleyPattern> ys) {
    std::string s;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (i) s += ',';
        s += ys[i].str();
    }
    return s;
}

namespace {

int cmp(int a, int b) { return (a > b) - (a < b); }

// Backtracking over positions; chosen[t] is the position matched to y_t.
bool extend_match(const Word& x, const Word& y, std::size_t s, std::size_t start,
                  std::array<std::size_t, 64>& chosen) {
    const std::size_t k = y.size();
    if (s == k) return true;
    const std::size_t last_start = x.size() - (k - s);
    for (std::size_t i = start; i <= last_start; ++i) {
        bool ok = true;
        for (std::size_t t = 0; t < s && ok; ++t) {
            ok = cmp(x[i], x[chosen[t]]) == cmp(y[s], y[t]);
        }
        if (!ok) continue;
        chosen[s] = i;
        if (extend_match(x, y, s + 1, i + 1, chosen)) return true;
    }
    return false;
}

}  // namespace

bool contains(const Word& x, const CayleyPattern& y) {
    const Word& yw = y.word();
    if (yw.size() > x.size()) return false;
    if (yw.size() > 64) throw InvalidInput("pattern longer than 64 letters");
    std::array<std::size_t, 64> chosen{};
    return extend_match(x, yw, 0, 0, chosen);
}

bool avoids_all(const Word& x, std::span<const CayleyPattern> ys) {
    return std::none_of(ys.begin(), ys.end(), [&](const CayleyPattern& y) { return contains(x, y); });
}

std::vector<Word> avoiders(std::size_t n, std::span<const CayleyPattern> ys, SequenceClass c,
                           std::size_t limit) {
    std::vector<Word> out;
    for (Word& w : generate_class(n, c, limit)) {
        if (avoids_all(w, ys)) out.push_back(std::move(w));
    }
    return out;
}

const char* to_string(SpecialPattern s) {
    switch (s) {
        case SpecialPattern::omega: return "omega";
        case SpecialPattern::zeta: return "zeta";
        case SpecialPattern::vincular_32_1: return "32-1";
    }
    return "?";
}

SpecialPattern parse_special_pattern(std::string_view text) {
    if (text == "omega") return SpecialPattern::omega;
    if (text == "zeta") return SpecialPattern::zeta;
    if (text == "32-1") return SpecialPattern::vincular_32_1;
    throw InvalidInput("unknown special pattern \"" + std::string(text) + "\"");
}

bool contains_special(const Perm& p, SpecialPattern s) {
    const std::size_t n = p.size();
    switch (s) {
        case SpecialPattern::zeta:
            return n > 0 && p[0] != 1;
        case SpecialPattern::omega: {
            std::vector<std::size_t> pos(n + 1);
            for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(p[i])] = i;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const int v = p[i + 1];
                if (p[i] > v && v > 1 && pos[static_cast<std::size_t>(v - 1)] > i + 1) return true;
            }
            return false;
        }
        case SpecialPattern::vincular_32_1: {
            // suffix_min[i] = min(p_i, ..., p_{n-1}), 0-based.
            std::vector<int> suffix_min(n + 1, std::numeric_limits<int>::max());
            for (std::size_t i = n; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], p[i]);
            for (std::size_t i = 0; i + 2 < n; ++i) {
                if (p[i] > p[i + 1] && suffix_min[i + 2] < p[i + 1]) return true;
            }
            return false;
        }
    }
    return false;
}

bool in_omega(const Perm& p) {
    if (p.size() == 0) return true;
    return p[0] == 1 && !contains_special(p, SpecialPattern::omega);
}

std::vector<Perm> omega_set(std::size_t n) {
    if (n == 0) return {Perm{}};
    std::vector<Perm> out;
    for (const Perm& q : all_permutations(n - 1)) {
        Perm p = one_plus(q);
        if (in_omega(p)) out.push_back(std::move(p));
    }
    return out;
}

EquivalenceResult equal_avoidance_sets(std::span<const CayleyPattern> ys1,
                                       std::span<const CayleyPattern> ys2, SequenceClass c,
                                       std::size_t n_max) {
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::optional<AvoidanceWitness> found;
        for_each_in_class(n, c, [&](const Word& w) {
            const bool a = avoids_all(w, ys1);
            const bool b = avoids_all(w, ys2);
            if (a != b && (!found || w < found->word)) found = AvoidanceWitness{n, w, a};
        });
        if (found) return {false, std::move(found)};
    }
    return {};
}

EquivalenceResult equal_avoidance_sets(const CayleyPattern& y1, const CayleyPattern& y2,
                                       SequenceClass c, std::size_t n_max) {
    return equal_avoidance_sets(std::span(&y1, 1), std::span(&y2, 1), c, n_max);
}

}  // namespace modasc
