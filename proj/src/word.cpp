#include "modasc/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

#include "modasc/error.hpp"

namespace modasc {

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int v : entries_) {
        if (v < 1) throw InvalidInput("word entries must be positive, got " + std::to_string(v));
        max_ = std::max(max_, v);
    }
}

Word::Word(std::initializer_list<int> entries) : Word(std::vector<int>(entries)) {}

Word parse_word(std::string_view text) {
    const bool has_separator = std::any_of(text.begin(), text.end(), [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c));
    });
    std::vector<int> out;
    if (!has_separator) {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw InvalidInput("malformed word \"" + std::string(text) + "\"");
            }
            out.push_back(c - '0');
        }
        return Word(std::move(out));
    }
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{} || ptr == text.data() + i) {
            throw InvalidInput("malformed word \"" + std::string(text) + "\"");
        }
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Word(std::move(out));
}

std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

std::string format_compact(const Word& w) {
    if (w.max() > 9) return format_word(w);
    std::string s;
    s.reserve(w.size());
    for (int v : w) s += static_cast<char>('0' + v);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_compact(w); }

MarkedPositions asctops(const Word& x) {
    MarkedPositions out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i == 0 || x[i - 1] < x[i]) out.push_back({i + 1, x[i]});
    }
    return out;
}

MarkedPositions nub(const Word& x) {
    std::vector<std::size_t> first(static_cast<std::size_t>(x.max()) + 1, 0);
    for (std::size_t i = x.size(); i-- > 0;) first[static_cast<std::size_t>(x[i])] = i + 1;
    MarkedPositions out;
    for (int j = 1; j <= x.max(); ++j) {
        if (first[static_cast<std::size_t>(j)] != 0) out.push_back({first[static_cast<std::size_t>(j)], j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t ascents(const Word& x) {
    std::size_t n = 0;
    for (std::size_t i = 1; i < x.size(); ++i) n += x[i - 1] < x[i];
    return n;
}

std::size_t descents(const Word& x) {
    std::size_t n = 0;
    for (std::size_t i = 1; i < x.size(); ++i) n += x[i - 1] > x[i];
    return n;
}

namespace {

// Scans left to right (or right to left) keeping the running extremum of
// the entries already seen; `better(v, extremum)` decides membership.
template <class Better>
MarkedPositions scan_records(const Word& x, bool left_to_right, int start, Better better) {
    MarkedPositions out;
    int extremum = start;
    const std::size_t n = x.size();
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = left_to_right ? k : n - 1 - k;
        const int v = x[i];
        if (better(v, extremum)) out.push_back({i + 1, v});
        if (start == std::numeric_limits<int>::max()) {
            extremum = std::min(extremum, v);
        } else {
            extremum = std::max(extremum, v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Statistics statistics(const Word& x) {
    constexpr int kInf = std::numeric_limits<int>::max();
    constexpr int kNegInf = std::numeric_limits<int>::min();
    const auto lt = [](int v, int e) { return v < e; };
    const auto le = [](int v, int e) { return v <= e; };
    const auto gt = [](int v, int e) { return v > e; };
    const auto ge = [](int v, int e) { return v >= e; };

    Statistics s;
    s.asctops = asctops(x);
    s.nub = nub(x);
    s.lrmin = scan_records(x, true, kInf, lt);
    s.wlrmin = scan_records(x, true, kInf, le);
    s.lrmax = scan_records(x, true, kNegInf, gt);
    s.wlrmax = scan_records(x, true, kNegInf, ge);
    s.rlmin = scan_records(x, false, kInf, lt);
    s.wrlmin = scan_records(x, false, kInf, le);
    s.rlmax = scan_records(x, false, kNegInf, gt);
    s.wrlmax = scan_records(x, false, kNegInf, ge);
    s.asc = ascents(x);
    s.des = descents(x);
    return s;
}

bool is_cayley(const Word& x) {
    std::vector<bool> seen(static_cast<std::size_t>(x.max()) + 1, false);
    for (int v : x) seen[static_cast<std::size_t>(v)] = true;
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

bool has_flat_step(const Word& x) {
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i - 1] == x[i]) return true;
    }
    return false;
}

std::string format_marks(const MarkedPositions& m) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << '(' << m[i].index << ',' << m[i].value << ')';
    }
    os << '}';
    return os.str();
}

}  // namespace modasc
