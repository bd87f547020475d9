#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modasc {

/// A finite word over the positive integers.
///
/// Words are immutable values. Element access through operator[] is
/// 0-based (container convention); every position reported to the user
/// (MarkedPositions, chains, active sites) is 1-based.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> entries);
    Word(std::initializer_list<int> entries);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const noexcept { return entries_[i]; }
    /// 0 for the empty word.
    [[nodiscard]] int max() const noexcept { return max_; }
    [[nodiscard]] std::span<const int> entries() const noexcept { return entries_; }
    [[nodiscard]] const std::vector<int>& vec() const noexcept { return entries_; }

    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const Word& a, const Word& b) { return a.entries_ == b.entries_; }
    // Lexicographic on entries.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    int max_ = 0;
};

/// Parses "1 3 1 2", "1,3,1,2" or the compact digit form "1312".
/// The empty string (or all whitespace) is the empty word.
Word parse_word(std::string_view text);

/// Canonical encoding: space-separated decimal values ("1 3 1 2").
std::string format_word(const Word& w);

/// Digit form "1312" when max <= 9, otherwise the canonical encoding.
std::string format_compact(const Word& w);

std::ostream& operator<<(std::ostream& os, const Word& w);

// -- statistics --------------------------------------------------------------

struct Mark {
    std::size_t index;  // 1-based
    int value;
    friend auto operator<=>(const Mark&, const Mark&) = default;
};

/// Sorted by index.
using MarkedPositions = std::vector<Mark>;

struct Statistics {
    MarkedPositions asctops;
    MarkedPositions nub;
    MarkedPositions lrmin, wlrmin, lrmax, wlrmax;
    MarkedPositions rlmin, wrlmin, rlmax, wrlmax;
    std::size_t asc = 0;
    std::size_t des = 0;
};

/// Ascent tops including the first entry.
MarkedPositions asctops(const Word& x);
/// Leftmost copy of every value 1..max(x).
MarkedPositions nub(const Word& x);

std::size_t ascents(const Word& x);
std::size_t descents(const Word& x);

Statistics statistics(const Word& x);

/// Every value 1..max(x) occurs. True for the empty word.
bool is_cayley(const Word& x);

bool has_flat_step(const Word& x);

std::string format_marks(const MarkedPositions& m);

}  // namespace modasc
