#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "modasc/word.hpp"

namespace modasc {

/// A permutation of [n], stored as its one-line notation.
class Perm {
public:
    Perm() = default;
    /// Throws InvalidInput unless `w` is a permutation of [w.size()].
    explicit Perm(Word w);
    Perm(std::initializer_list<int> entries) : Perm(Word(entries)) {}

    [[nodiscard]] const Word& word() const noexcept { return w_; }
    [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const noexcept { return w_[i]; }
    [[nodiscard]] auto begin() const noexcept { return w_.begin(); }
    [[nodiscard]] auto end() const noexcept { return w_.end(); }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.w_ <=> b.w_; }

private:
    Word w_;
};

bool is_permutation(const Word& w);

Perm parse_perm(std::string_view text);

/// All permutations of [n] in lexicographic order.
std::vector<Perm> all_permutations(std::size_t n);

/// 1 ⊕ q: prepend 1 and shift q up by one.
Perm one_plus(const Perm& q);

}  // namespace modasc
