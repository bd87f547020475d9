#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modasc/perm.hpp"
#include "modasc/sequences.hpp"
#include "modasc/word.hpp"

namespace modasc {

/// A classical pattern: a nonempty Cayley permutation.
class CayleyPattern {
public:
    explicit CayleyPattern(Word w);

    [[nodiscard]] const Word& word() const noexcept { return w_; }
    [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }
    [[nodiscard]] std::string str() const { return format_compact(w_); }

    friend bool operator==(const CayleyPattern&, const CayleyPattern&) = default;

private:
    Word w_;
};

/// "2321" (digits) or "1 10 2 ..." (spaced).
CayleyPattern parse_pattern(std::string_view text);
/// Comma-separated: "212,213".
std::vector<CayleyPattern> parse_pattern_set(std::string_view text);
std::string format_pattern_set(std::span<const CayleyPattern> ys);

/// True iff some subsequence of x is order isomorphic (ties included) to y.
bool contains(const Word& x, const CayleyPattern& y);
bool avoids_all(const Word& x, std::span<const CayleyPattern> ys);

/// Members of the class of length n avoiding every pattern, sorted.
std::vector<Word> avoiders(std::size_t n, std::span<const CayleyPattern> ys, SequenceClass c,
                           std::size_t limit = kDefaultMaterializeLimit);

enum class SpecialPattern { omega, zeta, vincular_32_1 };

const char* to_string(SpecialPattern s);
SpecialPattern parse_special_pattern(std::string_view text);

/// omega: p_i > p_{i+1} = p_j + 1 with j > i+1.
/// zeta: p_1 != 1.
/// 32-1: p_i > p_{i+1} > p_k with k > i+1.
bool contains_special(const Perm& p, SpecialPattern s);

/// p_1 = 1 and p avoids omega; true for the empty permutation.
bool in_omega(const Perm& p);

/// Omega_n in lexicographic order.
std::vector<Perm> omega_set(std::size_t n);

struct AvoidanceWitness {
    std::size_t n;
    Word word;
    bool in_first;  // word avoids the first set but not the second
};

struct EquivalenceResult {
    bool equal = true;
    std::optional<AvoidanceWitness> witness;  // smallest word at the first differing length

    explicit operator bool() const noexcept { return equal; }
};

/// Extensional comparison of Cl(ys1) and Cl(ys2) for every length <= n_max.
EquivalenceResult equal_avoidance_sets(std::span<const CayleyPattern> ys1,
                                       std::span<const CayleyPattern> ys2, SequenceClass c,
                                       std::size_t n_max);
EquivalenceResult equal_avoidance_sets(const CayleyPattern& y1, const CayleyPattern& y2,
                                       SequenceClass c, std::size_t n_max);

}  // namespace modasc
