#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modasc/integer.hpp"
#include "modasc/patterns.hpp"
#include "modasc/sequences.hpp"
#include "modasc/series.hpp"
#include "modasc/word.hpp"

namespace modasc {

// -- named number families ----------------------------------------------------

enum class NamedSequence { catalan, motzkin, fibonacci, bell, fubini, stirling2 };

NamedSequence parse_named_sequence(std::string_view name);

/// k is only read for stirling2.
Integer named_sequence(NamedSequence name, std::size_t n, std::size_t k = 0);

Integer catalan(std::size_t n);
Integer motzkin(std::size_t n);
/// F_0 = 0, F_1 = F_2 = 1.
Integer fibonacci(std::size_t n);
Integer bell(std::size_t n);
Integer fubini(std::size_t n);
/// Stirling numbers of the second kind; S(0,0) = 1, zero outside 0 <= k <= n.
Integer stirling2(long n, long k);

// -- count tables ---------------------------------------------------------------

enum class Provenance { oracle, formula, series };

const char* to_string(Provenance p);

struct CountTable {
    std::string label;
    std::size_t offset = 0;  // index of values[0]
    std::vector<Integer> values;
    Provenance provenance = Provenance::oracle;

    [[nodiscard]] bool covers(std::size_t n) const noexcept {
        return n >= offset && n - offset < values.size();
    }
    /// Throws InvalidInput when n is not covered.
    [[nodiscard]] const Integer& at(std::size_t n) const;
};

/// Sum over k = 1..n of C(n-1, k-1) prim_k; n = 0 gives 1 (the empty word).
Integer binomial_transform_count(const CountTable& prim_counts, std::size_t n);

/// Prim(t / (1 - t)) to order N; requires a_0 = 1.
IntSeries ogf_substitute(const IntSeries& prim_series, std::size_t order);

// -- closed formulas ------------------------------------------------------------

bool has_closed_count(const CayleyPattern& y, SequenceClass c);
/// Human-readable name of the family, e.g. "Catalan" or "sum k^(n-k)".
std::string closed_count_family(const CayleyPattern& y, SequenceClass c);
/// Throws NoClosedForm for unsupported pairs.
Integer closed_count(const CayleyPattern& y, SequenceClass c, std::size_t n);

/// DUDU-avoiding Dyck paths of semilength n via the Lagrange-inversion sum.
Integer dudu_count_lagrange(std::size_t n);

/// Double sum over k and i of S(k-1, i-1) C(n-1-k+i, i-1).
Integer modasc221_formula(std::size_t n);

/// Prim_k(221) words weighted by the ways to place n-k flat steps on
/// their active sites; must agree with modasc221_formula.
Integer modasc221_by_active_sites(std::size_t n);

// -- series ---------------------------------------------------------------------

enum class SpecialSeries { F, PrimOGF122, ModascOGF122, G, D, Modasc312, Motzkin_eq, Modasc1232 };

SpecialSeries parse_special_series(std::string_view name);
const char* to_string(SpecialSeries s);

IntSeries special_series(SpecialSeries which, std::size_t order);

/// F = sum_k prod_{j<=k} j t^2 / (1 - j t).
IntSeries f_series_product_form(std::size_t order);
/// F = sum_i t^i / ((1 - i t)(1 + t)^{i+1}).
IntSeries f_series_alternating_form(std::size_t order);

// -- weighted counts ------------------------------------------------------------

/// p_{n,i}: partitions of [n] with exactly i non-singleton blocks.
struct WeightedCounts {
    std::vector<std::vector<Integer>> rows;  // rows[n][i]

    [[nodiscard]] Integer at(std::size_t n, std::size_t i) const;
};

inline constexpr std::size_t kDefaultPartitionCap = 12;

/// Row n by exhaustive enumeration of partitions. Throws CapExceeded above cap.
std::vector<Integer> p_coefficients(std::size_t n, std::size_t cap = kDefaultPartitionCap);
/// Rows 0..max_n.
WeightedCounts p_table(std::size_t max_n, std::size_t cap = kDefaultPartitionCap);

/// S(n, n-h) against the sum over i of C(n-1, n-i) p_{i-1, i-1-h}.
bool stirling_identity_check(std::size_t n, std::size_t h, const WeightedCounts& p);
bool stirling_identity_check(std::size_t n, std::size_t h);

// -- oracle counting -------------------------------------------------------------

/// Brute force: filters the whole class of length n.
Integer oracle_count(std::span<const CayleyPattern> ys, SequenceClass c, std::size_t n);

/// Histogram h -> #{x avoiding ys in the class with asc(x) = h}.
std::map<std::size_t, Integer> ascent_distribution(std::span<const CayleyPattern> ys,
                                                   SequenceClass c, std::size_t n);

/// 1-based positions of the weak right-to-left minima of w in Prim(221).
std::vector<std::size_t> active_sites_221(const Word& w);

}  // namespace modasc
