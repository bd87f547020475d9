#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "modasc/word.hpp"

namespace modasc {

/// Above this length generate_* refuses to materialize; use for_each_*.
inline constexpr std::size_t kDefaultMaterializeLimit = 10;

/// Cayley and asctops(x) = nub(x). Also checks that ascent-top values are
/// distinct and that the copies of max(x) are consecutive, throwing
/// InternalConsistencyError if either fails on an accepted word.
bool is_modasc(const Word& x);

/// Modified ascent sequence without flat steps.
bool is_primitive(const Word& x);

enum class SequenceClass { modasc, prim };

const char* to_string(SequenceClass c);
SequenceClass parse_sequence_class(std::string_view s);

bool in_class(const Word& x, SequenceClass c);

using WordVisitor = std::function<void(const Word&)>;

/// Streams Modasc_n (or Prim_n) in generation order using the recursive
/// construction: append a letter a <= max+1 and, when a is an ascent top,
/// bump every earlier entry >= a.
void for_each_modasc(std::size_t n, const WordVisitor& visit);
void for_each_prim(std::size_t n, const WordVisitor& visit);
void for_each_in_class(std::size_t n, SequenceClass c, const WordVisitor& visit);

/// Lexicographically sorted Modasc_n. Throws CapExceeded above `limit`.
std::vector<Word> generate_modasc(std::size_t n, std::size_t limit = kDefaultMaterializeLimit);
std::vector<Word> generate_prim(std::size_t n, std::size_t limit = kDefaultMaterializeLimit);
std::vector<Word> generate_class(std::size_t n, SequenceClass c,
                                 std::size_t limit = kDefaultMaterializeLimit);

struct FlatDecomposition {
    Word primitive;
    std::vector<std::size_t> multiplicities;

    friend bool operator==(const FlatDecomposition&, const FlatDecomposition&) = default;
};

/// Collapses every run of equal adjacent entries to one entry.
FlatDecomposition collapse_flats(const Word& x);

/// Repeats primitive[i] multiplicities[i] times.
Word insert_flats(const FlatDecomposition& d);

}  // namespace modasc
