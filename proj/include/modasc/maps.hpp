#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modasc/dyck.hpp"
#include "modasc/perm.hpp"
#include "modasc/set_partition.hpp"
#include "modasc/word.hpp"

namespace modasc {

// -- standardization and Omega ------------------------------------------------

/// Replaces the copies of each value, left to right, by consecutive
/// integers. Throws InvalidInput on non-Cayley input.
Perm standardize(const Word& x);

/// A run of consecutive values start, start+1, ..., start+length-1.
struct Chain {
    int start;
    std::size_t length;
    friend auto operator<=>(const Chain&, const Chain&) = default;
};

/// Chains of p in Omega, ordered by start value. Throws unless in_omega(p).
std::vector<Chain> chains(const Perm& p);

/// Inverse of standardize on Prim: every entry that is not an ascent top
/// drops to the largest earlier, smaller ascent top, then the result is
/// rescaled to a Cayley permutation. Throws unless in_omega(p).
Word omega_to_prim(const Perm& p);

/// Same map computed from chains: every entry takes the rank of its chain.
Word omega_to_prim_by_chains(const Perm& p);

// -- Burge transpose ----------------------------------------------------------

/// How columns with equal top entries are ordered after the flip.
enum class TieBreak { descending, ascending };

/// Flips the biword (1..n over x) and sorts columns by top entry.
/// descending: x in Modasc, yields the Fishburn permutation of x.
/// ascending: x in Prim, yields a bijection Prim_n -> Omega_n.
Perm burge_transpose(const Word& x, TieBreak tie);

// -- 112: left pyramids and compositions --------------------------------------

struct Composition {
    std::vector<std::size_t> parts;
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Multiplicities of the values 1..max(x). Requires x in Modasc(112), nonempty.
Composition modasc112_to_composition(const Word& x);
/// Rebuilds 1 2 ... m m^{k_m} ... 1^{k_1} from (k_1+1, ..., k_m+1).
Word composition_to_modasc112(const Composition& c);

// -- 122: set partitions with interval minima ---------------------------------

/// Cut before every copy of 1 except the first, then standardize.
SetPartition modasc122_to_partition(const Word& x);
/// Requires the block minima to be exactly {1, ..., k}.
Word partition_to_modasc122(const SetPartition& beta);

// -- 312: DUDU-avoiding Dyck paths --------------------------------------------

/// Prim_{n+1}(312) -> DUDU-avoiding paths of semilength n.
DyckPath phi_312(const Word& x);
/// Inverse of phi_312; the empty path maps to the word 1.
Word phi_inverse(const DyckPath& p);

// -- Claesson's bijection -----------------------------------------------------

/// Writes beta in standard representation and erases the dashes.
Perm claesson(const SetPartition& beta);
/// Requires p to avoid 32-1.
SetPartition claesson_inverse(const Perm& p);

}  // namespace modasc
