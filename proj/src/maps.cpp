#include "modasc/maps.hpp"

#include <algorithm>
#include <numeric>

#include "modasc/error.hpp"
#include "modasc/patterns.hpp"
#include "modasc/sequences.hpp"

namespace modasc {

Perm standardize(const Word& x) {
    if (!is_cayley(x)) throw InvalidInput("standardize needs a Cayley permutation: " + format_word(x));
    // next[v] is the label given to the next copy of v.
    std::vector<int> next(static_cast<std::size_t>(x.max()) + 2, 0);
    for (int v : x) ++next[static_cast<std::size_t>(v) + 1];
    next[0] = 1;
    for (std::size_t v = 1; v < next.size(); ++v) next[v] += next[v - 1];
    std::vector<int> out;
    out.reserve(x.size());
    for (int v : x) out.push_back(next[static_cast<std::size_t>(v)]++);
    return Perm(Word(std::move(out)));
}

namespace {

void require_omega(const Perm& p, const char* what) {
    if (!in_omega(p)) throw InvalidInput(std::string(what) + " needs a permutation in Omega: " + format_word(p.word()));
}

std::vector<bool> asctop_flags(const Perm& p) {
    std::vector<bool> top(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) top[i] = i == 0 || p[i - 1] < p[i];
    return top;
}

// The unique Cayley permutation order isomorphic to y.
Word rank_compress(const std::vector<int>& y) {
    std::vector<int> values = y;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> out;
    out.reserve(y.size());
    for (int v : y) {
        out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()) + 1);
    }
    return Word(std::move(out));
}

}  // namespace

std::vector<Chain> chains(const Perm& p) {
    require_omega(p, "chains");
    const std::vector<bool> top = asctop_flags(p);
    std::vector<int> starts;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (top[i]) starts.push_back(p[i]);
    }
    std::sort(starts.begin(), starts.end());
    std::vector<Chain> out;
    const int n = static_cast<int>(p.size());
    for (std::size_t k = 0; k < starts.size(); ++k) {
        const int end = k + 1 < starts.size() ? starts[k + 1] : n + 1;
        out.push_back({starts[k], static_cast<std::size_t>(end - starts[k])});
    }
    return out;
}

Word omega_to_prim(const Perm& p) {
    require_omega(p, "omega_to_prim");
    const std::vector<bool> top = asctop_flags(p);
    std::vector<int> y(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (top[i]) {
            y[i] = p[i];
            continue;
        }
        int best = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (top[j] && p[j] < p[i]) best = std::max(best, p[j]);
        }
        y[i] = best;  // U_i is nonempty because p_1 = 1 is an ascent top.
    }
    return rank_compress(y);
}

Word omega_to_prim_by_chains(const Perm& p) {
    const std::vector<Chain> cs = chains(p);
    std::vector<int> chain_of(p.size() + 1, 0);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (std::size_t j = 0; j < cs[k].length; ++j) {
            chain_of[static_cast<std::size_t>(cs[k].start) + j] = static_cast<int>(k) + 1;
        }
    }
    std::vector<int> out;
    out.reserve(p.size());
    for (int v : p) out.push_back(chain_of[static_cast<std::size_t>(v)]);
    return Word(std::move(out));
}

Perm burge_transpose(const Word& x, TieBreak tie) {
    if (tie == TieBreak::descending && !is_modasc(x)) {
        throw InvalidInput("descending tie-break needs a modified ascent sequence: " + format_word(x));
    }
    if (tie == TieBreak::ascending && !is_primitive(x)) {
        throw InvalidInput("ascending tie-break needs a primitive sequence: " + format_word(x));
    }
    struct Column {
        int top;
        int bottom;
    };
    std::vector<Column> cols;
    cols.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cols.push_back({x[i], static_cast<int>(i) + 1});
    std::stable_sort(cols.begin(), cols.end(), [tie](const Column& a, const Column& b) {
        if (a.top != b.top) return a.top < b.top;
        return tie == TieBreak::descending ? a.bottom > b.bottom : a.bottom < b.bottom;
    });
    std::vector<int> out;
    out.reserve(cols.size());
    for (const Column& c : cols) out.push_back(c.bottom);
    return Perm(Word(std::move(out)));
}

Composition modasc112_to_composition(const Word& x) {
    if (x.empty()) throw InvalidInput("composition map needs a nonempty word");
    if (!is_modasc(x) || contains(x, CayleyPattern(Word{1, 1, 2}))) {
        throw InvalidInput("not in Modasc(112): " + format_word(x));
    }
    Composition c;
    c.parts.assign(static_cast<std::size_t>(x.max()), 0);
    for (int v : x) ++c.parts[static_cast<std::size_t>(v) - 1];
    return c;
}

Word composition_to_modasc112(const Composition& c) {
    std::vector<int> out;
    const int m = static_cast<int>(c.parts.size());
    for (int v = 1; v <= m; ++v) out.push_back(v);
    for (int v = m; v >= 1; --v) {
        const std::size_t part = c.parts[static_cast<std::size_t>(v) - 1];
        if (part == 0) throw InvalidInput("composition parts must be positive");
        out.insert(out.end(), part - 1, v);
    }
    return Word(std::move(out));
}

SetPartition modasc122_to_partition(const Word& x) {
    if (!is_modasc(x) || contains(x, CayleyPattern(Word{1, 2, 2}))) {
        throw InvalidInput("not in Modasc(122): " + format_word(x));
    }
    const Perm p = standardize(x);
    std::vector<SetPartition::Block> blocks;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 1) blocks.emplace_back();
        blocks.back().push_back(p[i]);
    }
    return SetPartition(std::move(blocks));
}

Word partition_to_modasc122(const SetPartition& beta) {
    const auto& blocks = beta.blocks();
    const int k = static_cast<int>(blocks.size());
    for (int j = 0; j < k; ++j) {
        if (blocks[static_cast<std::size_t>(j)].front() != j + 1) {
            throw InvalidInput("block minima do not form an interval: " + format_set_partition(beta));
        }
    }
    // Block j holds the j-th copy of 1 followed by its increasing run; a
    // value v > k came from the entry v - k + 1.
    std::vector<int> out;
    for (const auto& b : blocks) {
        out.push_back(1);
        for (std::size_t i = 1; i < b.size(); ++i) out.push_back(b[i] - k + 1);
    }
    return Word(std::move(out));
}

namespace {

void require_prim312(const Word& x) {
    if (!is_primitive(x) || contains(x, CayleyPattern(Word{3, 1, 2}))) {
        throw InvalidInput("not in Prim(312): " + format_word(x));
    }
}

Word prefixed_by_one(const std::vector<int>& tail) {
    std::vector<int> v{1};
    v.insert(v.end(), tail.begin(), tail.end());
    return Word(std::move(v));
}

DyckPath phi_rec(const Word& x) {
    if (x.size() <= 1) return {};
    // Blocks B_1..B_k between consecutive copies of 1.
    std::vector<std::vector<int>> blocks;
    for (int v : x) {
        if (v == 1) {
            blocks.emplace_back();
        } else {
            blocks.back().push_back(v);
        }
    }
    DyckPath out;
    int prev_max = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<int> b = blocks[i];
        Word rescaled;
        if (i == 0) {
            for (int& v : b) v -= 1;
            rescaled = Word(b);
        } else {
            for (int& v : b) v -= prev_max - 1;
            rescaled = prefixed_by_one(b);
        }
        out = concat(out, elevate(phi_rec(rescaled)));
        if (!blocks[i].empty()) prev_max = *std::max_element(blocks[i].begin(), blocks[i].end());
    }
    return out;
}

}  // namespace

DyckPath phi_312(const Word& x) {
    if (x.empty()) throw InvalidInput("phi is defined from length one up");
    require_prim312(x);
    return phi_rec(x);
}

Word phi_inverse(const DyckPath& p) {
    if (!avoids_dudu(p)) throw InvalidInput("path contains dudu: " + format_dyck_path(p));
    if (p.empty()) return Word{1};
    const PathFactors f = decompose_returns(p);
    std::vector<int> out;
    int prev_max = 0;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const Word w = phi_inverse(f.factors[i]);
        out.push_back(1);
        std::vector<int> block;
        if (i == 0) {
            for (int v : w) block.push_back(v + 1);
        } else {
            for (std::size_t j = 1; j < w.size(); ++j) block.push_back(w[j] + prev_max - 1);
        }
        if (!block.empty()) prev_max = *std::max_element(block.begin(), block.end());
        out.insert(out.end(), block.begin(), block.end());
    }
    return Word(std::move(out));
}

Perm claesson(const SetPartition& beta) {
    std::vector<int> out;
    out.reserve(beta.ground_size());
    for (const auto& b : beta.blocks()) {
        out.insert(out.end(), b.begin() + 1, b.end());
        out.push_back(b.front());
    }
    return Perm(Word(std::move(out)));
}

SetPartition claesson_inverse(const Perm& p) {
    if (contains_special(p, SpecialPattern::vincular_32_1)) {
        throw InvalidInput("permutation contains 32-1: " + format_word(p.word()));
    }
    // Block minima are exactly the right-to-left minima; each block ends at one.
    std::vector<SetPartition::Block> blocks;
    SetPartition::Block current;
    const Statistics st = statistics(p.word());
    std::vector<bool> is_rlmin(p.size() + 1, false);
    for (const Mark& m : st.rlmin) is_rlmin[m.index] = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        current.push_back(p[i]);
        if (is_rlmin[i + 1]) {
            blocks.push_back(std::move(current));
            current.clear();
        }
    }
    SetPartition beta(std::move(blocks));
    if (claesson(beta) != p) {
        throw InternalConsistencyError("32-1 avoider outside the image of the standard representation: " +
                                       format_word(p.word()));
    }
    return beta;
}

}  // namespace modasc
