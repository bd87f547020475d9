#include "modasc/perm.hpp"

#include <algorithm>
#include <numeric>

#include "modasc/error.hpp"

namespace modasc {

bool is_permutation(const Word& w) {
    return static_cast<std::size_t>(w.max()) == w.size() && is_cayley(w);
}

Perm::Perm(Word w) : w_(std::move(w)) {
    if (!is_permutation(w_)) throw InvalidInput("not a permutation: " + format_word(w_));
}

Perm parse_perm(std::string_view text) { return Perm(parse_word(text)); }

std::vector<Perm> all_permutations(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(Word(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Perm one_plus(const Perm& q) {
    std::vector<int> v{1};
    for (int x : q) v.push_back(x + 1);
    return Perm(Word(std::move(v)));
}

}  // namespace modasc
