#pragma once

#include <string>
#include <vector>

#include "modasc/counting.hpp"
#include "modasc/patterns.hpp"
#include "modasc/word.hpp"
#include "oracles.hpp"

namespace testing {

inline modasc::Word W(const char* s) { return modasc::parse_word(s); }
inline modasc::CayleyPattern Y(const char* s) { return modasc::parse_pattern(s); }

inline oracle::Seq seq(const modasc::Word& w) { return w.vec(); }

inline std::vector<oracle::Seq> seqs(const std::vector<modasc::Word>& ws) {
    std::vector<oracle::Seq> out;
    for (const auto& w : ws) out.push_back(w.vec());
    return out;
}

inline std::vector<std::string> strs(const std::vector<modasc::Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(modasc::format_compact(w));
    return out;
}

inline std::vector<modasc::Integer> ints(std::initializer_list<long> v) {
    return {v.begin(), v.end()};
}

}  // namespace testing
