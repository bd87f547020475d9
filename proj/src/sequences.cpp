#include "modasc/sequences.hpp"

#include <algorithm>
#include <string>

#include "modasc/error.hpp"

namespace modasc {

bool is_modasc(const Word& x) {
    if (!is_cayley(x)) return false;
    const MarkedPositions tops = asctops(x);
    if (!x.empty() && tops != nub(x)) return false;

    std::vector<bool> seen(static_cast<std::size_t>(x.max()) + 1, false);
    for (const Mark& m : tops) {
        if (seen[static_cast<std::size_t>(m.value)]) {
            throw InternalConsistencyError("repeated ascent-top value in " + format_word(x));
        }
        seen[static_cast<std::size_t>(m.value)] = true;
    }
    if (tops.size() != static_cast<std::size_t>(x.max())) {
        throw InternalConsistencyError("max differs from number of ascent tops in " + format_word(x));
    }
    const auto first = std::find(x.begin(), x.end(), x.max());
    const auto last = std::find(std::make_reverse_iterator(x.end()),
                                std::make_reverse_iterator(x.begin()), x.max());
    if (first != x.end() && std::count(first, last.base(), x.max()) != last.base() - first) {
        throw InternalConsistencyError("copies of max are not consecutive in " + format_word(x));
    }
    return true;
}

bool is_primitive(const Word& x) { return is_modasc(x) && !has_flat_step(x); }

const char* to_string(SequenceClass c) { return c == SequenceClass::modasc ? "modasc" : "prim"; }

SequenceClass parse_sequence_class(std::string_view s) {
    if (s == "modasc") return SequenceClass::modasc;
    if (s == "prim") return SequenceClass::prim;
    throw InvalidInput("unknown class \"" + std::string(s) + "\" (expected modasc or prim)");
}

bool in_class(const Word& x, SequenceClass c) {
    return c == SequenceClass::modasc ? is_modasc(x) : is_primitive(x);
}

namespace {

class Generator {
public:
    Generator(std::size_t n, bool primitive_only, const WordVisitor& visit)
        : n_(n), primitive_only_(primitive_only), visit_(visit) {
        buf_.reserve(n);
    }

    void run() {
        if (n_ == 0) {
            visit_(Word{});
            return;
        }
        buf_.push_back(1);
        extend(1);
    }

private:
    void extend(int max) {
        if (buf_.size() == n_) {
            visit_(Word(buf_));
            return;
        }
        const int last = buf_.back();
        for (int a = 1; a <= last; ++a) {
            if (primitive_only_ && a == last) continue;
            buf_.push_back(a);
            extend(max);
            buf_.pop_back();
        }
        for (int a = last + 1; a <= max + 1; ++a) {
            for (int& v : buf_) v += (v >= a);
            buf_.push_back(a);
            extend(max + 1);
            buf_.pop_back();
            for (int& v : buf_) v -= (v > a);
        }
    }

    std::size_t n_;
    bool primitive_only_;
    const WordVisitor& visit_;
    std::vector<int> buf_;
};

void check_limit(std::size_t n, std::size_t limit) {
    if (n > limit) {
        throw CapExceeded("length " + std::to_string(n) + " exceeds materialization limit " +
                          std::to_string(limit));
    }
}

std::vector<Word> collect_sorted(std::size_t n, bool primitive_only) {
    std::vector<Word> out;
    Generator(n, primitive_only, [&](const Word& w) { out.push_back(w); }).run();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void for_each_modasc(std::size_t n, const WordVisitor& visit) { Generator(n, false, visit).run(); }

void for_each_prim(std::size_t n, const WordVisitor& visit) { Generator(n, true, visit).run(); }

void for_each_in_class(std::size_t n, SequenceClass c, const WordVisitor& visit) {
    Generator(n, c == SequenceClass::prim, visit).run();
}

std::vector<Word> generate_modasc(std::size_t n, std::size_t limit) {
    check_limit(n, limit);
    return collect_sorted(n, false);
}

std::vector<Word> generate_prim(std::size_t n, std::size_t limit) {
    check_limit(n, limit);
    return collect_sorted(n, true);
}

std::vector<Word> generate_class(std::size_t n, SequenceClass c, std::size_t limit) {
    return c == SequenceClass::modasc ? generate_modasc(n, limit) : generate_prim(n, limit);
}

FlatDecomposition collapse_flats(const Word& x) {
    std::vector<int> prim;
    std::vector<std::size_t> mult;
    for (int v : x) {
        if (!prim.empty() && prim.back() == v) {
            ++mult.back();
        } else {
            prim.push_back(v);
            mult.push_back(1);
        }
    }
    return {Word(std::move(prim)), std::move(mult)};
}

Word insert_flats(const FlatDecomposition& d) {
    if (d.multiplicities.size() != d.primitive.size()) {
        throw InvalidInput("flat decomposition needs one multiplicity per primitive entry");
    }
    if (has_flat_step(d.primitive)) {
        throw InvalidInput("primitive part has a flat step: " + format_word(d.primitive));
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < d.primitive.size(); ++i) {
        if (d.multiplicities[i] == 0) throw InvalidInput("multiplicities must be positive");
        out.insert(out.end(), d.multiplicities[i], d.primitive[i]);
    }
    return Word(std::move(out));
}

}  // namespace modasc
