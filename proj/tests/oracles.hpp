#pragma once

// Brute-force reference implementations used by the tests. Nothing here
// calls into the library beyond plain value types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Seq = std::vector<int>;
using Big = boost::multiprecision::cpp_int;

inline bool cayley(const Seq& x) {
    int m = x.empty() ? 0 : *std::max_element(x.begin(), x.end());
    std::vector<bool> seen(m + 1, false);
    for (int v : x) {
        if (v < 1) return false;
        seen[v] = true;
    }
    for (int v = 1; v <= m; ++v)
        if (!seen[v]) return false;
    return true;
}

// {(i, x_i)} for ascent tops (first entry included) and leftmost copies.
inline bool modasc(const Seq& x) {
    if (!cayley(x)) return false;
    std::set<std::pair<std::size_t, int>> tops, firsts;
    std::set<int> seen;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i == 0 || x[i - 1] < x[i]) tops.insert({i, x[i]});
        if (seen.insert(x[i]).second) firsts.insert({i, x[i]});
    }
    return tops == firsts;
}

inline bool flat_free(const Seq& x) {
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] == x[i - 1]) return false;
    return true;
}

// Every endofunction [n] -> [n], filtered. Sorted lexicographically.
template <class Pred>
std::vector<Seq> endofunctions(std::size_t n, Pred keep) {
    std::vector<Seq> out;
    Seq x(n, 1);
    if (n == 0) {
        if (keep(x)) out.push_back(x);
        return out;
    }
    while (true) {
        if (keep(x)) out.push_back(x);
        std::size_t i = n;
        while (i > 0 && x[i - 1] == static_cast<int>(n)) x[--i] = 1;
        if (i == 0) break;
        ++x[i - 1];
    }
    return out;
}

inline std::vector<Seq> modasc_words(std::size_t n) {
    return endofunctions(n, [](const Seq& x) { return modasc(x); });
}

inline std::vector<Seq> prim_words(std::size_t n) {
    return endofunctions(n, [](const Seq& x) { return modasc(x) && flat_free(x); });
}

inline bool order_isomorphic(const Seq& a, const Seq& b) {
    for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t t = 0; t < a.size(); ++t)
            if ((a[s] < a[t]) != (b[s] < b[t]) || (a[s] == a[t]) != (b[s] == b[t])) return false;
    return true;
}

// Tries every index subset of size |y|.
inline bool contains(const Seq& x, const Seq& y) {
    std::size_t n = x.size(), k = y.size();
    if (k > n) return false;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        Seq sub;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) sub.push_back(x[i]);
        if (order_isomorphic(sub, y)) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

// st(x)_i = #{j : x_j < x_i} + #{j <= i : x_j = x_i}
inline Seq standardize(const Seq& x) {
    Seq p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        int c = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] < x[i] || (x[j] == x[i] && j <= i)) ++c;
        p[i] = c;
    }
    return p;
}

// Column sort of the flipped biword; ties on the top row broken on the bottom.
inline Seq burge(const Seq& x, bool ascending_ties) {
    std::vector<std::pair<int, int>> cols;
    for (std::size_t i = 0; i < x.size(); ++i) cols.push_back({x[i], static_cast<int>(i) + 1});
    std::sort(cols.begin(), cols.end(), [&](auto a, auto b) {
        if (a.first != b.first) return a.first < b.first;
        return ascending_ties ? a.second < b.second : a.second > b.second;
    });
    Seq p;
    for (auto [t, b] : cols) p.push_back(b);
    return p;
}

// Every u/d string of length 2n that stays weakly above the axis.
inline std::vector<std::string> dyck_paths(std::size_t n) {
    std::vector<std::string> out;
    for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
        std::string s;
        int h = 0;
        bool ok = true;
        for (std::size_t i = 0; i < 2 * n && ok; ++i) {
            bool up = !(mask >> (2 * n - 1 - i) & 1u);
            s += up ? 'u' : 'd';
            h += up ? 1 : -1;
            ok = h >= 0;
        }
        if (ok && h == 0) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        // u before d
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
            if (a[i] != b[i]) return a[i] == 'u';
        return a.size() < b.size();
    });
    return out;
}

inline std::size_t dudu_avoiders(std::size_t n) {
    std::size_t c = 0;
    for (const auto& s : dyck_paths(n))
        if (s.find("dudu") == std::string::npos) ++c;
    return c;
}

// Partitions of [j] into i blocks of size >= 2:
// A(j, i) = i A(j-1, i) + (j-1) A(j-2, i-1).
inline Big no_singleton_stirling(long j, long i) {
    if (j == 0 && i == 0) return 1;
    if (j <= 0 || i <= 0) return 0;
    Big r = Big(i) * no_singleton_stirling(j - 1, i);
    if (j >= 2) r += Big(j - 1) * no_singleton_stirling(j - 2, i - 1);
    return r;
}

inline Big choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    Big r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// p_{n,i}: choose the elements living in non-singleton blocks.
inline Big p_nonsingleton(long n, long i) {
    Big r = 0;
    for (long j = 0; j <= n; ++j) r += choose(n, j) * no_singleton_stirling(j, i);
    return r;
}

// Stirling numbers via the explicit alternating sum.
inline Big stirling2(long n, long k) {
    if (n == 0 && k == 0) return 1;
    if (k <= 0 || k > n) return 0;
    Big s = 0;
    for (long j = 0; j <= k; ++j) {
        Big term = choose(k, j) * boost::multiprecision::pow(Big(k - j), static_cast<unsigned>(n));
        if (j % 2) s -= term;
        else s += term;
    }
    Big f = 1;
    for (long j = 2; j <= k; ++j) f *= j;
    return s / f;
}

inline Big bell(long n) {
    Big s = 0;
    for (long k = 0; k <= n; ++k) s += stirling2(n, k);
    return s;
}

inline Big catalan(long n) { return choose(2 * n, n) / (n + 1); }

}  // namespace oracle
