// Acceptance run: one PASS/FAIL line per criterion, exact integers only.

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "modasc/counting.hpp"
#include "modasc/dyck.hpp"
#include "modasc/maps.hpp"
#include "modasc/patterns.hpp"
#include "modasc/sequences.hpp"
#include "modasc/set_partition.hpp"
#include "oracles.hpp"

using namespace modasc;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::string at(const std::string& label, std::size_t n) { return label + " n=" + std::to_string(n); }

Integer count(const std::string& y, SequenceClass c, std::size_t n) {
    const std::vector<CayleyPattern> ys{parse_pattern(y)};
    return oracle_count(ys, c, n);
}

const std::vector<std::string> kSinglePatterns{"11",   "12",   "21",   "121",  "123",  "112",   "122",
                                       "1232", "132",  "212",  "1212", "2132", "12132", "2321",
                                       "2213", "2231", "213",  "1213", "231",  "1234",  "1123",
                                       "221",  "312",  "1312", "321"};

// Rows whose counts follow from the primitive ones by the binomial transform.
const std::vector<std::string> kFlatFree{"12",  "21",  "121",  "123",  "132",  "212",
                                         "1212", "2132", "12132", "2321", "213", "1213",
                                         "231", "1234", "312", "1312", "321", "1232"};

// -- 1 ----------------------------------------------------------------------------
void table1() {
    std::size_t compared = 0;
    for (const auto& y : kSinglePatterns) {
        const CayleyPattern pat = parse_pattern(y);
        for (auto c : {SequenceClass::modasc, SequenceClass::prim}) {
            if (!has_closed_count(pat, c)) continue;
            for (std::size_t n = 1; n <= 9; ++n) {
                expect(closed_count(pat, c, n) == count(y, c, n), at(y + "-" + to_string(c), n));
                ++compared;
            }
        }
    }
    // the enumeration behind oracle_count against the endofunction filter
    for (const auto& y : kSinglePatterns) {
        const auto yv = parse_pattern(y).word().vec();
        for (std::size_t n = 1; n <= 6; ++n) {
            std::size_t m = 0, p = 0;
            for (const auto& x : oracle::modasc_words(n)) {
                if (oracle::contains(x, yv)) continue;
                ++m;
                p += oracle::flat_free(x);
            }
            expect(count(y, SequenceClass::modasc, n) == m && count(y, SequenceClass::prim, n) == p,
                   at("filter " + y, n));
        }
    }
    expect(compared > 300, "too few rows compared");
}

// -- 2 ----------------------------------------------------------------------------
void printed() {
    // Printed lists start at the empty word (n = 0).
    const std::vector<long long> m312{1, 1, 2, 5, 14, 43, 142, 495, 1796, 6715, 25692};
    for (std::size_t n = 0; n < m312.size(); ++n) expect(count("312", SequenceClass::modasc, n) == m312[n], at("312", n));
    const std::vector<long long> m221{1, 1, 2, 5, 14, 44, 155, 607, 2617};
    for (std::size_t n = 0; n < m221.size(); ++n) expect(count("221", SequenceClass::modasc, n) == m221[n], at("221", n));

    struct Row {
        std::string y;
        SequenceClass c;
        std::vector<long long> v;  // from n = 1
    };
    const std::vector<Row> table2{
        {"111", SequenceClass::modasc, {1, 2, 4, 10, 29, 97, 367, 1550}},
        {"111", SequenceClass::prim, {1, 1, 2, 5, 14, 46, 172, 718, 3317, 16796}},
        {"211", SequenceClass::prim, {1, 1, 2, 5, 14, 44, 153, 581, 2385}},
        {"1223", SequenceClass::prim, {1, 1, 2, 5, 14, 44, 153, 581, 2385}},
        {"4321", SequenceClass::modasc, {1, 2, 5, 15, 53, 217, 1008, 5188}},
        {"4321", SequenceClass::prim, {1, 1, 2, 5, 16, 61, 265, 1267}},
    };
    for (const auto& r : table2)
        for (std::size_t n = 1; n <= r.v.size(); ++n)
            expect(count(r.y, r.c, n) == r.v[n - 1], at(r.y + "-" + to_string(r.c), n));
}

// -- 3 ----------------------------------------------------------------------------
void transport() {
    const auto y213 = parse_pattern("213"), y231 = parse_pattern("231");
    for (std::size_t n = 0; n <= 9; ++n) {
        std::vector<Perm> image;
        for_each_prim(n, [&](const Word& x) {
            const Perm p = standardize(x);
            expect(p.word().vec() == oracle::standardize(x.vec()), "st " + format_word(x));
            expect(omega_to_prim(p) == x, "inverse " + format_word(x));
            image.push_back(p);
        });
        std::sort(image.begin(), image.end());
        expect(std::adjacent_find(image.begin(), image.end()) == image.end(), at("injective", n));

        // Omega_n by a direct scan of all permutations
        std::vector<Perm> omega;
        for (const auto& p : all_permutations(n)) {
            bool occ = false;
            for (std::size_t i = 0; i + 1 < n && !occ; ++i)
                for (std::size_t j = i + 2; j < n && !occ; ++j) occ = p[i] > p[i + 1] && p[i + 1] == p[j] + 1;
            if ((n == 0 || p[0] == 1) && !occ) omega.push_back(p);
        }
        expect(image == omega, at("image", n));
        for (const auto& p : omega) expect(standardize(omega_to_prim(p)) == p, "st o inverse " + format_word(p.word()));

        std::size_t o213 = 0, o231 = 0;
        for (const auto& p : omega) {
            o213 += !contains(p.word(), y213);
            o231 += !contains(p.word(), y231);
        }
        expect(count("213", SequenceClass::prim, n) == o213, at("213", n));
        expect(count("231", SequenceClass::prim, n) == o231, at("231", n));
        if (n >= 1) expect(count("321", SequenceClass::prim, n) == oracle::catalan(static_cast<long>(n) - 1), at("321", n));
    }
}

// -- 4 ----------------------------------------------------------------------------
void phi() {
    const std::vector<CayleyPattern> ys{parse_pattern("312")};
    for (std::size_t n = 0; n <= 9; ++n) {
        std::set<std::string> image;
        for_each_prim(n + 1, [&](const Word& x) {
            if (!avoids_all(x, ys)) return;
            const DyckPath p = phi_312(x);
            expect(p.semilength() == n, "semilength " + format_word(x));
            expect(phi_inverse(p) == x, "roundtrip " + format_word(x));
            image.insert(format_dyck_path(p));
        });
        std::set<std::string> want;
        for (const auto& s : oracle::dyck_paths(n))
            if (s.find("dudu") == std::string::npos) want.insert(s);
        expect(image == want, at("image", n));
    }
    const Word x = parse_word("123432561761897");
    const std::string path = "uuududduuudddduududduuuddudd";
    expect(format_dyck_path(phi_312(x)) == path, "worked example");
    expect(phi_inverse(parse_dyck_path(path)) == x, "worked example inverse");
    const PathFactors f = decompose_returns(parse_dyck_path(path));
    expect(f.count() == 3 && f.factors[0].semilength() == 6 && f.factors[1].semilength() == 2 &&
               f.factors[2].semilength() == 3,
           "factors");
}

// -- 5 ----------------------------------------------------------------------------
void bell2321() {
    const std::vector<CayleyPattern> ys{parse_pattern("2321")};
    expect(oracle::bell(10) == 115975, "bell(10)");
    for (std::size_t n = 1; n <= 10; ++n) {
        expect(oracle_count(ys, SequenceClass::modasc, n) == oracle::bell(static_cast<long>(n)), at("count", n));
        const auto hist = ascent_distribution(ys, SequenceClass::modasc, n);
        for (std::size_t h = 0; h <= n; ++h) {
            const auto it = hist.find(h);
            const Integer got = it == hist.end() ? Integer(0) : it->second;
            expect(got == oracle::stirling2(static_cast<long>(n), static_cast<long>(n - h)), at("asc=" + std::to_string(h), n));
        }
    }
}

// -- 6 ----------------------------------------------------------------------------
void series() {
    const std::size_t N = 20;
    expect(f_series_product_form(N) == f_series_alternating_form(N), "F two forms");
    const IntSeries prim122 = special_series(SpecialSeries::PrimOGF122, N);
    expect(prim122 == IntSeries({1, 1}, N) * special_series(SpecialSeries::F, N), "Prim_122 = (1+t)F");
    for (std::size_t n = 0; n <= 8; ++n) expect(prim122[n] == count("122", SequenceClass::prim, n), at("Prim_122", n));

    const IntSeries m122 = special_series(SpecialSeries::ModascOGF122, N);
    for (std::size_t n = 1; n <= N; ++n) {
        Integer s = 0;
        for (std::size_t k = 1; k <= n; ++k) s += oracle::Big(boost::multiprecision::pow(oracle::Big(k), static_cast<unsigned>(n - k)));
        expect(m122[n] == s, at("Modasc_122", n));
    }

    for (const auto& y : kFlatFree) {
        const CayleyPattern pat = parse_pattern(y);
        CountTable prim{y, 1, {}, Provenance::formula};
        std::vector<Integer> coeffs{1};
        for (std::size_t n = 1; n <= N; ++n) {
            prim.values.push_back(closed_count(pat, SequenceClass::prim, n));
            coeffs.push_back(prim.values.back());
        }
        const IntSeries sub = ogf_substitute(IntSeries(coeffs, N), N);
        for (std::size_t n = 0; n <= N; ++n) expect(sub[n] == binomial_transform_count(prim, n), at("transform vs substitution " + y, n));
    }

    const IntSeries d = special_series(SpecialSeries::D, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        const Integer paths = oracle::dudu_avoiders(n);
        expect(d[n] == paths, at("[t^n]D", n));
        expect(dudu_count_lagrange(n) == paths, at("Lagrange", n));
    }
}

// -- 7 ----------------------------------------------------------------------------
void equivalences() {
    struct Pair {
        std::string a, b;
        SequenceClass c;
    };
    using C = SequenceClass;
    const std::vector<Pair> pairs{
        {"21", "121", C::modasc},    {"213", "1213", C::modasc},   {"312", "1312", C::modasc},
        {"212", "1212", C::modasc},  {"212", "2132", C::modasc},   {"212", "12132", C::modasc},
        {"122", "1232", C::prim},    {"221", "2321", C::prim},     {"212,213", "213", C::prim},
        {"221,231", "231", C::prim},
    };
    for (const auto& p : pairs) {
        const auto r = equal_avoidance_sets(parse_pattern_set(p.a), parse_pattern_set(p.b), p.c, 9);
        expect(r.equal, std::string(to_string(p.c)) + "(" + p.a + ") vs (" + p.b + ")" +
                            (r.witness ? " witness " + format_word(r.witness->word) : ""));
    }
}

// -- 8 ----------------------------------------------------------------------------
void stirling() {
    const WeightedCounts p = p_table(12);
    for (long n = 0; n <= 12; ++n) {
        Integer row = 0;
        for (std::size_t i = 0; i < p.rows[static_cast<std::size_t>(n)].size(); ++i) {
            expect(p.rows[static_cast<std::size_t>(n)][i] == oracle::p_nonsingleton(n, static_cast<long>(i)), at("p", static_cast<std::size_t>(n)));
            row += p.rows[static_cast<std::size_t>(n)][i];
        }
        expect(row == oracle::bell(n), at("row sum", static_cast<std::size_t>(n)));
    }
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t h = 0; h < n; ++h) expect(stirling_identity_check(n, h, p), at("h=" + std::to_string(h), n));
}

// -- 9 ----------------------------------------------------------------------------
void micro() {
    expect(format_compact(standardize(parse_word("312112341")).word()) == "715236894", "st(312112341)");
    expect(format_compact(standardize(parse_word("1312")).word()) == "1423", "st(1312)");
    expect(format_compact(burge_transpose(parse_word("1312"), TieBreak::ascending).word()) == "1342", "burge(1312)");
    expect(format_compact(collapse_flats(parse_word("1113122224211")).primitive) == "1312421", "collapse");
    expect(format_set_partition(modasc122_to_partition(parse_word("134112561"))) == "{1,6,7}{2}{3,5,8,9}{4}",
           "134112561");
    expect(format_compact(claesson(parse_set_partition("{1,3,6}{2,7}{4}{5,8,9}")).word()) == "361724895", "Claesson");
    const Perm p = parse_perm("1 11 12 14 2 5 3 7 13 8 6 4 10 9");
    const Word x = parse_word("15681213732143");
    expect(standardize(x) == p, "chain example st(x) = p");
    expect(omega_to_prim(p) == x, "chain example x from p");
    expect(omega_to_prim_by_chains(p) == x, "chain example by chains");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"1 single-pattern closed counts, n<=9", table1},
        {"2 printed sequences (312, 221, unsolved rows)", printed},
        {"3 standardization transport, n<=9", transport},
        {"4 phi bijection and worked path, n<=9", phi},
        {"5 Modasc(2321) Bell counts and ascent histogram, n<=10", bell2321},
        {"6 series identities, order 20", series},
        {"7 pattern equivalences, n<=9", equivalences},
        {"8 Stirling identity, n<=12", stirling},
        {"9 worked micro-examples", micro},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        std::string why;
        try {
            run();
        } catch (const Failure& f) {
            why = f.what;
        } catch (const std::exception& e) {
            why = std::string("error: ") + e.what();
        }
        if (why.empty()) {
            std::cout << "PASS  " << name << '\n';
        } else {
            std::cout << "FAIL  " << name << "  (" << why << ")\n";
            ++failed;
        }
    }
    std::cout << (9 - failed) << "/9 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
