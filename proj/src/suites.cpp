#include "modasc/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "modasc/counting.hpp"
#include "modasc/dyck.hpp"
#include "modasc/error.hpp"
#include "modasc/maps.hpp"
#include "modasc/patterns.hpp"
#include "modasc/set_partition.hpp"

namespace modasc {

TableId parse_table_id(std::string_view s) {
    if (s == "table1") return TableId::table1;
    if (s == "table2") return TableId::table2;
    throw InvalidInput("unknown table \"" + std::string(s) + "\"");
}

SuiteId parse_suite_id(std::string_view s) {
    if (s == "bijections") return SuiteId::bijections;
    if (s == "transport") return SuiteId::transport;
    if (s == "equivalences") return SuiteId::equivalences;
    if (s == "identities") return SuiteId::identities;
    if (s == "all") return SuiteId::all;
    throw InvalidInput("unknown suite \"" + std::string(s) + "\"");
}

const char* to_string(SuiteId s) {
    switch (s) {
        case SuiteId::bijections: return "bijections";
        case SuiteId::transport: return "transport";
        case SuiteId::equivalences: return "equivalences";
        case SuiteId::identities: return "identities";
        case SuiteId::all: return "all";
    }
    return "?";
}

const std::vector<std::string>& table1_patterns() {
    static const std::vector<std::string> rows{
        "11",  "12",   "21",   "121",  "123",   "112",  "122",  "1232", "132",  "212",  "1212", "2132", "12132",
        "2321", "2213", "2231", "213", "1213", "231", "1234", "1123", "221", "312", "1312", "321"};
    return rows;
}

const std::vector<GoldenRow>& table2_golden() {
    static const std::vector<GoldenRow> rows{
        {"111", SequenceClass::modasc, {1, 2, 4, 10, 29, 97, 367, 1550}},
        {"111", SequenceClass::prim, {1, 1, 2, 5, 14, 46, 172, 718, 3317, 16796}},
        {"211", SequenceClass::prim, {1, 1, 2, 5, 14, 44, 153, 581, 2385}},
        {"1223", SequenceClass::prim, {1, 1, 2, 5, 14, 44, 153, 581, 2385}},
        {"4321", SequenceClass::modasc, {1, 2, 5, 15, 53, 217, 1008, 5188}},
        {"4321", SequenceClass::prim, {1, 1, 2, 5, 16, 61, 265, 1267}},
    };
    return rows;
}

void require_within_caps(TableId, const RunOptions& o) {
    if (o.n > o.caps.words) {
        throw CapExceeded("--n " + std::to_string(o.n) + " exceeds the word cap " + std::to_string(o.caps.words));
    }
}

void require_within_caps(SuiteId s, const RunOptions& o) {
    const std::size_t cap = s == SuiteId::identities ? o.caps.lattice : o.caps.words;
    if (o.n > cap) {
        throw CapExceeded("--n " + std::to_string(o.n) + " exceeds the cap " + std::to_string(cap) + " for suite " +
                          to_string(s));
    }
}

namespace {

Outcome pass(std::string detail = {}) { return {Status::pass, std::move(detail), std::nullopt}; }
Outcome fail(std::string detail, std::optional<std::string> witness = std::nullopt) {
    return {Status::fail, std::move(detail), std::move(witness)};
}
Outcome info(std::string detail) { return {Status::info, std::move(detail), std::nullopt}; }

std::string join(const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].str();
    }
    return s;
}

std::string upto(std::size_t n) { return "n<=" + std::to_string(n); }

std::string mismatch(std::size_t n, const Integer& want, const Integer& got) {
    return "n=" + std::to_string(n) + " expected=" + want.str() + " got=" + got.str();
}

std::vector<CayleyPattern> one(const std::string& y) { return {parse_pattern(y)}; }

// Thrown out of visitors to stop at the first counterexample.
struct Witness {
    std::string text;
};

// -- tables ---------------------------------------------------------------------

std::vector<Integer> oracle_counts(const std::vector<CayleyPattern>& ys, SequenceClass c, std::size_t n_max) {
    std::vector<Integer> v;
    for (std::size_t n = 1; n <= n_max; ++n) v.push_back(oracle_count(ys, c, n));
    return v;
}

Check table1_row(const std::string& y, SequenceClass c, std::size_t n_max) {
    return {"table1." + y + "." + to_string(c), "single-pattern enumeration", [y, c, n_max]() -> Outcome {
                const CayleyPattern pat = parse_pattern(y);
                const auto got = oracle_counts(one(y), c, n_max);
                if (!has_closed_count(pat, c)) return info("no closed form; oracle " + join(got));
                for (std::size_t n = 1; n <= n_max; ++n) {
                    const Integer want = closed_count(pat, c, n);
                    if (want != got[n - 1]) return fail(closed_count_family(pat, c), y + " " + mismatch(n, want, got[n - 1]));
                }
                return pass(closed_count_family(pat, c) + " " + upto(n_max) + (got.empty() ? "" : ": " + join(got)));
            }};
}

Check table1_transform(const std::string& y, std::size_t n_max) {
    return {"table1." + y + ".transform", "binomial transform", [y, n_max]() -> Outcome {
                const auto prim = oracle_counts(one(y), SequenceClass::prim, n_max);
                const auto full = oracle_counts(one(y), SequenceClass::modasc, n_max);
                const CountTable t{y + "-prim", 1, prim, Provenance::oracle};
                for (std::size_t n = 1; n <= n_max; ++n) {
                    const Integer want = binomial_transform_count(t, n);
                    if (want != full[n - 1]) return fail("sum C(n-1,k-1) prim_k", y + " " + mismatch(n, want, full[n - 1]));
                }
                return pass(upto(n_max));
            }};
}

Check table2_row(const GoldenRow& row, std::size_t n_max) {
    return {"table2." + row.pattern + "." + to_string(row.cls), "unsolved patterns", [row, n_max]() -> Outcome {
                const auto got = oracle_counts(one(row.pattern), row.cls, n_max);
                const std::size_t shared = std::min(n_max, row.values.size());
                for (std::size_t n = 1; n <= shared; ++n) {
                    const Integer want = row.values[n - 1];
                    if (want != got[n - 1]) return fail("printed data", row.pattern + " " + mismatch(n, want, got[n - 1]));
                }
                std::string detail = "printed data " + upto(shared) + (got.empty() ? "" : ": " + join(got));
                if (n_max > row.values.size()) detail += " (beyond printed length from n=" + std::to_string(row.values.size() + 1) + ")";
                return pass(detail);
            }};
}

// Counts compared with a guessed family; reported, never asserted.
Check table2_guess(const std::string& y, SequenceClass c, const std::string& family, std::size_t n_max,
                   std::function<Integer(std::size_t)> guess) {
    return {"table2." + y + "." + to_string(c), "unsolved patterns",
            [y, c, family, n_max, guess = std::move(guess)]() -> Outcome {
                const auto got = oracle_counts(one(y), c, n_max);
                std::size_t agree = 0;
                while (agree < n_max && guess(agree + 1) == got[agree]) ++agree;
                std::string verdict = agree == n_max ? "agrees with " + family + " " + upto(n_max)
                                                     : "differs from " + family + " at n=" + std::to_string(agree + 1);
                return info(verdict + "; oracle " + join(got));
            }};
}

// -- suite helpers ----------------------------------------------------------------

template <class Body>
Outcome for_lengths(std::size_t lo, std::size_t hi, Body body) {
    try {
        for (std::size_t k = lo; k <= hi; ++k) body(k);
    } catch (const Witness& w) {
        return fail("counterexample", w.text);
    }
    return pass(upto(hi));
}

Check bijection_burge_ascending(std::size_t n) {
    return {"burge.ascending", "Burge transpose onto Omega", [n] {
                return for_lengths(0, n, [](std::size_t k) {
                    std::vector<Perm> image;
                    for_each_prim(k, [&](const Word& x) { image.push_back(burge_transpose(x, TieBreak::ascending)); });
                    std::sort(image.begin(), image.end());
                    if (image != omega_set(k)) throw Witness{"k=" + std::to_string(k)};
                });
            }};
}

Check bijection_burge_descending(std::size_t n) {
    return {"burge.descending", "Fishburn permutations", [n] {
                return for_lengths(1, n, [](std::size_t k) {
                    std::set<Perm> seen;
                    for_each_modasc(k, [&](const Word& x) {
                        if (!seen.insert(burge_transpose(x, TieBreak::descending)).second) throw Witness{format_word(x)};
                    });
                });
            }};
}

Check bijection_phi(std::size_t n) {
    return {"phi.312", "DUDU-avoiding Dyck paths", [n] {
                const auto ys = one("312");
                return for_lengths(1, n, [&](std::size_t k) {
                    std::vector<DyckPath> image;
                    for_each_prim(k, [&](const Word& x) {
                        if (!avoids_all(x, ys)) return;
                        const DyckPath p = phi_312(x);
                        if (p.semilength() + 1 != k || !avoids_dudu(p) || phi_inverse(p) != x) throw Witness{format_word(x)};
                        image.push_back(p);
                    });
                    std::sort(image.begin(), image.end());
                    if (image != generate_dudu_avoiders(k - 1)) throw Witness{"semilength " + std::to_string(k - 1)};
                });
            }};
}

Check worked_phi() {
    return {"phi.worked-example", "DUDU-avoiding Dyck paths", [] {
                const Word x = parse_word("123432561761897");
                const std::string want = "uuududduuudddduududduuuddudd";
                const std::string got = format_dyck_path(phi_312(x));
                if (got != want) return fail("phi(123432561761897)", got);
                if (phi_inverse(parse_dyck_path(want)) != x) return fail("inverse", want);
                return pass(x.size() == 15 ? "semilength 14" : "");
            }};
}

Check bijection_claesson(std::size_t n) {
    return {"claesson", "32-1 avoiders and set partitions", [n] {
                return for_lengths(0, n, [](std::size_t k) {
                    std::set<Perm> image;
                    for_each_set_partition(k, [&](const SetPartition& b) {
                        const Perm p = claesson(b);
                        if (contains_special(p, SpecialPattern::vincular_32_1) || claesson_inverse(p) != b ||
                            descents(p.word()) != non_singleton_blocks(b)) {
                            throw Witness{format_set_partition(b)};
                        }
                        image.insert(p);
                    });
                    std::size_t avoiders = 0;
                    for (const auto& p : all_permutations(k)) avoiders += !contains_special(p, SpecialPattern::vincular_32_1);
                    if (image.size() != avoiders) throw Witness{"k=" + std::to_string(k)};
                });
            }};
}

Check bijection_112(std::size_t n) {
    return {"modasc112.compositions", "compositions", [n] {
                const auto ys = one("112");
                return for_lengths(1, n, [&](std::size_t k) {
                    std::set<std::vector<std::size_t>> seen;
                    for_each_modasc(k, [&](const Word& x) {
                        if (!avoids_all(x, ys)) return;
                        const Composition c = modasc112_to_composition(x);
                        if (composition_to_modasc112(c) != x || !seen.insert(c.parts).second) throw Witness{format_word(x)};
                    });
                    if (seen.size() != std::size_t{1} << (k - 1)) throw Witness{"k=" + std::to_string(k)};
                });
            }};
}

Check bijection_122(std::size_t n) {
    return {"modasc122.partitions", "set partitions with interval minima", [n] {
                const auto ys = one("122");
                return for_lengths(1, n, [&](std::size_t k) {
                    std::set<SetPartition> seen;
                    for_each_modasc(k, [&](const Word& x) {
                        if (!avoids_all(x, ys)) return;
                        const SetPartition b = modasc122_to_partition(x);
                        for (std::size_t i = 0; i < b.block_count(); ++i) {
                            if (b.blocks()[i].front() != static_cast<int>(i) + 1) throw Witness{format_word(x)};
                        }
                        if (partition_to_modasc122(b) != x || !seen.insert(b).second) throw Witness{format_word(x)};
                    });
                    Integer want = 0;
                    for (std::size_t j = 1; j <= k; ++j) want += power(j, k - j);
                    if (Integer(seen.size()) != want) throw Witness{"k=" + std::to_string(k)};
                });
            }};
}

Check bijection_flats(std::size_t n) {
    return {"flats.roundtrip", "primitive sequences", [n] {
                return for_lengths(1, n, [](std::size_t k) {
                    for_each_modasc(k, [](const Word& x) {
                        const auto d = collapse_flats(x);
                        if (!is_primitive(d.primitive) || insert_flats(d) != x) throw Witness{format_word(x)};
                    });
                });
            }};
}

Check micro_examples() {
    return {"examples.micro", "worked examples", []() -> Outcome {
                struct Case {
                    std::string what, got, want;
                };
                const SetPartition beta = parse_set_partition("{1,3,6}{2,7}{4}{5,8,9}");
                const Perm chain_p = parse_perm("1 11 12 14 2 5 3 7 13 8 6 4 10 9");
                const Word chain_x = parse_word("15681213732143");
                const std::vector<Case> cases{
                    {"st(312112341)", format_compact(standardize(parse_word("312112341")).word()), "715236894"},
                    {"st(1312)", format_compact(standardize(parse_word("1312")).word()), "1423"},
                    {"burge(1312, ascending)", format_compact(burge_transpose(parse_word("1312"), TieBreak::ascending).word()), "1342"},
                    {"collapse(1113122224211)", format_compact(collapse_flats(parse_word("1113122224211")).primitive), "1312421"},
                    {"134112561", format_set_partition(modasc122_to_partition(parse_word("134112561"))), "{1,6,7}{2}{3,5,8,9}{4}"},
                    {"claesson", format_compact(claesson(beta).word()), "361724895"},
                    {"st(chain x)", format_word(standardize(chain_x).word()), format_word(chain_p.word())},
                    {"omega_to_prim(chain p)", format_compact(omega_to_prim(chain_p)), "15681213732143"},
                };
                for (const auto& c : cases) {
                    if (c.got != c.want) return fail(c.what + " expected " + c.want, c.got);
                }
                return pass(std::to_string(cases.size()) + " examples");
            }};
}

// -- transport --------------------------------------------------------------------

Check transport_st(std::size_t n) {
    return {"st.prim-to-omega", "standardization transport", [n] {
                return for_lengths(0, n, [](std::size_t k) {
                    std::vector<Perm> image;
                    for_each_prim(k, [&](const Word& x) {
                        const Perm p = standardize(x);
                        if (!in_omega(p) || omega_to_prim(p) != x) throw Witness{format_word(x)};
                        image.push_back(p);
                    });
                    std::sort(image.begin(), image.end());
                    const auto omega = omega_set(k);
                    if (image != omega) throw Witness{"k=" + std::to_string(k)};
                    for (const auto& p : omega) {
                        const Word x = omega_to_prim(p);
                        if (standardize(x) != p || omega_to_prim_by_chains(p) != x) throw Witness{format_word(p.word())};
                    }
                });
            }};
}

Check transport_corollary(std::size_t n) {
    return {"st.pattern-corollary", "standardization transport", [n] {
                const auto y213 = parse_pattern("213"), y231 = parse_pattern("231"), y321 = parse_pattern("321");
                return for_lengths(1, n, [&](std::size_t k) {
                    std::size_t o213 = 0, o231 = 0;
                    for (const auto& p : omega_set(k)) {
                        o213 += !contains(p.word(), y213);
                        o231 += !contains(p.word(), y231);
                    }
                    const std::string at = "k=" + std::to_string(k);
                    if (oracle_count(std::vector{y213}, SequenceClass::prim, k) != o213) throw Witness{"213 " + at};
                    if (oracle_count(std::vector{y231}, SequenceClass::prim, k) != o231) throw Witness{"231 " + at};
                    if (oracle_count(std::vector{y321}, SequenceClass::prim, k) != catalan(k - 1)) throw Witness{"321 " + at};
                });
            }};
}

Check transport_motzkin(std::size_t n) {
    return {"omega.motzkin", "Motzkin numbers", [n] {
                const auto y213 = parse_pattern("213"), y231 = parse_pattern("231");
                return for_lengths(0, n, [&](std::size_t k) {
                    std::size_t a = 0, b = 0;
                    for (const auto& p : all_permutations(k)) {
                        if (contains_special(p, SpecialPattern::omega)) continue;
                        a += !contains(p.word(), y213);
                        b += !contains(p.word(), y231);
                    }
                    if (motzkin(k) != a || motzkin(k) != b) throw Witness{"k=" + std::to_string(k)};
                });
            }};
}

Check transport_rlmin(std::size_t n) {
    return {"claesson.rlmin", "32-1 avoiders and set partitions", [n] {
                const auto ys = one("221");
                return for_lengths(1, n, [&](std::size_t k) {
                    std::map<std::size_t, Integer> perm_hist, prim_hist;
                    for (const auto& p : all_permutations(k - 1)) {
                        if (!contains_special(p, SpecialPattern::vincular_32_1)) perm_hist[statistics(p.word()).rlmin.size() + 1] += 1;
                    }
                    for_each_prim(k, [&](const Word& x) {
                        if (avoids_all(x, ys)) prim_hist[statistics(x).wrlmin.size()] += 1;
                    });
                    for (std::size_t i = 1; i <= k; ++i) {
                        const Integer want = stirling2(static_cast<long>(k) - 1, static_cast<long>(i) - 1);
                        if (perm_hist[i] != want || prim_hist[i] != want) {
                            throw Witness{"k=" + std::to_string(k) + " i=" + std::to_string(i)};
                        }
                    }
                });
            }};
}

Check transport_2321(std::size_t n) {
    return {"modasc2321.bell", "Bell numbers", [n] {
                const auto ys = one("2321");
                const WeightedCounts p = p_table(n == 0 ? 0 : n - 1, std::max<std::size_t>(n, kDefaultPartitionCap));
                return for_lengths(1, n, [&](std::size_t k) {
                    const std::string at = "k=" + std::to_string(k);
                    if (oracle_count(ys, SequenceClass::modasc, k) != bell(k)) throw Witness{"count " + at};
                    const auto hm = ascent_distribution(ys, SequenceClass::modasc, k);
                    const auto hp = ascent_distribution(ys, SequenceClass::prim, k);
                    for (std::size_t h = 0; h < k; ++h) {
                        const auto im = hm.find(h);
                        const auto ip = hp.find(h);
                        const Integer gm = im == hm.end() ? Integer(0) : im->second;
                        const Integer gp = ip == hp.end() ? Integer(0) : ip->second;
                        if (gm != stirling2(static_cast<long>(k), static_cast<long>(k - h))) throw Witness{"asc=" + std::to_string(h) + " " + at};
                        if (gp != p.at(k - 1, k - 1 - h)) throw Witness{"prim asc=" + std::to_string(h) + " " + at};
                    }
                });
            }};
}

Check transport_221(std::size_t n) {
    return {"modasc221.active-sites", "221 double sum", [n] {
                const auto ys = one("221");
                return for_lengths(0, n, [&](std::size_t k) {
                    const Integer f = modasc221_formula(k);
                    if (f != modasc221_by_active_sites(k) || f != oracle_count(ys, SequenceClass::modasc, k)) {
                        throw Witness{"k=" + std::to_string(k)};
                    }
                    for_each_prim(k, [&](const Word& w) {
                        if (!avoids_all(w, ys)) return;
                        std::vector<std::size_t> safe;
                        for (std::size_t i = 0; i < w.size(); ++i) {
                            std::vector<std::size_t> mult(w.size(), 1);
                            mult[i] = 2;
                            if (avoids_all(insert_flats({w, mult}), ys)) safe.push_back(i + 1);
                        }
                        if (safe != active_sites_221(w)) throw Witness{format_word(w)};
                    });
                });
            }};
}

// -- equivalences -----------------------------------------------------------------

Check equivalence(const std::string& a, const std::string& b, SequenceClass c, std::size_t n) {
    const std::string name = std::string(to_string(c)) + "(" + a + ")=" + to_string(c) + "(" + b + ")";
    return {name, "equivalent patterns", [a, b, c, n]() -> Outcome {
                const auto r = equal_avoidance_sets(parse_pattern_set(a), parse_pattern_set(b), c, n);
                if (r) return pass(upto(n));
                return fail("sets differ at n=" + std::to_string(r.witness->n), format_word(r.witness->word));
            }};
}

Check distinct_122_1232(std::size_t n) {
    return {"modasc(122)!=modasc(1232)", "equivalent patterns", [n]() -> Outcome {
                const auto r = equal_avoidance_sets(parse_pattern("122"), parse_pattern("1232"), SequenceClass::modasc, n);
                if (n < 3) return r ? pass("no difference below n=3") : fail("unexpected difference", format_word(r.witness->word));
                if (!r && r.witness->word == parse_word("122")) return pass("first witness 1 2 2");
                return fail("expected witness 1 2 2", r.witness ? format_word(r.witness->word) : std::string("none"));
            }};
}

// -- identities -------------------------------------------------------------------

const std::vector<std::string>& flat_free_patterns() {
    static const std::vector<std::string> v{"12",  "21",   "121",  "123", "132",  "212", "1212", "2132", "12132",
                                            "2321", "213", "1213", "231", "1234", "312", "1312", "321",  "1232"};
    return v;
}

Check identity_stirling(std::size_t n) {
    return {"stirling.identity", "Stirling identity", [n]() -> Outcome {
                const WeightedCounts p = p_table(n, std::max(n, kDefaultPartitionCap));
                for (std::size_t k = 1; k <= n; ++k) {
                    for (std::size_t h = 0; h < k; ++h) {
                        if (!stirling_identity_check(k, h, p)) return fail("S(n,n-h)", "n=" + std::to_string(k) + " h=" + std::to_string(h));
                    }
                }
                for (std::size_t k = 0; k <= n; ++k) {
                    Integer sum = 0;
                    for (const auto& v : p.rows[k]) sum += v;
                    if (sum != bell(k)) return fail("sum_i p_{n,i} = Bell(n)", "n=" + std::to_string(k));
                }
                return pass("0<=h<n, " + upto(n));
            }};
}

Check identity_f(std::size_t order) {
    return {"series.F", "F(t) two forms", [order]() -> Outcome {
                const IntSeries a = f_series_product_form(order);
                const IntSeries b = f_series_alternating_form(order);
                for (std::size_t k = 0; k <= order; ++k) {
                    if (a[k] != b[k]) return fail("forms differ", mismatch(k, a[k], b[k]));
                }
                const IntSeries prim = special_series(SpecialSeries::PrimOGF122, order);
                if (prim != IntSeries({1, 1}, order) * a) return fail("Prim_122 != (1+t)F");
                const IntSeries g = special_series(SpecialSeries::G, order);
                for (std::size_t k = 0; k <= order; ++k) {
                    if (prim[k] != closed_count(parse_pattern("122"), SequenceClass::prim, k)) return fail("Prim_122", "n=" + std::to_string(k));
                    if (k + 1 <= order && g[k] != prim[k + 1]) return fail("G(t) vs Prim_{n+1}(122)", "n=" + std::to_string(k));
                }
                return pass("order " + std::to_string(order));
            }};
}

Check identity_122(std::size_t order) {
    return {"series.modasc122", "sum k^(n-k)", [order]() -> Outcome {
                const IntSeries m = special_series(SpecialSeries::ModascOGF122, order);
                for (std::size_t n = 1; n <= order; ++n) {
                    Integer want = 0;
                    for (std::size_t k = 1; k <= n; ++k) want += power(k, n - k);
                    if (m[n] != want) return fail("coefficient", mismatch(n, want, m[n]));
                }
                const IntSeries m1232 = special_series(SpecialSeries::Modasc1232, order);
                for (std::size_t n = 1; n <= order; ++n) {
                    const Integer want = closed_count(parse_pattern("1232"), SequenceClass::modasc, n);
                    if (m1232[n] != want) return fail("Modasc_1232", mismatch(n, want, m1232[n]));
                }
                return pass("order " + std::to_string(order));
            }};
}

Check identity_substitution(std::size_t order) {
    return {"series.transform-vs-substitution", "binomial transform", [order]() -> Outcome {
                for (const auto& y : flat_free_patterns()) {
                    const CayleyPattern pat = parse_pattern(y);
                    CountTable prim{y + "-prim", 1, {}, Provenance::formula};
                    std::vector<Integer> coeffs{1};
                    for (std::size_t n = 1; n <= order; ++n) {
                        prim.values.push_back(closed_count(pat, SequenceClass::prim, n));
                        coeffs.push_back(prim.values.back());
                    }
                    const IntSeries sub = ogf_substitute(IntSeries(coeffs, order), order);
                    for (std::size_t n = 0; n <= order; ++n) {
                        const Integer t = binomial_transform_count(prim, n);
                        if (sub[n] != t) return fail("transform vs substitution", y + " " + mismatch(n, t, sub[n]));
                        if (n >= 1 && sub[n] != closed_count(pat, SequenceClass::modasc, n)) {
                            return fail("modasc formula", y + " n=" + std::to_string(n));
                        }
                    }
                }
                return pass(std::to_string(flat_free_patterns().size()) + " patterns, order " + std::to_string(order));
            }};
}

Check identity_d(std::size_t n) {
    return {"series.D", "DUDU-avoiding Dyck paths", [n]() -> Outcome {
                const IntSeries d = special_series(SpecialSeries::D, n);
                for (std::size_t k = 0; k <= n; ++k) {
                    const Integer paths = generate_dudu_avoiders(k).size();
                    const Integer lagrange = dudu_count_lagrange(k);
                    if (d[k] != paths || lagrange != paths) {
                        return fail("[t^n]D, path count, Lagrange sum", "n=" + std::to_string(k) + " series=" + d[k].str() +
                                                                             " paths=" + paths.str() + " sum=" + lagrange.str());
                    }
                }
                return pass(upto(n));
            }};
}

Check identity_printed() {
    return {"series.printed", "printed sequences", []() -> Outcome {
                const std::vector<Integer> m312{1, 1, 2, 5, 14, 43, 142, 495, 1796, 6715, 25692};
                const IntSeries s = special_series(SpecialSeries::Modasc312, m312.size() - 1);
                if (s.coefficients() != m312) return fail("Modasc_312(t)", s.str());
                const std::vector<Integer> m221{1, 1, 2, 5, 14, 44, 155, 607, 2617};
                for (std::size_t k = 0; k < m221.size(); ++k) {
                    if (modasc221_formula(k) != m221[k]) return fail("Modasc(221)", mismatch(k, m221[k], modasc221_formula(k)));
                }
                const IntSeries mz = special_series(SpecialSeries::Motzkin_eq, 20);
                for (std::size_t k = 0; k <= 20; ++k) {
                    if (mz[k] != motzkin(k)) return fail("M = 1 + tM + t^2M^2", mismatch(k, motzkin(k), mz[k]));
                }
                return pass("312, 221, Motzkin");
            }};
}

std::vector<Check> bijections(std::size_t n) {
    return {micro_examples(),     worked_phi(),     bijection_burge_ascending(n), bijection_burge_descending(n),
            bijection_phi(n),     bijection_claesson(n), bijection_112(n),        bijection_122(n),
            bijection_flats(n)};
}

std::vector<Check> transport(std::size_t n) {
    return {transport_st(n),    transport_corollary(n), transport_motzkin(n), transport_rlmin(n),
            transport_2321(n), transport_221(n)};
}

std::vector<Check> equivalences(std::size_t n) {
    using C = SequenceClass;
    return {equivalence("21", "121", C::modasc, n),     equivalence("213", "1213", C::modasc, n),
            equivalence("312", "1312", C::modasc, n),   equivalence("212", "1212", C::modasc, n),
            equivalence("1212", "2132", C::modasc, n),  equivalence("2132", "12132", C::modasc, n),
            equivalence("122", "1232", C::prim, n),     equivalence("221", "2321", C::prim, n),
            equivalence("212,213", "213", C::prim, n),  equivalence("221,231", "231", C::prim, n),
            distinct_122_1232(n)};
}

std::vector<Check> identities(std::size_t n) {
    const std::size_t order = std::max<std::size_t>(n, 20);
    return {identity_stirling(n), identity_f(order), identity_122(order), identity_substitution(std::max<std::size_t>(n, 12)),
            identity_d(n),        identity_printed()};
}

}  // namespace

std::vector<Check> table_checks(TableId t, const RunOptions& o) {
    require_within_caps(t, o);
    std::vector<Check> out;
    if (t == TableId::table1) {
        const auto& ff = flat_free_patterns();
        for (const auto& y : table1_patterns()) {
            out.push_back(table1_row(y, SequenceClass::modasc, o.n));
            out.push_back(table1_row(y, SequenceClass::prim, o.n));
            if (std::find(ff.begin(), ff.end(), y) != ff.end()) out.push_back(table1_transform(y, o.n));
        }
        return out;
    }
    for (const auto& row : table2_golden()) out.push_back(table2_row(row, o.n));
    const auto a047970 = [](std::size_t n) { return closed_count(parse_pattern("1232"), SequenceClass::modasc, n); };
    const auto a007317 = [](std::size_t n) { return closed_count(parse_pattern("321"), SequenceClass::modasc, n); };
    const auto catalan_shifted = [](std::size_t n) { return catalan(n - 1); };
    out.push_back(table2_guess("211", SequenceClass::modasc, "A047970", o.n, a047970));
    out.push_back(table2_guess("1223", SequenceClass::modasc, "A047970", o.n, a047970));
    out.push_back(table2_guess("1324", SequenceClass::modasc, "A007317", o.n, a007317));
    out.push_back(table2_guess("1342", SequenceClass::modasc, "A007317", o.n, a007317));
    out.push_back(table2_guess("1324", SequenceClass::prim, "Catalan", o.n, catalan_shifted));
    out.push_back(table2_guess("1342", SequenceClass::prim, "Catalan", o.n, catalan_shifted));
    return out;
}

std::vector<Check> suite_checks(SuiteId s, const RunOptions& o) {
    require_within_caps(s, o);
    switch (s) {
        case SuiteId::bijections: return bijections(o.n);
        case SuiteId::transport: return transport(o.n);
        case SuiteId::equivalences: return equivalences(o.n);
        case SuiteId::identities: return identities(o.n);
        case SuiteId::all: {
            std::vector<Check> out;
            for (auto part : {bijections(o.n), transport(o.n), equivalences(o.n), identities(o.n)}) {
                for (auto& c : part) out.push_back(std::move(c));
            }
            return out;
        }
    }
    return {};
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{"modasc122-vs-211", "211-vs-1223", "binomial-chains"};
    return names;
}

std::vector<Check> experiment_checks(std::string_view name, std::size_t order, const RunOptions& o) {
    // Enumeration is clipped at the word cap; the clip is stated in the output.
    const std::size_t reach = std::min(order, o.caps.words);
    const std::string clip = reach < order ? " (oracle side clipped at word cap " + std::to_string(reach) + ")" : "";
    if (name == "modasc122-vs-211") {
        return {{"modasc122-vs-(1-t)modasc211", "open question", [order, reach, clip]() -> Outcome {
                     const IntSeries m122 = special_series(SpecialSeries::ModascOGF122, order);
                     std::vector<Integer> c211{1};
                     for (std::size_t n = 1; n <= reach; ++n) c211.push_back(oracle_count(one("211"), SequenceClass::modasc, n));
                     const IntSeries rhs = IntSeries({1, -1}, reach) * IntSeries(c211, reach);
                     std::size_t k = 0;
                     while (k <= reach && rhs[k] == m122[k]) ++k;
                     std::string d = "Modasc_122: " + join({m122.coefficients().begin(), m122.coefficients().begin() + static_cast<long>(reach) + 1}) +
                                     "; (1-t)Modasc_211: " + join(rhs.coefficients());
                     d += k > reach ? "; equal to order " + std::to_string(reach) : "; first difference at t^" + std::to_string(k);
                     return info(d + clip);
                 }}};
    }
    if (name == "211-vs-1223") {
        std::vector<Check> out;
        for (auto c : {SequenceClass::modasc, SequenceClass::prim}) {
            out.push_back({std::string("count-") + to_string(c) + "(211)-vs-(1223)", "open question", [c, reach, clip]() -> Outcome {
                               const auto a = oracle_counts(one("211"), c, reach);
                               const auto b = oracle_counts(one("1223"), c, reach);
                               const auto sets = equal_avoidance_sets(parse_pattern("211"), parse_pattern("1223"), c, reach);
                               std::string d = a == b ? "counts agree " + upto(reach) + ": " + join(a) : "counts differ: " + join(a) + " vs " + join(b);
                               d += sets ? "; sets equal" : "; sets differ from n=" + std::to_string(sets.witness->n);
                               return info(d + clip);
                           }});
        }
        return out;
    }
    if (name == "binomial-chains") {
        std::vector<Check> out;
        for (const std::string y : {"1324", "1342"}) {
            out.push_back({"modasc(" + y + ")-vs-transform-of-catalan", "open question", [y, reach, clip]() -> Outcome {
                               const auto got = oracle_counts(one(y), SequenceClass::modasc, reach);
                               std::size_t k = 0;
                               while (k < reach && got[k] == closed_count(parse_pattern("321"), SequenceClass::modasc, k + 1)) ++k;
                               std::string d = "oracle " + join(got);
                               d += k == reach ? "; agrees with sum C(n-1,j) c_j " + upto(reach) : "; differs at n=" + std::to_string(k + 1);
                               return info(d + clip);
                           }});
        }
        return out;
    }
    throw InvalidInput("unknown experiment \"" + std::string(name) + "\"");
}

}  // namespace modasc
