#include "modasc/counting.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <optional>

#include "modasc/error.hpp"
#include "modasc/set_partition.hpp"

namespace modasc {

// -- named number families ----------------------------------------------------

NamedSequence parse_named_sequence(std::string_view name) {
    if (name == "catalan") return NamedSequence::catalan;
    if (name == "motzkin") return NamedSequence::motzkin;
    if (name == "fibonacci") return NamedSequence::fibonacci;
    if (name == "bell") return NamedSequence::bell;
    if (name == "fubini") return NamedSequence::fubini;
    if (name == "stirling2") return NamedSequence::stirling2;
    throw InvalidInput("unknown sequence \"" + std::string(name) + "\"");
}

Integer named_sequence(NamedSequence name, std::size_t n, std::size_t k) {
    switch (name) {
        case NamedSequence::catalan: return catalan(n);
        case NamedSequence::motzkin: return motzkin(n);
        case NamedSequence::fibonacci: return fibonacci(n);
        case NamedSequence::bell: return bell(n);
        case NamedSequence::fubini: return fubini(n);
        case NamedSequence::stirling2: return stirling2(static_cast<long>(n), static_cast<long>(k));
    }
    return 0;
}

Integer catalan(std::size_t n) {
    std::vector<Integer> c(n + 1);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    }
    return c[n];
}

Integer motzkin(std::size_t n) {
    // m_{n} = m_{n-1} + sum_{i=0}^{n-2} m_i m_{n-2-i}
    std::vector<Integer> m(n + 1);
    m[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        m[k] = m[k - 1];
        for (std::size_t i = 0; i + 2 <= k; ++i) m[k] += m[i] * m[k - 2 - i];
    }
    return m[n];
}

Integer fibonacci(std::size_t n) {
    Integer a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return a;
}

Integer stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Integer> row(static_cast<std::size_t>(k) + 1);
    row[0] = 1;  // S(0,0)
    for (long m = 1; m <= n; ++m) {
        for (long j = std::min(m, k); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

Integer bell(std::size_t n) {
    Integer total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += stirling2(static_cast<long>(n), static_cast<long>(k));
    return total;
}

Integer fubini(std::size_t n) {
    Integer total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += factorial(k) * stirling2(static_cast<long>(n), static_cast<long>(k));
    return total;
}

// -- count tables ---------------------------------------------------------------

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::oracle: return "oracle";
        case Provenance::formula: return "formula";
        case Provenance::series: return "series";
    }
    return "?";
}

const Integer& CountTable::at(std::size_t n) const {
    if (!covers(n)) {
        throw InvalidInput("count table \"" + label + "\" has no entry for n=" + std::to_string(n));
    }
    return values[n - offset];
}

Integer binomial_transform_count(const CountTable& prim_counts, std::size_t n) {
    if (n == 0) return 1;
    Integer total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        total += binomial(static_cast<long>(n) - 1, static_cast<long>(k) - 1) * prim_counts.at(k);
    }
    return total;
}

IntSeries ogf_substitute(const IntSeries& prim_series, std::size_t order) {
    if (prim_series[0] != 1) throw InvalidInput("primitive series must have constant term 1");
    if (order > prim_series.order()) throw InvalidInput("primitive series is too short for the requested order");
    const IntSeries s = IntSeries::geometric(1, order).shift_up(1);  // t / (1 - t)
    return prim_series.truncate(order).compose(s);
}

// -- closed formulas ------------------------------------------------------------

Integer dudu_count_lagrange(std::size_t n) {
    if (n == 0) return 1;
    using boost::multiprecision::cpp_rational;
    const long nn = static_cast<long>(n);
    cpp_rational total = 0;
    for (long j = 0; 2 * j <= nn; ++j) {
        Integer inner = 0;
        for (long i = 0; i <= nn - 2 * j; ++i) {
            inner += binomial(nn - 2 * j, i) * binomial(j + i, nn - 2 * j - i + 1);
        }
        total += cpp_rational(binomial(nn - j, j) * inner, Integer(nn - j));
    }
    if (denominator(total) != 1) throw InternalConsistencyError("Lagrange sum is not an integer");
    return numerator(total);
}

Integer modasc221_formula(std::size_t n) {
    if (n == 0) return 1;
    const long nn = static_cast<long>(n);
    Integer total = 0;
    for (long k = 1; k <= nn; ++k) {
        for (long i = 1; i <= k; ++i) total += stirling2(k - 1, i - 1) * binomial(nn - 1 - k + i, i - 1);
    }
    return total;
}

namespace {

// |Prim_n(122)| = sum_{k>=1} (k-1)! S(n-k+1, k), n >= 1.
Integer prim122(std::size_t n) {
    if (n == 0) return 1;
    Integer total = 0;
    for (long k = 1; k <= static_cast<long>(n); ++k) {
        total += factorial(static_cast<std::size_t>(k - 1)) * stirling2(static_cast<long>(n) - k + 1, k);
    }
    return total;
}

using CountFn = std::function<Integer(std::size_t)>;

// Binomial transform of a primitive count (n >= 1).
CountFn transformed(CountFn prim) {
    return [prim = std::move(prim)](std::size_t n) {
        Integer total = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            total += binomial(static_cast<long>(n) - 1, static_cast<long>(k) - 1) * prim(k);
        }
        return total;
    };
}

struct Family {
    std::string name;
    CountFn count;  // valid for n >= 1
};

struct Row {
    std::optional<Family> modasc;
    std::optional<Family> prim;
};

Family two_pow() {
    return {"2^(n-1)", [](std::size_t n) { return power(2, n - 1); }};
}
Family ones() {
    return {"1,1,1,...", [](std::size_t) { return Integer(1); }};
}
Family bell_n() {
    return {"Bell", [](std::size_t n) { return bell(n); }};
}
Family bell_shifted() {
    return {"Bell (shifted)", [](std::size_t n) { return bell(n - 1); }};
}
Family catalan_n() {
    return {"Catalan", [](std::size_t n) { return catalan(n); }};
}
Family motzkin_shifted() {
    return {"Motzkin (shifted)", [](std::size_t n) { return motzkin(n - 1); }};
}
Family fib_n() {
    return {"Fibonacci", [](std::size_t n) { return fibonacci(n); }};
}
Family prim122_family() {
    return {"A229046: sum (k-1)! S(n-k+1,k)", prim122};
}
Family dudu_shifted() {
    return {"A102407: d_(n-1)", [](std::size_t n) { return dudu_count_lagrange(n - 1); }};
}

std::optional<Row> lookup(const std::string& y) {
    if (y == "11") return Row{ones(), ones()};
    if (y == "12") {
        return Row{ones(), Family{"1,0,0,...", [](std::size_t n) { return Integer(n == 1 ? 1 : 0); }}};
    }
    if (y == "21" || y == "121") return Row{two_pow(), ones()};
    if (y == "112") return Row{two_pow(), fib_n()};
    if (y == "122") {
        return Row{Family{"A026898: sum k^(n-k)",
                          [](std::size_t n) {
                              Integer t = 0;
                              for (std::size_t k = 1; k <= n; ++k) t += power(k, n - k);
                              return t;
                          }},
                   prim122_family()};
    }
    if (y == "123") return Row{two_pow(), ones()};
    if (y == "132") return Row{Family{"odd Fibonacci f_(2n-1)", [](std::size_t n) { return fibonacci(2 * n - 1); }}, fib_n()};
    if (y == "212" || y == "1212" || y == "2132" || y == "12132" || y == "2321") return Row{bell_n(), bell_shifted()};
    if (y == "2213" || y == "2231") return Row{bell_n(), std::nullopt};
    if (y == "213" || y == "1213" || y == "231" || y == "1234") return Row{catalan_n(), motzkin_shifted()};
    if (y == "1123") return Row{catalan_n(), std::nullopt};
    if (y == "221") {
        return Row{Family{"double sum S(k-1,i-1) C(n-1-k+i,i-1)", modasc221_formula}, bell_shifted()};
    }
    if (y == "312" || y == "1312") {
        Family prim = dudu_shifted();
        return Row{Family{"binomial transform of A102407", transformed(prim.count)}, prim};
    }
    if (y == "321") {
        return Row{Family{"A007317: sum C(n-1,j) c_j",
                          [](std::size_t n) {
                              Integer t = 0;
                              for (std::size_t j = 0; j < n; ++j) t += binomial(static_cast<long>(n) - 1, static_cast<long>(j)) * catalan(j);
                              return t;
                          }},
                   Family{"Catalan (shifted)", [](std::size_t n) { return catalan(n - 1); }}};
    }
    if (y == "1232") {
        return Row{Family{"A047970: binomial transform of A229046", transformed(prim122)}, prim122_family()};
    }
    return std::nullopt;
}

std::optional<Family> family_for(const CayleyPattern& y, SequenceClass c) {
    const auto row = lookup(y.str());
    if (!row) return std::nullopt;
    return c == SequenceClass::modasc ? row->modasc : row->prim;
}

}  // namespace

bool has_closed_count(const CayleyPattern& y, SequenceClass c) { return family_for(y, c).has_value(); }

std::string closed_count_family(const CayleyPattern& y, SequenceClass c) {
    const auto f = family_for(y, c);
    if (!f) throw NoClosedForm("no closed form for " + y.str() + " on " + to_string(c));
    return f->name;
}

Integer closed_count(const CayleyPattern& y, SequenceClass c, std::size_t n) {
    const auto f = family_for(y, c);
    if (!f) throw NoClosedForm("no closed form for " + y.str() + " on " + to_string(c));
    if (n == 0) return 1;
    return f->count(n);
}

// -- series ---------------------------------------------------------------------

SpecialSeries parse_special_series(std::string_view name) {
    if (name == "F") return SpecialSeries::F;
    if (name == "PrimOGF122") return SpecialSeries::PrimOGF122;
    if (name == "ModascOGF122") return SpecialSeries::ModascOGF122;
    if (name == "G") return SpecialSeries::G;
    if (name == "D") return SpecialSeries::D;
    if (name == "Modasc312") return SpecialSeries::Modasc312;
    if (name == "Motzkin_eq") return SpecialSeries::Motzkin_eq;
    if (name == "Modasc1232") return SpecialSeries::Modasc1232;
    throw InvalidInput("unknown series \"" + std::string(name) + "\"");
}

const char* to_string(SpecialSeries s) {
    switch (s) {
        case SpecialSeries::F: return "F";
        case SpecialSeries::PrimOGF122: return "PrimOGF122";
        case SpecialSeries::ModascOGF122: return "ModascOGF122";
        case SpecialSeries::G: return "G";
        case SpecialSeries::D: return "D";
        case SpecialSeries::Modasc312: return "Modasc312";
        case SpecialSeries::Motzkin_eq: return "Motzkin_eq";
        case SpecialSeries::Modasc1232: return "Modasc1232";
    }
    return "?";
}

IntSeries f_series_product_form(std::size_t order) {
    IntSeries total = IntSeries::constant(1, order);
    IntSeries term = IntSeries::constant(1, order);
    for (std::size_t k = 1; 2 * k <= order; ++k) {
        term *= IntSeries::monomial(static_cast<long>(k), 2, order) * IntSeries::geometric(static_cast<long>(k), order);
        total += term;
    }
    return total;
}

IntSeries f_series_alternating_form(std::size_t order) {
    const IntSeries inv_one_plus_t = IntSeries::geometric(-1, order);
    IntSeries total(order);
    IntSeries denom_power = inv_one_plus_t;  // (1+t)^{-(i+1)}
    for (std::size_t i = 0; i <= order; ++i) {
        total += IntSeries::monomial(1, i, order) * IntSeries::geometric(static_cast<long>(i), order) * denom_power;
        denom_power *= inv_one_plus_t;
    }
    return total;
}

namespace {

// Iterates x -> step(x) from 1 until the truncated series stops changing.
IntSeries fixed_point(std::size_t order, const std::function<IntSeries(const IntSeries&)>& step) {
    IntSeries x = IntSeries::constant(1, order);
    for (std::size_t it = 0; it <= order + 1; ++it) {
        IntSeries next = step(x);
        if (next == x) return x;
        x = std::move(next);
    }
    return x;
}

}  // namespace

IntSeries special_series(SpecialSeries which, std::size_t order) {
    const IntSeries one = IntSeries::constant(1, order);
    const IntSeries t = IntSeries::monomial(1, 1, order);
    switch (which) {
        case SpecialSeries::F: {
            IntSeries a = f_series_product_form(order);
            if (a != f_series_alternating_form(order)) {
                throw InternalConsistencyError("the two forms of F disagree");
            }
            return a;
        }
        case SpecialSeries::PrimOGF122:
            return (one + t) * special_series(SpecialSeries::F, order);
        case SpecialSeries::ModascOGF122: {
            IntSeries total(order);
            for (std::size_t k = 0; k <= order; ++k) {
                total += IntSeries::monomial(1, k, order) * IntSeries::geometric(static_cast<long>(k), order);
            }
            return total;
        }
        case SpecialSeries::G: {
            IntSeries total(order);
            IntSeries prod = one;
            for (std::size_t k = 0; 2 * k <= order; ++k) {
                if (k > 0) {
                    prod *= IntSeries::monomial(static_cast<long>(k), 2, order) * IntSeries::geometric(static_cast<long>(k), order);
                }
                total += IntSeries::geometric(static_cast<long>(k) + 1, order) * prod;
            }
            return total;
        }
        case SpecialSeries::D:
            return fixed_point(order, [&](const IntSeries& d) {
                const IntSeries denom = one - t * (d - one);
                return one + t * d + t * t * d * d * denom.inverse();
            });
        case SpecialSeries::Modasc312: {
            // Prim_{n+1}(312) = d_n, Prim_0 = 1: Prim_312(t) = 1 + t D(t).
            const IntSeries prim = one + t * special_series(SpecialSeries::D, order);
            return ogf_substitute(prim, order);
        }
        case SpecialSeries::Motzkin_eq:
            return fixed_point(order, [&](const IntSeries& m) { return one + t * m + t * t * m * m; });
        case SpecialSeries::Modasc1232: {
            IntSeries total(order);
            for (std::size_t i = 0; i <= order; ++i) {
                total += IntSeries::monomial(1, i, order) * (one - t) * IntSeries::geometric(static_cast<long>(i) + 1, order);
            }
            return total;
        }
    }
    return IntSeries(order);
}

// -- weighted counts ------------------------------------------------------------

Integer WeightedCounts::at(std::size_t n, std::size_t i) const {
    if (n >= rows.size()) throw InvalidInput("weighted counts have no row " + std::to_string(n));
    return i < rows[n].size() ? rows[n][i] : Integer(0);
}

std::vector<Integer> p_coefficients(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw CapExceeded("partition enumeration of [" + std::to_string(n) + "] exceeds cap " + std::to_string(cap));
    }
    std::vector<Integer> row(n / 2 + 1);
    for_each_set_partition(n, [&](const SetPartition& beta) { ++row[non_singleton_blocks(beta)]; });
    return row;
}

WeightedCounts p_table(std::size_t max_n, std::size_t cap) {
    WeightedCounts w;
    for (std::size_t n = 0; n <= max_n; ++n) w.rows.push_back(p_coefficients(n, cap));
    return w;
}

bool stirling_identity_check(std::size_t n, std::size_t h, const WeightedCounts& p) {
    if (h >= n) throw InvalidInput("stirling identity needs 0 <= h < n");
    Integer rhs = 0;
    for (std::size_t i = h + 1; i <= n; ++i) {
        rhs += binomial(static_cast<long>(n) - 1, static_cast<long>(n - i)) * p.at(i - 1, i - 1 - h);
    }
    return stirling2(static_cast<long>(n), static_cast<long>(n - h)) == rhs;
}

bool stirling_identity_check(std::size_t n, std::size_t h) {
    return stirling_identity_check(n, h, p_table(n == 0 ? 0 : n - 1));
}

// -- oracle counting -------------------------------------------------------------

Integer oracle_count(std::span<const CayleyPattern> ys, SequenceClass c, std::size_t n) {
    std::uint64_t count = 0;
    for_each_in_class(n, c, [&](const Word& w) { count += avoids_all(w, ys); });
    return count;
}

std::map<std::size_t, Integer> ascent_distribution(std::span<const CayleyPattern> ys, SequenceClass c,
                                                   std::size_t n) {
    std::map<std::size_t, std::uint64_t> hist;
    for_each_in_class(n, c, [&](const Word& w) {
        if (avoids_all(w, ys)) ++hist[ascents(w)];
    });
    std::map<std::size_t, Integer> out;
    for (const auto& [h, v] : hist) out[h] = v;
    return out;
}

std::vector<std::size_t> active_sites_221(const Word& w) {
    if (!is_primitive(w) || contains(w, CayleyPattern(Word{2, 2, 1}))) {
        throw InvalidInput("active sites need a word in Prim(221): " + format_word(w));
    }
    std::vector<std::size_t> out;
    for (const Mark& m : statistics(w).wrlmin) out.push_back(m.index);
    return out;
}

Integer modasc221_by_active_sites(std::size_t n) {
    if (n == 0) return 1;
    const CayleyPattern y(Word{2, 2, 1});
    Integer total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        for_each_prim(k, [&](const Word& w) {
            if (contains(w, y)) return;
            // n-k flat steps go into the active sites, with repetition.
            const long active = static_cast<long>(active_sites_221(w).size());
            total += binomial(static_cast<long>(n - k) + active - 1, static_cast<long>(n - k));
        });
    }
    return total;
}

}  // namespace modasc
