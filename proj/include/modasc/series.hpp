#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modasc/integer.hpp"

namespace modasc {

/// Truncated power series a_0 + a_1 t + ... + a_N t^N with exact integer
/// coefficients. Binary operations truncate to the smaller order.
class IntSeries {
public:
    explicit IntSeries(std::size_t order = 0);
    /// Pads with zeros or drops terms above t^order.
    IntSeries(std::vector<Integer> coeffs, std::size_t order);

    static IntSeries constant(const Integer& c, std::size_t order);
    /// c t^k
    static IntSeries monomial(const Integer& c, std::size_t k, std::size_t order);
    /// 1 / (1 - c t)
    static IntSeries geometric(const Integer& c, std::size_t order);

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }
    [[nodiscard]] Integer& operator[](std::size_t k) { return coeffs_.at(k); }
    [[nodiscard]] const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    IntSeries& operator+=(const IntSeries& o);
    IntSeries& operator-=(const IntSeries& o);
    IntSeries& operator*=(const IntSeries& o);
    IntSeries& operator*=(const Integer& c);

    friend IntSeries operator+(IntSeries a, const IntSeries& b) { return a += b; }
    friend IntSeries operator-(IntSeries a, const IntSeries& b) { return a -= b; }
    friend IntSeries operator*(IntSeries a, const IntSeries& b) { return a *= b; }
    friend IntSeries operator*(IntSeries a, const Integer& c) { return a *= c; }
    friend bool operator==(const IntSeries&, const IntSeries&) = default;

    /// Multiplicative inverse; requires a_0 = +1 or -1.
    [[nodiscard]] IntSeries inverse() const;
    /// this(inner(t)); requires inner to have zero constant term.
    [[nodiscard]] IntSeries compose(const IntSeries& inner) const;
    /// t^k * this
    [[nodiscard]] IntSeries shift_up(std::size_t k) const;
    /// this / t^k; requires a_0 = ... = a_{k-1} = 0. Order drops by k.
    [[nodiscard]] IntSeries shift_down(std::size_t k) const;
    [[nodiscard]] IntSeries truncate(std::size_t order) const;

    [[nodiscard]] std::string str() const;

private:
    std::vector<Integer> coeffs_;
};

}  // namespace modasc
