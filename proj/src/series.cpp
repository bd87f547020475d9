#include "modasc/series.hpp"

#include <algorithm>

#include "modasc/error.hpp"

namespace modasc {

IntSeries::IntSeries(std::size_t order) : coeffs_(order + 1) {}

IntSeries::IntSeries(std::vector<Integer> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

IntSeries IntSeries::constant(const Integer& c, std::size_t order) { return monomial(c, 0, order); }

IntSeries IntSeries::monomial(const Integer& c, std::size_t k, std::size_t order) {
    IntSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
}

IntSeries IntSeries::geometric(const Integer& c, std::size_t order) {
    IntSeries s(order);
    Integer p = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        s.coeffs_[k] = p;
        p *= c;
    }
    return s;
}

IntSeries& IntSeries::operator+=(const IntSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

IntSeries& IntSeries::operator*=(const IntSeries& o) {
    const std::size_t size = std::min(coeffs_.size(), o.coeffs_.size());
    std::vector<Integer> out(size);
    for (std::size_t i = 0; i < size; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < size; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

IntSeries& IntSeries::operator*=(const Integer& c) {
    for (Integer& a : coeffs_) a *= c;
    return *this;
}

IntSeries IntSeries::inverse() const {
    const Integer& a0 = coeffs_[0];
    if (a0 != 1 && a0 != -1) throw InvalidInput("series inverse needs a unit constant term");
    IntSeries b(order());
    b.coeffs_[0] = a0;  // 1/a0 == a0 for a0 = +-1
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Integer acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * b.coeffs_[n - k];
        b.coeffs_[n] = -acc * a0;
    }
    return b;
}

IntSeries IntSeries::compose(const IntSeries& inner) const {
    if (inner.coeffs_[0] != 0) throw InvalidInput("composition needs an inner series without constant term");
    const std::size_t ord = std::min(order(), inner.order());
    IntSeries result(ord);
    for (std::size_t k = ord + 1; k-- > 0;) {
        result *= inner.truncate(ord);
        result.coeffs_[0] += coeffs_[k];
    }
    return result;
}

IntSeries IntSeries::shift_up(std::size_t k) const {
    IntSeries s(order());
    for (std::size_t i = 0; i + k <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
    return s;
}

IntSeries IntSeries::shift_down(std::size_t k) const {
    if (k > order()) throw InvalidInput("shift exceeds series order");
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs_[i] != 0) throw InvalidInput("shift_down would drop a nonzero coefficient");
    }
    return IntSeries(std::vector<Integer>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()), order() - k);
}

IntSeries IntSeries::truncate(std::size_t ord) const {
    if (ord > order()) throw InvalidInput("cannot extend a truncated series");
    return IntSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(ord + 1)), ord);
}

std::string IntSeries::str() const {
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) s += ", ";
        s += coeffs_[k].str();
    }
    return s;
}

}  // namespace modasc
