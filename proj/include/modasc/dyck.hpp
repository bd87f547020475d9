#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace modasc {

enum class Step : unsigned char { up = 0, down = 1 };

/// A balanced u/d sequence whose prefixes never dip below the axis.
/// Ordering is lexicographic on steps with u < d.
class DyckPath {
public:
    DyckPath() = default;
    /// Throws InvalidInput unless the steps form a Dyck path.
    explicit DyckPath(std::vector<Step> steps);

    [[nodiscard]] std::size_t semilength() const noexcept { return steps_.size() / 2; }
    [[nodiscard]] bool empty() const noexcept { return steps_.empty(); }
    [[nodiscard]] const std::vector<Step>& steps() const noexcept { return steps_; }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.steps_ <=> b.steps_; }

private:
    std::vector<Step> steps_;
};

/// "uudd"; the empty string is the empty path.
DyckPath parse_dyck_path(std::string_view text);
std::string format_dyck_path(const DyckPath& p);

/// u P d
DyckPath elevate(const DyckPath& p);
DyckPath concat(const DyckPath& a, const DyckPath& b);

/// No four consecutive steps equal to d,u,d,u.
bool avoids_dudu(const DyckPath& p);

/// Every DUDU-avoiding path of semilength n, sorted (u < d).
std::vector<DyckPath> generate_dudu_avoiders(std::size_t n);

/// The elevated factors between consecutive returns to the axis:
/// P = u Q_1 d u Q_2 d ... u Q_k d.
struct PathFactors {
    std::vector<DyckPath> factors;

    [[nodiscard]] std::size_t count() const noexcept { return factors.size(); }
};

/// Requires a nonempty DUDU-avoiding path.
PathFactors decompose_returns(const DyckPath& p);
DyckPath reassemble(const PathFactors& f);

}  // namespace modasc
