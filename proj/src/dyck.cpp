#include "modasc/dyck.hpp"

#include <algorithm>

#include "modasc/error.hpp"

namespace modasc {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    long height = 0;
    for (Step s : steps_) {
        height += s == Step::up ? 1 : -1;
        if (height < 0) throw InvalidInput("path dips below the axis");
    }
    if (height != 0) throw InvalidInput("path does not return to the axis");
}

DyckPath parse_dyck_path(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'u' || c == 'U') {
            steps.push_back(Step::up);
        } else if (c == 'd' || c == 'D') {
            steps.push_back(Step::down);
        } else {
            throw InvalidInput("malformed Dyck path \"" + std::string(text) + "\"");
        }
    }
    return DyckPath(std::move(steps));
}

std::string format_dyck_path(const DyckPath& p) {
    std::string s;
    s.reserve(p.steps().size());
    for (Step st : p.steps()) s += st == Step::up ? 'u' : 'd';
    return s;
}

DyckPath elevate(const DyckPath& p) {
    std::vector<Step> steps;
    steps.reserve(p.steps().size() + 2);
    steps.push_back(Step::up);
    steps.insert(steps.end(), p.steps().begin(), p.steps().end());
    steps.push_back(Step::down);
    return DyckPath(std::move(steps));
}

DyckPath concat(const DyckPath& a, const DyckPath& b) {
    std::vector<Step> steps = a.steps();
    steps.insert(steps.end(), b.steps().begin(), b.steps().end());
    return DyckPath(std::move(steps));
}

bool avoids_dudu(const DyckPath& p) {
    const auto& s = p.steps();
    for (std::size_t i = 0; i + 3 < s.size(); ++i) {
        if (s[i] == Step::down && s[i + 1] == Step::up && s[i + 2] == Step::down &&
            s[i + 3] == Step::up) {
            return false;
        }
    }
    return true;
}

std::vector<DyckPath> generate_dudu_avoiders(std::size_t n) {
    // First-return split P = u A d B. A window d,u,d,u can only straddle
    // the split as "d | u d u" with B starting u,d,u, so A and B are
    // filtered independently and only B's prefix is checked.
    std::vector<std::vector<DyckPath>> by_size(n + 1);
    by_size[0].push_back(DyckPath{});
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t a = 0; a < m; ++a) {
            for (const DyckPath& head : by_size[a]) {
                const DyckPath lifted = elevate(head);
                for (const DyckPath& tail : by_size[m - 1 - a]) {
                    const auto& t = tail.steps();
                    if (t.size() >= 3 && t[0] == Step::up && t[1] == Step::down && t[2] == Step::up) {
                        continue;
                    }
                    by_size[m].push_back(concat(lifted, tail));
                }
            }
        }
    }
    std::vector<DyckPath> out = std::move(by_size[n]);
    std::sort(out.begin(), out.end());
    return out;
}

PathFactors decompose_returns(const DyckPath& p) {
    if (p.empty()) throw InvalidInput("cannot decompose the empty path");
    if (!avoids_dudu(p)) throw InvalidInput("path contains dudu: " + format_dyck_path(p));
    PathFactors out;
    const auto& s = p.steps();
    long height = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        height += s[i] == Step::up ? 1 : -1;
        if (height == 0) {
            out.factors.emplace_back(std::vector<Step>(s.begin() + static_cast<long>(start) + 1,
                                                       s.begin() + static_cast<long>(i)));
            start = i + 1;
        }
    }
    return out;
}

DyckPath reassemble(const PathFactors& f) {
    DyckPath out;
    for (const DyckPath& q : f.factors) out = concat(out, elevate(q));
    return out;
}

}  // namespace modasc
