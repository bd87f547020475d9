#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace modasc {

enum class Status { pass, fail, info };

const char* to_string(Status s);

struct CheckResult {
    std::string name;
    std::string tag;  // topic the check certifies
    Status status = Status::pass;
    std::string detail;
    std::optional<std::string> witness;  // first counterexample, canonical text
};

/// Upper limits on exhaustive enumeration.
struct Caps {
    std::size_t words = 10;    // Modasc / Prim / permutations
    std::size_t lattice = 12;  // Dyck paths and set partitions
};

/// FP_CAP, when set to a positive integer, replaces both defaults.
Caps caps_from_environment(Caps defaults = {});

class RunReport {
public:
    explicit RunReport(std::string command, Caps caps = {}) : command_(std::move(command)), caps_(caps) {}

    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void set_elapsed(double seconds) { elapsed_ = seconds; }

    [[nodiscard]] const std::string& command() const noexcept { return command_; }
    [[nodiscard]] const Caps& caps() const noexcept { return caps_; }
    [[nodiscard]] const std::vector<CheckResult>& checks() const noexcept { return checks_; }
    [[nodiscard]] std::size_t count(Status s) const;
    [[nodiscard]] bool ok() const { return count(Status::fail) == 0; }
    [[nodiscard]] int exit_code() const { return ok() ? 0 : 1; }

    /// One line per check, then a summary. Elapsed time only when set.
    [[nodiscard]] std::string text() const;
    [[nodiscard]] std::string json() const;

private:
    std::string command_;
    Caps caps_;
    std::vector<CheckResult> checks_;
    std::optional<double> elapsed_;
};

struct Outcome {
    Status status = Status::pass;
    std::string detail;
    std::optional<std::string> witness;
};

struct Check {
    std::string name;
    std::string tag;
    std::function<Outcome()> run;
};

/// Runs the checks on up to `jobs` threads. Results keep declaration order;
/// an exception inside a check becomes a failure carrying its message.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned jobs);

}  // namespace modasc
