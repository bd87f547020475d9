#include "modasc/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace modasc {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::info: return "INFO";
    }
    return "?";
}

Caps caps_from_environment(Caps defaults) {
    const char* env = std::getenv("FP_CAP");
    if (!env || !*env) return defaults;
    std::size_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc{} || ptr != end || v == 0) return defaults;
    return {v, v};
}

std::size_t RunReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [s](const CheckResult& c) { return c.status == s; }));
}

std::string RunReport::text() const {
    std::ostringstream os;
    os << "# " << command_ << '\n';
    os << "# caps: words=" << caps_.words << " lattice=" << caps_.lattice << '\n';
    for (const auto& c : checks_) {
        os << to_string(c.status) << "  " << c.name;
        if (!c.tag.empty()) os << "  [" << c.tag << ']';
        if (!c.detail.empty()) os << "  " << c.detail;
        if (c.witness) os << "  witness: " << *c.witness;
        os << '\n';
    }
    os << "# " << count(Status::pass) << " passed, " << count(Status::fail) << " failed, " << count(Status::info)
       << " info\n";
    if (elapsed_) os << "# elapsed: " << std::fixed << std::setprecision(3) << *elapsed_ << " s\n";
    return os.str();
}

std::string RunReport::json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["caps"] = {{"words", caps_.words}, {"lattice", caps_.lattice}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["tag"] = c.tag;
        e["status"] = to_string(c.status);
        e["detail"] = c.detail;
        if (c.witness) e["witness"] = *c.witness;
        j["checks"].push_back(std::move(e));
    }
    j["passed"] = count(Status::pass);
    j["failed"] = count(Status::fail);
    j["info"] = count(Status::info);
    if (elapsed_) j["elapsed_seconds"] = *elapsed_;
    return j.dump(2) + "\n";
}

namespace {

CheckResult guarded(const Check& check) {
    CheckResult r{check.name, check.tag, Status::fail, {}, std::nullopt};
    try {
        Outcome o = check.run();
        r.status = o.status;
        r.detail = std::move(o.detail);
        r.witness = std::move(o.witness);
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    return r;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned jobs) {
    std::vector<CheckResult> out(checks.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(checks.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) out[i] = guarded(checks[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < checks.size(); i = next++) out[i] = guarded(checks[i]);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace modasc
