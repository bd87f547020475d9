#include "modasc/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "modasc/error.hpp"

namespace modasc {

SetPartition::SetPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (Block& b : blocks_) {
        if (b.empty()) throw InvalidInput("set partition has an empty block");
        std::sort(b.begin(), b.end());
        n_ += b.size();
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    std::vector<bool> seen(n_ + 1, false);
    for (const Block& b : blocks_) {
        for (int v : b) {
            if (v < 1 || static_cast<std::size_t>(v) > n_ || seen[static_cast<std::size_t>(v)]) {
                throw InvalidInput("blocks do not partition [" + std::to_string(n_) + "]");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
}

std::size_t non_singleton_blocks(const SetPartition& beta) {
    return static_cast<std::size_t>(std::count_if(beta.blocks().begin(), beta.blocks().end(),
                                                  [](const auto& b) { return b.size() > 1; }));
}

std::string format_set_partition(const SetPartition& beta) {
    std::string s;
    for (const auto& b : beta.blocks()) {
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b[i]);
        }
        s += '}';
    }
    return s;
}

std::string format_standard_representation(const SetPartition& beta) {
    const bool wide = beta.ground_size() > 9;
    std::string s;
    for (std::size_t j = 0; j < beta.blocks().size(); ++j) {
        if (j) s += '-';
        const auto& b = beta.blocks()[j];
        std::vector<int> order(b.begin() + 1, b.end());
        order.push_back(b.front());
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (wide && i) s += ',';
            s += std::to_string(order[i]);
        }
    }
    return s;
}

namespace {

std::vector<int> parse_values(std::string_view text, bool digits_only) {
    std::vector<int> out;
    if (digits_only) {
        for (char c : text) {
            if (c < '1' || c > '9') throw InvalidInput("malformed set partition block");
            out.push_back(c - '0');
        }
        return out;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc{} || ptr == text.data() + i) {
            throw InvalidInput("malformed set partition block");
        }
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

}  // namespace

SetPartition parse_set_partition(std::string_view text) {
    std::vector<SetPartition::Block> blocks;
    if (text.find('{') != std::string_view::npos) {
        std::size_t i = 0;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            if (text[i] != '{') throw InvalidInput("malformed set partition \"" + std::string(text) + "\"");
            const std::size_t close = text.find('}', i);
            if (close == std::string_view::npos) throw InvalidInput("unbalanced braces in set partition");
            blocks.push_back(parse_values(text.substr(i + 1, close - i - 1), false));
            i = close + 1;
        }
        return SetPartition(std::move(blocks));
    }
    if (text.empty()) return {};
    const bool wide = text.find(',') != std::string_view::npos ||
                      text.find(' ') != std::string_view::npos;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t dash = std::min(text.find('-', start), text.size());
        std::vector<int> block = parse_values(text.substr(start, dash - start), !wide);
        if (block.empty()) throw InvalidInput("empty block in standard representation");
        // Least element is written last; the rest must be increasing above it.
        const int least = block.back();
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            if (block[i] <= least || (i > 0 && block[i] <= block[i - 1])) {
                throw InvalidInput("block \"" + std::string(text.substr(start, dash - start)) +
                                   "\" is not in standard representation");
            }
        }
        blocks.push_back(std::move(block));
        start = dash + 1;
    }
    return SetPartition(std::move(blocks));
}

void for_each_set_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit) {
    // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<std::size_t> rgs(n, 0);
    const auto emit = [&] {
        std::size_t k = 0;
        for (std::size_t v : rgs) k = std::max(k, v + 1);
        std::vector<SetPartition::Block> blocks(k);
        for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]].push_back(static_cast<int>(i + 1));
        visit(SetPartition(std::move(blocks)));
    };
    const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_label) {
        if (i == n) {
            emit();
            return;
        }
        for (std::size_t v = 0; v <= max_label + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(max_label, v));
        }
    };
    if (n == 0) {
        visit(SetPartition{});
        return;
    }
    rec(1, 0);
}

}  // namespace modasc
