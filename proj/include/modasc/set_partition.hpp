#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace modasc {

/// A partition of [n] into nonempty blocks. Canonical form: each block
/// sorted ascending, blocks ordered by their minima.
class SetPartition {
public:
    using Block = std::vector<int>;

    SetPartition() = default;
    /// Canonicalizes; throws InvalidInput unless the blocks partition [n].
    explicit SetPartition(std::vector<Block> blocks);

    [[nodiscard]] std::size_t ground_size() const noexcept { return n_; }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] const std::vector<Block>& blocks() const noexcept { return blocks_; }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
        return a.blocks_ <=> b.blocks_;
    }

private:
    std::vector<Block> blocks_;
    std::size_t n_ = 0;
};

std::size_t non_singleton_blocks(const SetPartition& beta);

/// "{1,3,6}{2,7}{4}{5,8,9}"; the partition of the empty set is "".
std::string format_set_partition(const SetPartition& beta);

/// Standard representation: each block with its least element last, the
/// others increasing, blocks by increasing minima, dash separated
/// ("361-72-4-895"). Blocks use commas between values when n > 9.
std::string format_standard_representation(const SetPartition& beta);

/// Accepts the brace form or the dash-separated standard representation.
SetPartition parse_set_partition(std::string_view text);

/// Streams every partition of [n] (restricted growth order).
void for_each_set_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit);

}  // namespace modasc
