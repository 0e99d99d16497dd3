#pragma once

#include <compare>
#include <string>
#include <vector>

#include "schub/numbers.hpp"

namespace schub {

// Weakly decreasing sequence of positive integers in canonical form
// (trailing zeros stripped). The empty partition is the unit of degree 0.
class Partition {
public:
    Partition() = default;

    int rows() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // part(i) is 0 beyond the last row, which keeps strip arithmetic branch-free
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool fits(int box_rows, int box_cols) const;
    // 180-degree complement inside a box_rows x box_cols box; requires fits()
    Partition complement(int box_rows, int box_cols) const;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;

    friend Partition make_partition(std::vector<int> parts);

private:
    std::vector<int> parts_;
};

// Canonicalizing constructor: strips trailing zeros, rejects sequences that
// are not weakly decreasing or contain entries < 1.
Partition make_partition(std::vector<int> parts);

// All partitions of weight w with at most `rows` rows and every part <= cols.
std::vector<Partition> partitions_in_box(int w, int rows, int cols);

}  // namespace schub
