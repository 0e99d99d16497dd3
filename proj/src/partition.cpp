#include "schub/partition.hpp"

#include <algorithm>

namespace schub {

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

bool Partition::fits(int box_rows, int box_cols) const {
    if (rows() > box_rows) return false;
    return parts_.empty() || parts_[0] <= box_cols;
}

Partition Partition::complement(int box_rows, int box_cols) const {
    if (!fits(box_rows, box_cols))
        throw DomainError("complement: partition " + str() + " does not fit the box");
    std::vector<int> comp(static_cast<size_t>(box_rows));
    for (int i = 0; i < box_rows; ++i)
        comp[static_cast<size_t>(i)] = box_cols - part(box_rows - 1 - i);
    return make_partition(std::move(comp));
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition make_partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw DomainError("partition entries must be positive after trimming trailing zeros");
        if (i > 0 && parts[i] > parts[i - 1])
            throw DomainError("partition entries must be weakly decreasing");
    }
    Partition lam;
    lam.parts_ = std::move(parts);
    return lam;
}

namespace {

void gen_box(int w, int max_part, int rows_left, std::vector<int>& cur,
             std::vector<Partition>& out) {
    if (w == 0) {
        out.push_back(make_partition(cur));
        return;
    }
    if (rows_left == 0) return;
    for (int p = std::min(w, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_box(w - p, p, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int w, int rows, int cols) {
    std::vector<Partition> out;
    if (w < 0) return out;
    std::vector<int> cur;
    gen_box(w, cols, rows, cur, out);
    return out;
}

}  // namespace schub
