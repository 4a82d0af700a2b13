#pragma once

#include "tpd/numeric.hpp"

#include <cstddef>
#include <vector>

namespace tpd {

// Incremental row space over Q.  Rows are kept in echelon form with pivots in
// strictly increasing column order; all arithmetic is exact.
class RowSpan {
public:
    explicit RowSpan(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the span and inserts what is left.
    // Returns true when the rank grew.
    bool insert(std::vector<Rat> v);

    bool contains(std::vector<Rat> v) const;

private:
    // After the call, v has zeros in every pivot column of the span.
    void reduce(std::vector<Rat>& v) const;

    std::size_t cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rational_rank(std::vector<std::vector<Rat>> rows, std::size_t cols);

} // namespace tpd
