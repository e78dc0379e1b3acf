#pragma once

#include <string>
#include <utility>
#include <vector>

namespace skewchar {

class Partition {
public:
    Partition() = default;
    // Throws PreconditionError unless parts are positive and weakly decreasing.
    // Trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    // 1-based part; 0 past the end.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& inner) const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// All partitions contained in the rectangle rows x cols.
std::vector<Partition> partitions_in_box(int rows, int cols);
// All partitions of exactly k.
std::vector<Partition> partitions_of(int k);

struct FrobeniusCoordinates {
    std::vector<int> arms;
    std::vector<int> legs;
    int rank() const { return static_cast<int>(arms.size()); }
    friend bool operator==(const FrobeniusCoordinates&, const FrobeniusCoordinates&) = default;
};

FrobeniusCoordinates to_frobenius(const Partition& p);
// Throws PreconditionError for unequal lengths or non-strictly-decreasing sequences.
Partition from_frobenius(const FrobeniusCoordinates& f);

class SkewShape {
public:
    SkewShape() = default;
    // Throws ContainmentError if inner is not contained in outer.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    bool contains_cell(int row, int col) const {
        return col > inner_[row] && col <= outer_[row];
    }
    // (row, col), 1-based, row-major.
    std::vector<std::pair<int, int>> cells() const;
    std::string to_string() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

}  // namespace skewchar
