#include "skewchar/partition.hpp"

#include <numeric>

#include "skewchar/errors.hpp"

namespace skewchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw PreconditionError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw PreconditionError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner[i] > (*this)[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : p[1], 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++c[j];
    return Partition(std::move(c));
}

namespace {
void box_rec(int rows, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= maxpart; ++v) {
        cur.push_back(v);
        box_rec(rows, v, cur, out);
        cur.pop_back();
    }
}

void sum_rec(int remaining, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int v = std::min(remaining, maxpart); v >= 1; --v) {
        cur.push_back(v);
        sum_rec(remaining - v, v, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    box_rec(rows, cols, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    std::vector<int> cur;
    sum_rec(k, k, cur, out);
    return out;
}

FrobeniusCoordinates to_frobenius(const Partition& p) {
    Partition c = conjugate(p);
    FrobeniusCoordinates f;
    for (int i = 1; p[i] >= i; ++i) {
        f.arms.push_back(p[i] - i);
        f.legs.push_back(c[i] - i);
    }
    return f;
}

Partition from_frobenius(const FrobeniusCoordinates& f) {
    const int r = f.rank();
    if (static_cast<int>(f.legs.size()) != r)
        throw PreconditionError("arms and legs must have equal length");
    for (int i = 0; i < r; ++i) {
        if (f.arms[i] < 0 || f.legs[i] < 0)
            throw PreconditionError("Frobenius coordinates must be nonnegative");
        if (i + 1 < r && (f.arms[i] <= f.arms[i + 1] || f.legs[i] <= f.legs[i + 1]))
            throw PreconditionError("Frobenius coordinates must be strictly decreasing");
    }
    // Row i (1-based) has length: i + arm_i for i <= r, else #{k : leg_k + k >= i}.
    std::vector<int> parts;
    const int rows = r == 0 ? 0 : f.legs[0] + 1;
    for (int i = 1; i <= rows; ++i) {
        if (i <= r) {
            parts.push_back(i + f.arms[i - 1]);
        } else {
            int len = 0;
            for (int k = 1; k <= r; ++k)
                if (f.legs[k - 1] + k >= i) ++len;
            parts.push_back(len);
        }
    }
    return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw ContainmentError("inner shape " + inner_.to_string() + " is not contained in " +
                               outer_.to_string());
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_[r] + 1; c <= outer_[r]; ++c) out.emplace_back(r, c);
    return out;
}

std::string SkewShape::to_string() const {
    return inner_.empty() ? outer_.to_string() : outer_.to_string() + "/" + inner_.to_string();
}

}  // namespace skewchar
