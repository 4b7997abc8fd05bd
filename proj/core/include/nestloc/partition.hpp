#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nestloc/bigint.hpp"

namespace nestloc {

/* Integer partition, weakly decreasing positive parts.  Out-of-range part
 * and conjugate-part accesses return 0 (the zero-padding convention every
 * localization formula relies on). */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition empty() { return Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); } // number of parts
    int largest() const { return parts_.empty() ? 0 : parts_[0]; }

    // 1-based, zero-padded
    int part(int j) const {
        return (j >= 1 && j <= length()) ? parts_[static_cast<std::size_t>(j - 1)] : 0;
    }
    // conjugate part: number of parts >= i  (1-based, zero-padded)
    int conj_part(int i) const;

    Partition conjugate() const;

    // componentwise containment (this subset of o as Young diagrams)
    bool contained_in(const Partition& o) const;
    bool contains_box(int row, int col) const { return col >= 1 && row >= 1 && col <= part(row); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const; // reverse-lex enumeration order

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct Box {
    int row = 1; // 1-based
    int col = 1;
    bool operator==(const Box&) const = default;
};

/* Arm and leg of a box relative to a partition; negative when the box lies
 * outside the diagram (the relative statistics of the rectangular-envelope
 * products). */
inline int arm(const Box& s, const Partition& mu) { return mu.part(s.row) - s.col; }
inline int leg(const Box& s, const Partition& mu) { return mu.conj_part(s.col) - s.row; }

// all partitions of n, in the deterministic enumeration order (largest-part first)
std::vector<Partition> enumerate_partitions(int n);

// streaming variant
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

// partitions of n contained in `outer`, same order
std::vector<Partition> enumerate_subpartitions(int n, const Partition& outer);

// number of partitions of n
Int partition_count(int n);

// number of plane partitions of n, by brute-force enumeration of monotone arrays
Int plane_partition_count(int n);

} // namespace nestloc
