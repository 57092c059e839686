#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sandgraph {

// Isomorphism type of a finite abelian p-group: the non-increasing sequence
// of exponents (e1 >= e2 >= ... >= 1) in Z/p^e1 + Z/p^e2 + ... . The empty
// partition is the trivial group.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be non-increasing");
        }
    }

    // Builds the canonical form from arbitrary-order data, dropping zeros.
    static Partition of(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t rank() const { return parts_.size(); }

    // Sum of parts; the group has order p^sum().
    unsigned sum() const {
        unsigned s = 0;
        for (unsigned e : parts_) s += e;
        return s;
    }

    // k-th part, 1-indexed, 0 past the end.
    unsigned part(std::size_t k) const { return k >= 1 && k <= parts_.size() ? parts_[k - 1] : 0; }

    // Conjugate partition: conjugate()[k-1] = #{i : part_i >= k}.
    std::vector<unsigned> conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<unsigned> parts_;
};

// All partitions of every integer in 0..max_sum, ordered by sum then
// lexicographically; each appears exactly once.
std::vector<Partition> all_partitions_up_to(unsigned max_sum);

} // namespace sandgraph
