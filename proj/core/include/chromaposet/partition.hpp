#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromaposet/rational.hpp"

namespace chromaposet {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition (weight 0) is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    /// Multiplicity of the value v among the parts.
    int multiplicity(int v) const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    /// Plain lexicographic comparison of the part vectors. Partitions of
    /// equal weight compare in reverse of the canonical enumeration order.
    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

    /// "[4,2,2]"; "[]" for the empty partition.
    std::string to_string() const;
    /// Accepts "[4,2,2]" and the exponent shorthand "[2^3,1]".
    static std::optional<Partition> parse(std::string_view text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Canonical ordering: (n) first, (1^n) last (reverse lexicographic).
/// Every coefficient vector and transition matrix is indexed this way.
struct PartitionCanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() > b.parts();
    }
};

/// All partitions of n in canonical order, each exactly once.
std::vector<Partition> partitions_of(int n);

/// Dominance: every prefix sum of a is >= that of b. Requires equal weight.
bool dominates(const Partition& a, const Partition& b);

Partition transpose(const Partition& p);

/// The product of factorials of part multiplicities.
Integer automorphism_factor(const Partition& p);

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.parts()) h = h * 1099511628211ull + static_cast<size_t>(v);
        return h;
    }
};

}  // namespace chromaposet
