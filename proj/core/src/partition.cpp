#include "chromaposet/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chromaposet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

std::optional<Partition> Partition::parse(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') return std::nullopt;
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
        skip_ws();
        if (i != text.size()) return std::nullopt;
        return Partition{};
    }
    auto read_int = [&]() -> std::optional<int> {
        skip_ws();
        size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) return std::nullopt;
        long v = 0;
        for (size_t k = start; k < i; ++k) {
            v = v * 10 + (text[k] - '0');
            if (v > 1000000) return std::nullopt;
        }
        return static_cast<int>(v);
    };
    while (true) {
        auto value = read_int();
        if (!value || *value < 1) return std::nullopt;
        int repeat = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            auto e = read_int();
            if (!e || *e < 1) return std::nullopt;
            repeat = *e;
        }
        for (int k = 0; k < repeat; ++k) parts.push_back(*value);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= text.size() || text[i] != ']') return std::nullopt;
    ++i;
    skip_ws();
    if (i != text.size()) return std::nullopt;
    for (size_t k = 1; k < parts.size(); ++k)
        if (parts[k - 1] < parts[k]) return std::nullopt;
    return Partition{std::move(parts)};
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& current,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        enumerate_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_rec(n, n, current, out);
    if (n == 0) out.assign(1, Partition{});
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("dominates: partitions must have equal weight");
    long sa = 0, sb = 0;
    size_t len = std::max(a.parts().size(), b.parts().size());
    for (size_t j = 0; j < len; ++j) {
        sa += j < a.parts().size() ? a.parts()[j] : 0;
        sb += j < b.parts().size() ? b.parts()[j] : 0;
        if (sa < sb) return false;
    }
    return true;
}

Partition transpose(const Partition& p) {
    if (p.empty()) return p;
    std::vector<int> t(static_cast<size_t>(p.part(0)), 0);
    for (int v : p.parts())
        for (int j = 0; j < v; ++j) ++t[static_cast<size_t>(j)];
    return Partition{std::move(t)};
}

Integer automorphism_factor(const Partition& p) {
    Integer result = 1;
    int run = 0;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        ++run;
        bool end_of_run = i + 1 == p.parts().size() || p.parts()[i + 1] != p.parts()[i];
        if (end_of_run) {
            result *= factorial(run);
            run = 0;
        }
    }
    return result;
}

}  // namespace chromaposet
