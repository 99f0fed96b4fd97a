#pragma once

// Fixed-universe vertex sets with bitset semantics. A VertexSet is bound to
// the universe {0, ..., n-1} of the graph that owns it; set operations
// require both operands to share a universe.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tdc/errors.hpp"

namespace tdc {

class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), bits_((static_cast<size_t>(universe) + 63) / 64, 0) {
        if (universe < 0) throw PreconditionError("VertexSet universe must be non-negative");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check_vertex(v);
        return (bits_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check_vertex(v);
        bits_[static_cast<size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_vertex(v);
        bits_[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet out(n_);
        for (int v = 0; v < n_; ++v)
            if (!contains(v)) out.add(v);
        return out;
    }

    bool operator==(const VertexSet& o) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw PreconditionError("vertex id out of universe");
    }
    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw PreconditionError("VertexSet universe mismatch");
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace tdc
