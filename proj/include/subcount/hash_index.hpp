#pragma once

#include <cstdint>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include "subcount/orientation.hpp"

namespace subcount {

/// Up to four vertex ids, sorted ascending, packed into two words (ids
/// stored +1 so empty slots are zero). Canonical and hashable.
struct VertexSetKey {
    std::uint64_t lo = 0, hi = 0;

    /// `v` need not be sorted; n <= 4.
    static VertexSetKey make(const Vertex* v, unsigned n);

    unsigned size() const;
    bool operator==(const VertexSetKey&) const = default;

    template <typename H>
    friend H AbslHashValue(H h, const VertexSetKey& k) {
        return H::combine(std::move(h), k.lo, k.hi);
    }
};

/// Positional pair of sets: `first` anchors the edge tail, `second` the head.
struct SetPairKey {
    VertexSetKey first, second;

    bool operator==(const SetPairKey&) const = default;

    template <typename H>
    friend H AbslHashValue(H h, const SetPairKey& k) {
        return H::combine(std::move(h), k.first.lo, k.first.hi, k.second.lo, k.second.hi);
    }
};

/// The three key->count maps over an oriented graph:
///   HM1: the directed edge set;
///   HM2: S -> |{u : S subset of N+(u)}| for 1 <= |S| <= 4;
///   HM3: (S1,S2) -> |{(u,v) in E : S1 subset of N+(u), S2 subset of N+(v)}|
///        for 1 <= |S1 union S2| <= 3.
/// Absent keys mean zero. Build is O(m kappa^3) expected; read-only after.
class HashIndex {
public:
    HashIndex() = default;
    explicit HashIndex(const OrientedGraph& g, bool need_hm2 = true, bool need_hm3 = true);

    bool contains_edge(Vertex u, Vertex v) const {
        return hm1_.contains((static_cast<std::uint64_t>(u) << 32) | v);
    }
    std::uint64_t common_out_count(const VertexSetKey& s) const {
        auto it = hm2_.find(s);
        return it == hm2_.end() ? 0 : it->second;
    }
    std::uint64_t edge_pair_count(const VertexSetKey& s1, const VertexSetKey& s2) const {
        auto it = hm3_.find(SetPairKey{s1, s2});
        return it == hm3_.end() ? 0 : it->second;
    }

    bool has_hm2() const { return has_hm2_; }
    bool has_hm3() const { return has_hm3_; }

    const absl::flat_hash_set<std::uint64_t>& hm1() const { return hm1_; }
    const absl::flat_hash_map<VertexSetKey, std::uint64_t>& hm2() const { return hm2_; }
    const absl::flat_hash_map<SetPairKey, std::uint64_t>& hm3() const { return hm3_; }

private:
    void build_hm1(const OrientedGraph& g);
    void build_hm2(const OrientedGraph& g);
    void build_hm3(const OrientedGraph& g);

    absl::flat_hash_set<std::uint64_t> hm1_;
    absl::flat_hash_map<VertexSetKey, std::uint64_t> hm2_;
    absl::flat_hash_map<SetPairKey, std::uint64_t> hm3_;
    bool has_hm2_ = false;
    bool has_hm3_ = false;
};

}  // namespace subcount
