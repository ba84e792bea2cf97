#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uflab {

enum class Compression : uint8_t { none, full, splitting };

struct DsuMode {
    bool by_size = false;
    Compression compression = Compression::none;

    bool operator==(const DsuMode&) const = default;
};

// Canonical mode names: naive, ubs, pc, ps, ubs+pc, ubs+ps.
std::string mode_name(DsuMode mode);
DsuMode parse_mode(const std::string& name);
std::vector<DsuMode> all_modes();

struct AccessCounts {
    uint64_t root_reads = 0;
    uint64_t root_writes = 0;
    uint64_t size_reads = 0;
    uint64_t size_writes = 0;

    uint64_t root_total() const { return root_reads + root_writes; }
    uint64_t size_total() const { return size_reads + size_writes; }
    uint64_t total() const { return root_total() + size_total(); }

    AccessCounts& operator+=(const AccessCounts& o) {
        root_reads += o.root_reads;
        root_writes += o.root_writes;
        size_reads += o.size_reads;
        size_writes += o.size_writes;
        return *this;
    }
};

// Disjoint-set forest instrumented to count every parent-table and
// size-table access. Counting convention: each parent entry read costs one
// root_read (root detection reads the root's own entry), each parent write
// one root_write; full compression's second pass re-reads then rewrites each
// non-root visited element; path splitting reads parent and grandparent and
// writes the parent once per step. A find on a depth-1 element under full
// compression therefore costs exactly 4 accesses.
class DisjointForest {
public:
    DisjointForest(int32_t n, DsuMode mode);

    int32_t find(int32_t x);

    // Merges the sets of x and y (two finds plus a link). Returns the
    // surviving root.
    int32_t unite(int32_t x, int32_t y);

    // Links two distinct roots directly; by_size puts the smaller tree under
    // the larger (ties to the lower id), otherwise the first argument's root
    // survives. Returns the surviving root.
    int32_t link(int32_t rx, int32_t ry);

    const AccessCounts& counts() const { return counts_; }
    int32_t element_count() const { return static_cast<int32_t>(parent_.size()); }
    DsuMode mode() const { return mode_; }

    // Uncounted introspection for tests.
    int32_t parent_of(int32_t x) const { return parent_[x]; }
    int32_t stored_size(int32_t x) const { return size_[x]; }

private:
    int32_t read_parent(int32_t x) {
        ++counts_.root_reads;
        return parent_[x];
    }
    void write_parent(int32_t x, int32_t p) {
        ++counts_.root_writes;
        parent_[x] = p;
    }

    std::vector<int32_t> parent_;
    std::vector<int32_t> size_;
    std::vector<int32_t> visit_buf_;
    AccessCounts counts_;
    DsuMode mode_;
    uint64_t link_count_ = 0;
};

// Fig-1 style benchmark: m merges of uniformly random element pairs on a
// forest of size n; returns root-table accesses (reads + writes) per merge.
double bench_random_merges(int32_t n, uint64_t m, DsuMode mode, uint64_t seed);

}  // namespace uflab
