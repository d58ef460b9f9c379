#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "splp/decomposition.hpp"
#include "splp/graph.hpp"

namespace splp {

// How a partial family of vertex-disjoint path fragments meets the current
// bag.  Per slot (bag position, ascending vertex id): OFF = no fragment edge
// yet, END = one, MID = two.  Every END slot is paired with the slot holding
// the other end of its fragment, or carries the External tag when that end
// was already forgotten (it is then an endpoint of the final path).
// externals_used counts forgotten endpoints; at most two may ever exist,
// which is exactly what forces the surviving edge set into a single path.
struct PathConfiguration {
    static constexpr int8_t kNone = -2;     // partner value for OFF/MID slots
    static constexpr int8_t kExternal = -1; // far end already forgotten

    std::vector<uint8_t> state;  // 0 = OFF, 1 = END, 2 = MID
    std::vector<int8_t> partner; // END: slot index or kExternal; else kNone
    int externals_used = 0;      // 0..2

    enum : uint8_t { OFF = 0, END = 1, MID = 2 };

    int size() const { return static_cast<int>(state.size()); }
    int active_external_tags() const;

    // Pairing is a symmetric partial matching on exactly the END slots, and
    // externals_used - active tags is an even count of fully closed
    // fragments, each of which consumed two of the (at most two) externals.
    bool is_valid() const;

    std::vector<int8_t> encoded() const; // lookup key

    bool operator==(const PathConfiguration&) const = default;
};

// Catalog of all valid configurations for one bag size plus the transition
// tables of the dynamic program, each mapping ordinals to ordinals with -1
// for infeasible moves.  Built once per size and shared between runs.
struct SizeTables {
    int size = 0;
    std::vector<PathConfiguration> configs;
    std::map<std::vector<int8_t>, int> index;

    // forget[slot * count + c]: drop `slot` -> ordinal at size-1.  OFF/MID
    // slots drop freely; an END slot consumes one external (its live partner
    // becomes External-tagged) and fails when both externals are spent.
    std::vector<int32_t> forget;
    // intro[slot * count(size-1) + c]: insert an OFF slot -> ordinal here.
    std::vector<int32_t> intro;
    // add_edge[(i*size+j) * count + c], i < j: one fragment edge between the
    // slots.  Endpoints must be OFF or END; an edge between the two ends of
    // the same fragment would close a cycle and is infeasible.
    std::vector<int32_t> add_edge;
    // join[a * count + b]: overlay two configurations on the same bag:
    // per-slot fragment degrees add (<= 2), externals add (<= 2), and
    // fragments concatenate at shared END slots; any cycle is infeasible.
    std::vector<int32_t> join;

    int count() const { return static_cast<int>(configs.size()); }
    int ordinal_of(const PathConfiguration& c) const; // -1 if absent
};

// Lazily built, cached, safe for concurrent callers; references are stable.
const SizeTables& size_tables(int size);

// Per-node value tables over a nice tree decomposition: best fragment-edge
// count reaching each configuration, -1 where unreachable.  The root's
// empty-bag externals_used = 2 entry is the longest-path length.
struct DPTable {
    const NiceTreeDecomposition* ntd = nullptr;
    const Graph* g = nullptr;
    std::vector<std::vector<Edge>> assigned; // per node, edges consumed there
    std::vector<int64_t> offset;             // node -> start index in values
    std::vector<int32_t> values;
    int root_final = -1; // value of the root's closed-path configuration

    int32_t value_at(int node, int ordinal) const {
        return values[offset[node] + ordinal];
    }
};

// Bottom-up sweep: Leaf seeds the empty configuration at 0; Introduce tries
// every subset of the node's assigned edges; Forget finalizes the departing
// vertex; Join overlays sibling tables.  Requires g connected and a valid
// nice decomposition of it.
DPTable run_forward_dp(const NiceTreeDecomposition& ntd, const Graph& g);

// max(0, root closed-path value); 0 only for graphs whose DP saw no edge.
int longest_path_length(const DPTable& dp);

// Flags parallel to DPTable::values: a configuration is marked iff it occurs
// in at least one realization of some longest path.  Top-down propagation
// through every optimal predecessor, starting from the root.
struct ConfigMarking {
    std::vector<char> marked;

    bool is_marked(const DPTable& dp, int node, int ordinal) const {
        return marked[dp.offset[node] + ordinal] != 0;
    }
};

ConfigMarking mark_contributing_configs(const DPTable& dp);

// One longest path, reconstructed deterministically (first optimal
// predecessor, subsets in ascending bitmask order).  Requires length >= 1.
Path extract_longest_path(const DPTable& dp, const Graph& g);

} // namespace splp
