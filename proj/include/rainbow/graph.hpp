#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

// Part subsets must fit one machine word in the subset DP.
inline constexpr int kMaxParts = 24;

struct VertexRef {
    int part = 0;
    int index = 0;
    friend auto operator<=>(const VertexRef &, const VertexRef &) = default;
};

// "p:i"
std::string to_string(const VertexRef &v);
VertexRef parse_vertex_ref(const std::string &text);

enum class ViolationKind { shape, in_degree, rainbow_cycle, out_degree };

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
    std::vector<VertexRef> vertices;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(ViolationKind kind, std::string detail, std::vector<VertexRef> vertices = {});
};

/// An ell-partite bidirected graph stored as its in-edge table: for every
/// vertex v and every part p other than part(v), in[v][p] is the index
/// (within part p) of v's unique in-neighbour in that part, and in[v][part(v)]
/// is -1. The edge set is fully determined by this table. Instances are
/// immutable after build and safe to share across threads.
struct PartedGraph {
    int ell = 0;
    std::vector<int> sizes;
    std::vector<int> offsets;  // offsets[p] = first global index of part p; offsets[ell] = n
    std::vector<int> part_of_vid;
    std::vector<std::vector<int>> in;  // n rows, ell entries each

    int vertex_count() const { return offsets.empty() ? 0 : offsets.back(); }
    int offset(int part) const { return offsets[part]; }
    int part_of(int vid) const { return part_of_vid[vid]; }
    int index_of(int vid) const { return vid - offsets[part_of_vid[vid]]; }
    int global(int part, int index) const { return offsets[part] + index; }
    int global(const VertexRef &v) const { return offsets[v.part] + v.index; }
    VertexRef ref(int vid) const { return {part_of(vid), index_of(vid)}; }
    bool valid(const VertexRef &v) const {
        return v.part >= 0 && v.part < ell && v.index >= 0 && v.index < sizes[v.part];
    }
    // Global id of v's in-neighbour inside part p (p != part(v)).
    int in_neighbor(int vid, int p) const { return offsets[p] + in[vid][p]; }
    long long edge_count() const { return static_cast<long long>(vertex_count()) * (ell - 1); }

    // Out-adjacency is derived from the in-table on demand.
    std::vector<std::vector<int>> out_adjacency() const;

    friend bool operator==(const PartedGraph &, const PartedGraph &) = default;
};

// Validates dimensions and index ranges; throws std::invalid_argument on
// malformed input. No rainbow-cycle check happens here.
PartedGraph build_graph(int ell, std::vector<int> sizes, std::vector<std::vector<int>> in_table);

// Membership checks for the two graph classes. validate_omega re-asserts the
// shape conditions and checks rainbow-cycle-freeness; validate_permutation
// checks that every ordered part pair carries a bijection (it does not test
// for rainbow cycles; compose with validate_omega for full membership in the
// permutation class).
ValidationReport validate_omega(const PartedGraph &g);
ValidationReport validate_permutation(const PartedGraph &g);

// A byte string invariant under part relabelling and within-part vertex
// relabelling: equal keys iff the graphs are related by the symmetry group.
// Lexicographically minimal serialization, found by pruned backtracking.
std::string canonical_key(const PartedGraph &g);

// The relabelled graph realizing canonical_key(g).
PartedGraph canonical_form(const PartedGraph &g);

struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// rainbow-graph/1 JSON document; encode is byte-deterministic.
std::string encode_graph(const PartedGraph &g);
PartedGraph decode_graph(const std::string &text);

}  // namespace rainbow
