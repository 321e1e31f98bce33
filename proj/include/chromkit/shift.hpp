#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "chromkit/chromatic.hpp"
#include "chromkit/graph.hpp"
#include "chromkit/io.hpp"

namespace chromkit {

/// Finite subset of the naturals (0-based), sorted ascending without repeats.
using FiniteSet = std::vector<std::uint32_t>;

/// Degree of x in the shift graph on infinite sets: one successor x \ {min x}
/// plus one predecessor {a} u x per a < min x, so 1 + min x.
std::size_t shift_degree(std::span<const std::uint32_t> x);

/// x \ {min x}.
FiniteSet shift_image(std::span<const std::uint32_t> x);

inline constexpr Label kGadgetEdge = 0;
inline constexpr Label kShiftEdge = 1;

/// Finite piece of the shift graph: a list of sets with an edge x -- S(x)
/// whenever both are present.
struct ShiftFragment {
    std::size_t m = 0;  // ground set {0..m-1}; 0 for hand-built fragments
    std::size_t k_lo = 0;
    std::size_t k_hi = 0;
    std::vector<FiniteSet> sets;
    LabeledMultigraph graph;

    std::optional<Vertex> index_of(const FiniteSet& x) const;
    std::map<FiniteSet, Vertex> index;
};

/// All subsets of {0..m-1} with size in [k_lo, k_hi], ordered by size then
/// lexicographically. Throws std::invalid_argument unless 1 <= k_lo <= k_hi <= m.
ShiftFragment build_fragment(std::size_t m, std::size_t k_lo, std::size_t k_hi);

/// Fragment over an explicit family of sets (each normalized, duplicates rejected).
ShiftFragment make_fragment(std::vector<FiniteSet> sets);

/// Degree-spread graph on pairs (x, i), i < l(n, deg x), restricted to a fragment.
///
/// Shift edge x -> y = S(x) becomes (x, deg x - 1) -- (y, min x) with label
/// kShiftEdge; each {x} x {0..l-1} carries the gadget F(n, deg x) with label
/// kGadgetEdge. deg is the intrinsic shift degree, never the in-fragment one.
struct HPrimeGraph {
    ShiftFragment base;
    std::size_t n = 0;
    LabeledMultigraph graph;
    std::vector<std::size_t> offset;      // base vertex -> first index; size |base|+1
    std::vector<std::size_t> base_degree; // intrinsic shift degree
    std::vector<bool> interior;           // successor and all predecessors present

    Vertex vertex(Vertex x, std::size_t i) const;
    std::pair<Vertex, std::size_t> decode(Vertex v) const;
};

/// Throws std::invalid_argument for n < 3.
HPrimeGraph build_hprime(const ShiftFragment& fragment, std::size_t n);

/// c'(x,i) = c(x) on the tuple, (c_{n,d}(i) + c(x)) mod n on the gadget rest.
/// Throws std::invalid_argument unless c is a proper coloring with values < 3.
VertexColoring lift_coloring(const HPrimeGraph& h, const VertexColoring& base_coloring);

struct ProjectionReport {
    VertexColoring coloring;           // c(x) = c'(x, 0)
    std::vector<bool> tuple_constant;  // per base vertex
    bool all_tuple_constant = true;
    bool proper_on_interior = true;    // fragment edges with both ends interior
    bool proper_on_all = true;         // every fragment edge (informational)
};

/// Throws std::invalid_argument if c' is not proper on h.
ProjectionReport project_coloring(const HPrimeGraph& h, const VertexColoring& coloring);

struct TupleConstancyReport {
    std::uint64_t colorings = 0;      // summed over connected components of H'
    std::uint64_t non_constant = 0;   // component colorings breaking some tuple
    bool complete = true;             // no component hit the cap
    std::size_t components = 0;
};

/// Enumerates the proper n-colorings of each connected component of H'
/// separately (every tuple lies inside one component) and checks that each
/// is constant on every tuple it contains.
TupleConstancyReport enumerate_tuple_constancy(const HPrimeGraph& h, std::uint64_t cap_per_component);

Json fragment_to_json(const ShiftFragment& f);
ShiftFragment fragment_from_json(const Json& j);
Json hprime_to_json(const HPrimeGraph& h);

}  // namespace chromkit
