#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromkit/graph.hpp"

namespace chromkit {

/// Canonical text form of a rooted, edge-labeled, vertex-colored ball.
///
/// Layout: `r<depth>;n<count>;c<colors in canonical order | ->;e<u-v:label,...>`.
/// The root is canonical vertex 0. Two balls have equal codes iff a root-,
/// label- and color-preserving isomorphism exists between them.
using CanonicalCode = std::string;

CanonicalCode canonical_code(const RootedBall& ball);

/// Parsed form of a canonical code; a ball whose canonical labeling is the identity.
struct DecodedBall {
    std::size_t depth = 0;
    std::size_t num_vertices = 0;
    std::optional<std::vector<Color>> colors;
    std::vector<Edge> edges;
};

DecodedBall decode_code(const CanonicalCode& code);

}  // namespace chromkit
