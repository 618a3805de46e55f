#pragma once

#include <vector>

#include "mikado/linear_space.hpp"

namespace mikado {

/// A vertex-coloured structure with set-lines and an optional ordered
/// ternary relation: the common shape of linear spaces, extension pairs and
/// their H-expansions as far as isomorphism is concerned.
struct ColoredStructure {
    int n = 0;
    std::vector<int> colors;
    std::vector<PointSet> lines;
    std::vector<Triple> ordered_triples;
};

struct CanonicalForm {
    /// Lexicographically least encoding over all colour-respecting labellings.
    std::vector<int> encoding;
    /// labeling[p] = canonical label of point p.
    std::vector<int> labeling;
};

/// Partition refinement followed by individualisation over the first
/// non-singleton cell, pruned by automorphisms already discovered. Two
/// structures are isomorphic (colours respected) iff their encodings agree.
CanonicalForm canonical_form(const ColoredStructure& s);

/// Colour-respecting automorphisms found during the search (generators of the
/// automorphism group, identity excluded).
std::vector<std::vector<int>> automorphism_generators(const ColoredStructure& s);

ColoredStructure colored(const LinearSpace& space, std::vector<int> colors = {});

/// Points of `targets` lying in the same orbit as `p` under colour-respecting
/// automorphisms.
PointSet orbit_within(const ColoredStructure& s, int p, PointSet targets);

}  // namespace mikado
