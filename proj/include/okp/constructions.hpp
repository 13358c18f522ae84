#pragma once

#include <vector>

#include "okp/geometry.hpp"

namespace okp {

/// Clique-sum of two convex drawings along hull edges e1 of g1 and e2 of g2.
///
/// The n2-2 vertices of g2 not on e2 are inserted as one contiguous arc in
/// place of the hull edge e1; e2's endpoints are identified with e1's,
/// smaller index with smaller index. The identified edge is kept once.
/// Colorings survive when both inputs carry one and they can be matched on
/// the identified endpoints (possibly after swapping g2's colors).
ConvexGraph concatenate(const ConvexGraph& g1, Chord e1, const ConvexGraph& g2, Chord e2);

/// K_x | K_x | ... | K_x with `blocks` copies, each glued on the closing hull edge.
ConvexGraph kx_chain(int x, int blocks);

/// K_{x,x} on 2x points whose colors alternate around the hull.
ConvexGraph kxx_alternating(int x);

/// `copies` alternating K_{x,x} blocks glued on bichromatic hull edges; carries
/// its 2-coloring.
ConvexGraph kxx_chain(int x, int copies);

/// Two-page multigraph: every edge of the base drawn as a straight chord
/// (inside), plus a second copy of every diagonal routed outside the hull.
struct OuterCopyGraph {
    ConvexGraph base;
    std::vector<Chord> inside;
    std::vector<Chord> outside;

    std::size_t edge_count() const { return inside.size() + outside.size(); }

    /// Largest number of copies of any vertex pair (1 or 2, 0 when edgeless).
    int max_multiplicity() const;

    /// Crossing counts under the two-page rule: pairs on the same page cross
    /// iff their endpoints interleave, pairs on different pages never cross.
    std::vector<int> inside_crossings() const;
    std::vector<int> outside_crossings() const;

    int max_crossing() const;
};

OuterCopyGraph outercopy(const ConvexGraph& g);

}  // namespace okp
