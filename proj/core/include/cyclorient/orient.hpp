#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclorient/decide.hpp"
#include "cyclorient/graph.hpp"

namespace cyclorient {

/// Outcome of checking an orientation against the chordless-cycle
/// condition. ok iff violations is empty.
struct ViolationReport {
    bool ok = true;
    std::vector<CycleSeq> violations; // canonical rotation, sorted
};

/// True iff every edge of the cycle points the same way around it.
bool cyclically_oriented(const CycleSeq& cycle, const Orientation& o);

/// Witness construction. Returns std::nullopt exactly when the graph is
/// not cyclically orientable. Otherwise builds, per component, the base
/// cycle's orientation in recorded order (bridges low id -> high id) and
/// replays the ears in reverse removal order, directing each ear path
/// against its already-directed closing edge. O(n) given the logs.
std::optional<Orientation> find_cyclic_orientation(const Graph& g);

/// Same, also exposing the per-component logs the construction used.
struct OrientationWitness {
    Orientation orientation;
    std::vector<DecompositionLog> logs;
};
std::optional<OrientationWitness> find_cyclic_orientation_with_logs(const Graph& g);

/// Checks o against every chordless cycle of g, found by exhaustive
/// enumeration. Intended for small graphs; inherits the enumeration's
/// size cap (SizeLimitError). Throws PartialOrientationError when o is
/// not total on g.
ViolationReport verify_orientation_exhaustive(const Graph& g, const Orientation& o);

/// Checks o against exactly the base cycles and ear cycles of the given
/// logs; for a cyclically orientable component these are precisely its
/// chordless cycles. O(total log size).
ViolationReport verify_orientation_from_log(const Graph& g, const Orientation& o,
                                            std::span<const DecompositionLog> logs);

} // namespace cyclorient
