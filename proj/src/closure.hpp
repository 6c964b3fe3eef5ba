#ifndef HNET_SRC_CLOSURE_HPP
#define HNET_SRC_CLOSURE_HPP

#include <map>

#include "hnet/hypernetwork.hpp"

namespace hnet::detail {

// Elements chosen by an operator, keyed by id. Values may be rewritten
// versions of the source elements (overlaps, subtractions).
using Selection = std::map<ElementId, Element>;

// Adds, from `source`, every element transitively referenced by the selected
// hypersimplices that is not selected yet.
void close_over_participants(Selection& chosen, const Hypernetwork& source);

// Lays the selection out in `source` insertion order.
Hypernetwork assemble_in_order(const Selection& chosen, const Hypernetwork& source,
                               BoundaryRegistry boundaries);

// Adds to `registry` every boundary tagged on `h`'s elements, looked up in the
// given registries in order.
void register_used_tags(BoundaryRegistry& registry, const Hypernetwork& h,
                        const BoundaryRegistry& primary, const BoundaryRegistry& secondary);

// Throws ClosureViolation when `h` does not validate.
void require_valid(const Hypernetwork& h, const char* op);

} // namespace hnet::detail

#endif // HNET_SRC_CLOSURE_HPP
