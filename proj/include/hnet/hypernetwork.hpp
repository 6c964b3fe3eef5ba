#ifndef HNET_HYPERNETWORK_HPP
#define HNET_HYPERNETWORK_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hnet/core.hpp"

namespace hnet {

class BoundaryRegistry {
public:
    using Map = std::map<ElementId, Boundary>;

    bool contains(const ElementId& id) const { return items_.count(id) != 0; }
    const Boundary* find(const ElementId& id) const;

    // Registers `b` unless a boundary with that id exists; returns whether it was added.
    bool add(Boundary b);
    bool erase(const ElementId& id) { return items_.erase(id) != 0; }

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    Map::const_iterator begin() const noexcept { return items_.begin(); }
    Map::const_iterator end() const noexcept { return items_.end(); }

    bool operator==(const BoundaryRegistry&) const = default;

private:
    Map items_;
};

// Container ids keyed by participant id. Keys with no containers are absent.
using PartOfIndex = std::map<ElementId, IdSet>;

// A registry of elements in insertion order, the boundary registry, and the
// part-of index (the inverse of participant membership).
//
// Public operators take hypernetworks by const reference and return new ones;
// the mutators below exist for operators working on their own copies.
class Hypernetwork {
public:
    Hypernetwork() = default;

    // Stores `elements` verbatim, including duplicate ids and dangling
    // references, so that validate() can report them. Lookups by id see the
    // first occurrence.
    static Hypernetwork assemble(std::vector<Element> elements, BoundaryRegistry boundaries);
    // As above but with an explicit (possibly inconsistent) part-of index.
    static Hypernetwork assemble(std::vector<Element> elements, BoundaryRegistry boundaries,
                                 PartOfIndex part_of);

    const Element* find(const ElementId& id) const;
    bool contains(const ElementId& id) const { return find(id) != nullptr; }

    const std::vector<Element>& elements() const noexcept { return elements_; }
    std::vector<ElementId> insertion_order() const;
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty() && boundaries_.empty(); }

    const BoundaryRegistry& boundaries() const noexcept { return boundaries_; }
    BoundaryRegistry& boundaries() noexcept { return boundaries_; }

    const PartOfIndex& part_of() const noexcept { return part_of_; }
    // Hypersimplices listing `id` as a participant.
    const IdSet& containers_of(const ElementId& id) const;

    // Appends an element whose id is not present.
    void append(Element e);
    // Replaces the element with the same id in place, keeping its position.
    void replace(Element e);
    // Replaces if present, appends otherwise.
    void put(Element e);
    bool erase(const ElementId& id);

    // Recomputes the part-of index from participant lists, skipping the
    // dangling-reference check.
    void reindex_part_of();

private:
    void link(const Element& e);
    void unlink(const Element& e);
    void rebuild_lookup();

    std::vector<Element> elements_;
    std::unordered_map<ElementId, std::size_t> lookup_;
    BoundaryRegistry boundaries_;
    PartOfIndex part_of_;
};

// The element registered under `id`, or nullptr.
const Element* resolve(const Hypernetwork& h, const ElementId& id);

// Returns a copy of `h` whose part-of index is exactly the inverse of
// participant membership. Throws DanglingReference when a participant does not
// resolve.
Hypernetwork rebuild_part_of_index(const Hypernetwork& h);

} // namespace hnet

#endif // HNET_HYPERNETWORK_HPP
