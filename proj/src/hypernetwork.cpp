#include "hnet/hypernetwork.hpp"

#include <cassert>

#include "hnet/error.hpp"

namespace hnet {

namespace {
const IdSet kEmpty;
}

const Boundary* BoundaryRegistry::find(const ElementId& id) const {
    auto it = items_.find(id);
    return it == items_.end() ? nullptr : &it->second;
}

bool BoundaryRegistry::add(Boundary b) {
    auto id = b.id;
    return items_.emplace(std::move(id), std::move(b)).second;
}

Hypernetwork Hypernetwork::assemble(std::vector<Element> elements, BoundaryRegistry boundaries) {
    Hypernetwork h;
    h.elements_ = std::move(elements);
    h.boundaries_ = std::move(boundaries);
    h.rebuild_lookup();
    h.reindex_part_of();
    return h;
}

Hypernetwork Hypernetwork::assemble(std::vector<Element> elements, BoundaryRegistry boundaries,
                                    PartOfIndex part_of) {
    Hypernetwork h = assemble(std::move(elements), std::move(boundaries));
    h.part_of_ = std::move(part_of);
    return h;
}

const Element* Hypernetwork::find(const ElementId& id) const {
    auto it = lookup_.find(id);
    return it == lookup_.end() ? nullptr : &elements_[it->second];
}

std::vector<ElementId> Hypernetwork::insertion_order() const {
    std::vector<ElementId> order;
    order.reserve(elements_.size());
    for (const auto& e : elements_) order.push_back(id_of(e));
    return order;
}

const IdSet& Hypernetwork::containers_of(const ElementId& id) const {
    auto it = part_of_.find(id);
    return it == part_of_.end() ? kEmpty : it->second;
}

void Hypernetwork::append(Element e) {
    auto id = id_of(e);
    assert(!lookup_.count(id));
    link(e);
    lookup_.emplace(std::move(id), elements_.size());
    elements_.push_back(std::move(e));
}

void Hypernetwork::replace(Element e) {
    auto it = lookup_.find(id_of(e));
    assert(it != lookup_.end());
    Element& slot = elements_[it->second];
    unlink(slot);
    link(e);
    slot = std::move(e);
}

void Hypernetwork::put(Element e) {
    if (contains(id_of(e)))
        replace(std::move(e));
    else
        append(std::move(e));
}

bool Hypernetwork::erase(const ElementId& id) {
    auto it = lookup_.find(id);
    if (it == lookup_.end()) return false;
    unlink(elements_[it->second]);
    elements_.erase(elements_.begin() + static_cast<std::ptrdiff_t>(it->second));
    rebuild_lookup();
    return true;
}

void Hypernetwork::reindex_part_of() {
    part_of_.clear();
    for (const auto& e : elements_) link(e);
}

void Hypernetwork::link(const Element& e) {
    const auto* hs = as_hypersimplex(e);
    if (!hs) return;
    for (const auto& p : hs->participants) part_of_[p].insert(hs->id);
}

void Hypernetwork::unlink(const Element& e) {
    const auto* hs = as_hypersimplex(e);
    if (!hs) return;
    for (const auto& p : hs->participants) {
        auto it = part_of_.find(p);
        if (it == part_of_.end()) continue;
        it->second.erase(hs->id);
        if (it->second.empty()) part_of_.erase(it);
    }
}

void Hypernetwork::rebuild_lookup() {
    lookup_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(id_of(elements_[i]), i);
}

const Element* resolve(const Hypernetwork& h, const ElementId& id) { return h.find(id); }

Hypernetwork rebuild_part_of_index(const Hypernetwork& h) {
    for (const auto& e : h.elements()) {
        if (const auto* hs = as_hypersimplex(e)) {
            for (const auto& p : hs->participants)
                if (!h.contains(p)) throw DanglingReference(p, hs->id);
        }
    }
    Hypernetwork out = h;
    out.reindex_part_of();
    return out;
}

} // namespace hnet
