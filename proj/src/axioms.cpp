#include "hnet/axioms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hnet {

std::string_view to_string(Rule r) noexcept {
    switch (r) {
    case Rule::A1: return "A1";
    case Rule::A2: return "A2";
    case Rule::A3: return "A3";
    case Rule::A4: return "A4";
    case Rule::A5: return "A5";
    case Rule::C1: return "C1";
    case Rule::C2: return "C2";
    case Rule::C3: return "C3";
    case Rule::C4: return "C4";
    case Rule::C5: return "C5";
    case Rule::C6: return "C6";
    case Rule::C7: return "C7";
    }
    return "?";
}

bool eq_vertex(const Vertex& a, const Vertex& b) { return a.id == b.id; }

namespace {

bool same_snapshot(const std::shared_ptr<const Element>& a, const std::shared_ptr<const Element>& b) {
    if (!a || !b) return a == b;
    return identical(*a, *b);
}

bool roles_unique(const RelationSignature& sig) {
    std::set<std::string> seen(sig.roles.begin(), sig.roles.end());
    return seen.size() == sig.roles.size();
}

bool is_prefix(const std::vector<std::string>& shorter, const std::vector<std::string>& longer) {
    return shorter.size() <= longer.size() &&
           std::equal(shorter.begin(), shorter.end(), longer.begin());
}

bool aggregation_declared(Aggregation a) {
    return a == Aggregation::Alpha || a == Aggregation::Beta;
}

} // namespace

bool eq_hs(const Hypersimplex& a, const Hypersimplex& b) {
    if (a.id != b.id || a.tags != b.tags || a.is_conflict() != b.is_conflict()) return false;
    if (a.is_conflict())
        return same_snapshot(a.conflict->left, b.conflict->left) &&
               same_snapshot(a.conflict->right, b.conflict->right);
    if (a.agg != b.agg || a.relation != b.relation) return false;
    if (a.agg == Aggregation::Alpha) return a.participants == b.participants;
    return a.participants.size() == b.participants.size() &&
           IdSet(a.participants.begin(), a.participants.end()) ==
               IdSet(b.participants.begin(), b.participants.end());
}

bool roles_compatible(const Hypersimplex& a, const Hypersimplex& b) {
    return a.relation.symbol == b.relation.symbol && a.relation.arity() == b.relation.arity() &&
           a.relation.roles == b.relation.roles;
}

bool beta_compatible(const Hypersimplex& a, const Hypersimplex& b) {
    if (a.is_conflict() || b.is_conflict()) return false;
    if (a.agg != Aggregation::Beta || b.agg != Aggregation::Beta) return false;
    if (a.relation.symbol != b.relation.symbol) return false;
    return is_prefix(a.relation.roles, b.relation.roles) ||
           is_prefix(b.relation.roles, a.relation.roles);
}

bool wellformed(const Hypersimplex& hs, const Hypernetwork& h) {
    for (const auto& t : hs.tags)
        if (!h.boundaries().contains(t)) return false;
    if (hs.is_conflict()) return hs.participants.empty() && hs.conflict->left && hs.conflict->right;
    if (!aggregation_declared(hs.agg)) return false;
    if (hs.relation.arity() == 0 || !roles_unique(hs.relation)) return false;
    if (hs.participants.size() != hs.relation.arity()) return false;
    return std::all_of(hs.participants.begin(), hs.participants.end(),
                       [&h](const ElementId& p) { return h.contains(p); });
}

bool orphan(const Element& e, const Hypernetwork& h) { return h.containers_of(id_of(e)).empty(); }

bool identical(const Element& a, const Element& b) {
    if (a.index() != b.index()) return false;
    if (const auto* va = std::get_if<Vertex>(&a)) return eq_vertex(*va, std::get<Vertex>(b));
    if (const auto* aa = std::get_if<AntiVertex>(&a)) return aa->id() == std::get<AntiVertex>(b).id();
    return eq_hs(std::get<Hypersimplex>(a), std::get<Hypersimplex>(b));
}

bool identical_in(const Hypernetwork& h, const Element& e) {
    const Element* found = h.find(id_of(e));
    return found && identical(*found, e);
}

ValidationReport validate(const Hypernetwork& h) {
    ValidationReport report;

    for (const auto& [id, b] : h.boundaries())
        if (!ElementId::is_plain_identifier(id.str()))
            report.add(Rule::A5, id, "malformed boundary identifier");

    std::map<ElementId, int> seen;
    for (const auto& e : h.elements()) {
        const ElementId id = id_of(e);
        if (++seen[id] == 2) report.add(Rule::A1, id, "identifier declared more than once");
        if (!ElementId::is_well_formed(id.str())) report.add(Rule::A1, id, "malformed identifier");

        if (is_vertex(e) && id.is_anti())
            report.add(Rule::A2, id, "vertex uses the reserved anti-vertex prefix");
        if (const auto* av = std::get_if<AntiVertex>(&e)) {
            if (!ElementId::is_plain_identifier(av->excludes.str()))
                report.add(Rule::A2, id, "anti-vertex must exclude a plain identifier");
        }

        const auto* hs = as_hypersimplex(e);
        if (!hs) continue;
        if (id.is_anti()) report.add(Rule::A2, id, "hypersimplex uses the reserved anti-vertex prefix");
        for (const auto& t : hs->tags)
            if (!h.boundaries().contains(t))
                report.add(Rule::A5, id, "tag '" + t.str() + "' is not a registered boundary");

        if (hs->is_conflict()) {
            if (!hs->participants.empty())
                report.add(Rule::A4, id, "conflict marker must not have participants");
            if (!hs->conflict->left || !hs->conflict->right)
                report.add(Rule::A1, id, "conflict marker is missing a snapshot");
            continue;
        }

        if (!aggregation_declared(hs->agg)) report.add(Rule::A3, id, "aggregation type is not alpha or beta");
        if (!ElementId::is_plain_identifier(hs->relation.symbol))
            report.add(Rule::A4, id, "malformed relation symbol '" + hs->relation.symbol + "'");
        if (hs->relation.arity() == 0) report.add(Rule::A4, id, "relation arity must be at least 1");
        if (!roles_unique(hs->relation))
            report.add(Rule::A4, id, "role names of " + hs->relation.symbol + " are not unique");
        if (hs->participants.size() != hs->relation.arity())
            report.add(Rule::A4, id,
                       std::to_string(hs->participants.size()) + " participants bound to " +
                           hs->relation.symbol + " of arity " +
                           std::to_string(hs->relation.arity()));
        for (const auto& p : hs->participants)
            if (!h.contains(p)) report.add(Rule::C5, id, "participant '" + p.str() + "' does not resolve");
    }

    PartOfIndex expected;
    for (const auto& e : h.elements())
        if (const auto* hs = as_hypersimplex(e))
            for (const auto& p : hs->participants) expected[p].insert(hs->id);
    if (expected != h.part_of()) {
        std::set<ElementId> keys;
        for (const auto& [k, _] : expected) keys.insert(k);
        for (const auto& [k, _] : h.part_of()) keys.insert(k);
        for (const auto& k : keys) {
            auto a = expected.find(k);
            auto b = h.part_of().find(k);
            const bool same = a != expected.end() && b != h.part_of().end() && a->second == b->second;
            if (!same) report.add(Rule::C7, k, "part-of index disagrees with participant lists");
        }
    }
    return report;
}

bool is_sub_hypernetwork(const Hypernetwork& h_small, const Hypernetwork& h_big) {
    return std::all_of(h_small.elements().begin(), h_small.elements().end(),
                       [&h_big](const Element& e) { return identical_in(h_big, e); });
}

} // namespace hnet
