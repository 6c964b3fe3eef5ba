#include <algorithm>

#include "closure.hpp"
#include "hnet/algebra.hpp"
#include "hnet/error.hpp"

namespace hnet {

std::string_view to_string(InsertOutcome o) noexcept {
    switch (o) {
    case InsertOutcome::Inserted: return "inserted";
    case InsertOutcome::Ignored: return "ignored";
    case InsertOutcome::Promoted: return "promoted";
    case InsertOutcome::Unified: return "unified";
    case InsertOutcome::Conflict: return "conflict";
    case InsertOutcome::Rejected: return "rejected";
    }
    return "?";
}

namespace {

struct CheckFailure {
    Rule rule;
    std::string detail;
};

// Typing, binding and scoping checks (A3-A5) on an incoming hypersimplex.
// Participant resolution is not checked: missing ids get auto-inserted.
std::optional<CheckFailure> check_incoming(const Hypersimplex& hs, const Hypernetwork& h) {
    for (const auto& t : hs.tags)
        if (!h.boundaries().contains(t))
            return CheckFailure{Rule::A5, "tag '" + t.str() + "' is not a registered boundary"};
    if (hs.is_conflict()) {
        if (!hs.participants.empty() || !hs.conflict->left || !hs.conflict->right)
            return CheckFailure{Rule::A4, "malformed conflict marker"};
        return std::nullopt;
    }
    if (hs.agg != Aggregation::Alpha && hs.agg != Aggregation::Beta)
        return CheckFailure{Rule::A3, "aggregation type is not alpha or beta"};
    const auto& sig = hs.relation;
    if (!ElementId::is_plain_identifier(sig.symbol))
        return CheckFailure{Rule::A4, "malformed relation symbol"};
    if (sig.arity() == 0) return CheckFailure{Rule::A4, "relation arity must be at least 1"};
    std::set<std::string> roles(sig.roles.begin(), sig.roles.end());
    if (roles.size() != sig.arity())
        return CheckFailure{Rule::A4, "role names of " + sig.symbol + " are not unique"};
    if (hs.participants.size() != sig.arity())
        return CheckFailure{Rule::A4, std::to_string(hs.participants.size()) +
                                          " participants bound to " + sig.symbol + " of arity " +
                                          std::to_string(sig.arity())};
    for (const auto& p : hs.participants)
        if (!ElementId::is_well_formed(p.str()))
            return CheckFailure{Rule::A1, "malformed participant identifier '" + p.str() + "'"};
    return std::nullopt;
}

// Why two same-name hypersimplices could not be unified.
CheckFailure classify_clash(const Hypersimplex& existing, const Hypersimplex& incoming) {
    if (existing.is_conflict() || incoming.is_conflict())
        return {Rule::A1, "SameName conflict with an existing conflict marker"};
    if (existing.agg != incoming.agg)
        return {Rule::A3, "SameName conflict: aggregation type " +
                              std::string(to_string(existing.agg)) + " vs " +
                              std::string(to_string(incoming.agg))};
    if (existing.relation.symbol != incoming.relation.symbol)
        return {Rule::A4, "SameName conflict: relation " + existing.relation.symbol + " vs " +
                              incoming.relation.symbol};
    if (!roles_compatible(existing, incoming))
        return {Rule::A4, "SameName conflict: arity or role order of " +
                              existing.relation.symbol + " differs"};
    return {Rule::A1, "SameName conflict: participants or tags differ"};
}

void ensure_participants(Hypernetwork& h, const Hypersimplex& hs) {
    for (const auto& p : hs.participants) {
        if (h.contains(p)) continue;
        if (p.is_anti())
            h.append(AntiVertex{ElementId(p.str().substr(1))});
        else
            h.append(Vertex{p});
    }
}

Hypersimplex registered_conflict(const Element& left, const Element& right, const Hypernetwork& h) {
    Hypersimplex marker = make_conflict(left, right);
    for (auto it = marker.tags.begin(); it != marker.tags.end();)
        it = h.boundaries().contains(*it) ? std::next(it) : marker.tags.erase(it);
    return marker;
}

Hypersimplex unify(const Hypersimplex& existing, const Hypersimplex& incoming) {
    Hypersimplex out = existing;
    for (const auto& p : incoming.participants)
        if (std::find(out.participants.begin(), out.participants.end(), p) == out.participants.end())
            out.participants.push_back(p);
    out.tags.insert(incoming.tags.begin(), incoming.tags.end());
    const auto& base = existing.relation.arity() >= incoming.relation.arity() ? existing.relation
                                                                              : incoming.relation;
    out.relation = resized_signature(base, out.participants.size());
    return out;
}

InsertStep insert_hypersimplex(Hypernetwork& h, const Hypersimplex& hs) {
    if (!ElementId::is_plain_identifier(hs.id.str()))
        return {InsertOutcome::Rejected, Rule::A1, "hypersimplex identifier must be a plain identifier"};
    const Element* existing = h.find(hs.id);

    if (existing) {
        if (const auto* prior = as_hypersimplex(*existing)) {
            if (eq_hs(*prior, hs)) return {InsertOutcome::Ignored, std::nullopt, {}};
            auto failure = check_incoming(hs, h);
            if (beta_compatible(*prior, hs) && !failure) {
                Hypersimplex joined = unify(*prior, hs);
                ensure_participants(h, joined);
                h.replace(std::move(joined));
                return {InsertOutcome::Unified, std::nullopt, {}};
            }
            // An ill-formed newcomer is reported by what is wrong with it.
            auto why = failure ? *failure : classify_clash(*prior, hs);
            if (failure) why.detail = "SameName conflict: " + why.detail;
            Element left = *existing;
            h.replace(registered_conflict(left, hs, h));
            return {InsertOutcome::Conflict, why.rule, why.detail};
        }
        if (is_vertex(*existing)) {
            if (auto failure = check_incoming(hs, h)) {
                Element left = *existing;
                h.replace(registered_conflict(left, hs, h));
                return {InsertOutcome::Conflict, failure->rule,
                        "vertex cannot be promoted: " + failure->detail};
            }
            ensure_participants(h, hs);
            h.replace(hs);
            return {InsertOutcome::Promoted, std::nullopt, {}};
        }
    }

    if (auto failure = check_incoming(hs, h)) {
        h.put(registered_conflict(hs, hs, h));
        return {InsertOutcome::Conflict, failure->rule, failure->detail};
    }
    ensure_participants(h, hs);
    h.put(hs);
    return {InsertOutcome::Inserted, std::nullopt, {}};
}

} // namespace

InsertStep insert_into(Hypernetwork& h, const Element& e) {
    if (const auto* hs = as_hypersimplex(e)) return insert_hypersimplex(h, *hs);
    const ElementId id = id_of(e);
    if (!ElementId::is_well_formed(id.str()) || (is_vertex(e) && id.is_anti()) ||
        (is_anti(e) && !ElementId::is_plain_identifier(std::get<AntiVertex>(e).excludes.str())))
        return {InsertOutcome::Rejected, is_vertex(e) ? Rule::A1 : Rule::A2, "malformed identifier"};
    if (h.contains(id)) return {InsertOutcome::Ignored, std::nullopt, {}};
    h.append(e);
    return {InsertOutcome::Inserted, std::nullopt, {}};
}

Hypernetwork insert(const Hypernetwork& h, const Element& e) {
    Hypernetwork out = h;
    insert_into(out, e);
    detail::require_valid(out, "insert");
    return out;
}

Hypernetwork merge(const Hypernetwork& h1, const Hypernetwork& h2) {
    Hypernetwork out = h1;
    for (const auto& [id, b] : h2.boundaries()) out.boundaries().add(b);
    for (const auto& e : h2.elements()) {
        insert_into(out, e);
        detail::require_valid(out, "merge");
    }
    return out;
}

} // namespace hnet
