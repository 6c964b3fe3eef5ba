#ifndef HNET_CORE_HPP
#define HNET_CORE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hnet {

// Identifier of a vertex, anti-vertex, hypersimplex or boundary. Plain
// identifiers match [A-Za-z0-9_]+; anti-vertex identifiers are "~" followed
// by a plain identifier.
class ElementId {
public:
    ElementId() = default;
    explicit ElementId(std::string name) : name_(std::move(name)) {}

    const std::string& str() const noexcept { return name_; }
    bool empty() const noexcept { return name_.empty(); }

    // True for "~X" identifiers.
    bool is_anti() const noexcept { return !name_.empty() && name_.front() == '~'; }

    auto operator<=>(const ElementId&) const = default;

    static bool is_plain_identifier(std::string_view s) noexcept;
    static bool is_well_formed(std::string_view s) noexcept;

private:
    std::string name_;
};

std::ostream& operator<<(std::ostream& os, const ElementId& id);

using IdSet = std::set<ElementId>;

enum class Aggregation { Alpha, Beta };

std::string_view to_string(Aggregation a) noexcept;

struct RelationSignature {
    std::string symbol;
    std::vector<std::string> roles;

    std::size_t arity() const noexcept { return roles.size(); }

    bool operator==(const RelationSignature&) const = default;

    // Signature used for relation symbols that were never declared: roles r1..rn.
    static RelationSignature anonymous(std::string symbol, std::size_t arity);
};

struct Boundary {
    ElementId id;
    bool percolating = false;

    bool operator==(const Boundary&) const = default;
};

struct Vertex {
    ElementId id;

    bool operator==(const Vertex&) const = default;
};

struct AntiVertex {
    ElementId excludes;

    ElementId id() const { return ElementId("~" + excludes.str()); }

    bool operator==(const AntiVertex&) const = default;
};

struct Hypersimplex;
using Element = std::variant<Vertex, AntiVertex, Hypersimplex>;

// Snapshots of the two elements that claimed one identifier.
struct ConflictMarker {
    std::shared_ptr<const Element> left;
    std::shared_ptr<const Element> right;

    bool operator==(const ConflictMarker& other) const;
};

struct Hypersimplex {
    ElementId id;
    Aggregation agg = Aggregation::Alpha;
    RelationSignature relation;
    std::vector<ElementId> participants;
    IdSet tags;
    std::optional<ConflictMarker> conflict;

    bool is_conflict() const noexcept { return conflict.has_value(); }

    // Exact structural equality (participant order significant for both
    // aggregation types). Theory-level identity is axioms::eq_hs.
    bool operator==(const Hypersimplex&) const = default;
};

ElementId id_of(const Element& e);

// Tags of a hypersimplex; vertices and anti-vertices carry none.
const IdSet& tags_of(const Element& e);

inline bool is_vertex(const Element& e) noexcept { return std::holds_alternative<Vertex>(e); }
inline bool is_anti(const Element& e) noexcept { return std::holds_alternative<AntiVertex>(e); }
inline bool is_hypersimplex(const Element& e) noexcept {
    return std::holds_alternative<Hypersimplex>(e);
}
inline const Hypersimplex* as_hypersimplex(const Element& e) noexcept {
    return std::get_if<Hypersimplex>(&e);
}

// Builds the SameName conflict hypersimplex for `left` (the element already in
// place, or the failing element) and `right` (the incoming element). The marker
// has no participants and carries the union of both snapshots' tags.
Hypersimplex make_conflict(const Element& left, const Element& right);

// Resizes a beta signature to `arity` roles: keeps a prefix of the existing roles
// and appends fresh, unique names when growing.
RelationSignature resized_signature(const RelationSignature& sig, std::size_t arity);

} // namespace hnet

template <>
struct std::hash<hnet::ElementId> {
    std::size_t operator()(const hnet::ElementId& id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};

#endif // HNET_CORE_HPP
