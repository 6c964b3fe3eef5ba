#include "hnet/core.hpp"

#include <algorithm>

namespace hnet {

namespace {

bool is_ident_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

const IdSet kNoTags;

} // namespace

bool ElementId::is_plain_identifier(std::string_view s) noexcept {
    return !s.empty() && std::all_of(s.begin(), s.end(), is_ident_char);
}

bool ElementId::is_well_formed(std::string_view s) noexcept {
    if (!s.empty() && s.front() == '~') s.remove_prefix(1);
    return is_plain_identifier(s);
}

std::ostream& operator<<(std::ostream& os, const ElementId& id) { return os << id.str(); }

std::string_view to_string(Aggregation a) noexcept {
    return a == Aggregation::Alpha ? "alpha" : "beta";
}

RelationSignature RelationSignature::anonymous(std::string symbol, std::size_t arity) {
    RelationSignature sig{std::move(symbol), {}};
    sig.roles.reserve(arity);
    for (std::size_t i = 1; i <= arity; ++i) sig.roles.push_back("r" + std::to_string(i));
    return sig;
}

bool ConflictMarker::operator==(const ConflictMarker& other) const {
    auto same = [](const std::shared_ptr<const Element>& a, const std::shared_ptr<const Element>& b) {
        if (a == b) return true;
        if (!a || !b) return false;
        return *a == *b;
    };
    return same(left, other.left) && same(right, other.right);
}

ElementId id_of(const Element& e) {
    return std::visit(
        [](const auto& x) -> ElementId {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AntiVertex>)
                return x.id();
            else
                return x.id;
        },
        e);
}

const IdSet& tags_of(const Element& e) {
    if (const auto* hs = as_hypersimplex(e)) return hs->tags;
    return kNoTags;
}

Hypersimplex make_conflict(const Element& left, const Element& right) {
    Hypersimplex marker;
    marker.id = id_of(right);
    marker.agg = Aggregation::Alpha;
    marker.tags = tags_of(left);
    const auto& rtags = tags_of(right);
    marker.tags.insert(rtags.begin(), rtags.end());
    marker.conflict = ConflictMarker{std::make_shared<const Element>(left),
                                     std::make_shared<const Element>(right)};
    return marker;
}

RelationSignature resized_signature(const RelationSignature& sig, std::size_t arity) {
    RelationSignature out{sig.symbol, {}};
    const std::size_t keep = std::min(arity, sig.roles.size());
    out.roles.assign(sig.roles.begin(), sig.roles.begin() + static_cast<std::ptrdiff_t>(keep));
    auto taken = [&out](const std::string& name) {
        return std::find(out.roles.begin(), out.roles.end(), name) != out.roles.end();
    };
    for (std::size_t i = keep + 1; out.roles.size() < arity; ++i) {
        std::string name = "r" + std::to_string(i);
        for (int suffix = 2; taken(name); ++suffix)
            name = "r" + std::to_string(i) + "_" + std::to_string(suffix);
        out.roles.push_back(std::move(name));
    }
    return out;
}

} // namespace hnet
