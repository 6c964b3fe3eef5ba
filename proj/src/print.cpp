#include <algorithm>
#include <map>
#include <sstream>

#include "hnet/notation.hpp"

namespace hnet {

namespace {

void join(std::ostream& os, const std::vector<std::string>& items) {
    for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << items[i];
}

std::vector<std::string> participant_names(const Hypersimplex& hs, bool sort_beta) {
    std::vector<std::string> names;
    for (const auto& p : hs.participants) names.push_back(p.str());
    if (sort_beta && hs.agg == Aggregation::Beta) std::sort(names.begin(), names.end());
    return names;
}

void write_tags(std::ostream& os, const IdSet& tags) {
    if (tags.empty()) return;
    std::vector<std::string> names;
    for (const auto& t : tags) names.push_back(t.str());
    os << " @ ";
    join(os, names);
}

void write_signature(std::ostream& os, const RelationSignature& sig) {
    os << sig.symbol << '(';
    join(os, sig.roles);
    os << ')';
}

// `inline_sig` spells the signature after the symbol; snapshots always do.
void write_element(std::ostream& os, const Element& e, bool inline_sig) {
    if (const auto* v = std::get_if<Vertex>(&e)) {
        os << "vertex " << v->id;
        return;
    }
    if (const auto* a = std::get_if<AntiVertex>(&e)) {
        os << "anti " << a->excludes;
        return;
    }
    const auto& hs = std::get<Hypersimplex>(e);
    if (hs.is_conflict()) {
        os << "conflict " << hs.id << " = [";
        if (hs.conflict->left) write_element(os, *hs.conflict->left, true);
        os << "] | [";
        if (hs.conflict->right) write_element(os, *hs.conflict->right, true);
        os << ']';
        write_tags(os, hs.tags);
        return;
    }
    const bool alpha = hs.agg == Aggregation::Alpha;
    os << to_string(hs.agg) << ' ' << hs.id << " = " << (alpha ? '<' : '{');
    join(os, participant_names(hs, true));
    os << " ; ";
    if (inline_sig)
        write_signature(os, hs.relation);
    else
        os << hs.relation.symbol;
    os << (alpha ? '>' : '}');
    write_tags(os, hs.tags);
}

// Emits relation declarations only where the builder would otherwise infer a
// different signature.
class SignatureTracker {
public:
    void before(std::ostream& os, const Element& e) {
        const auto* hs = as_hypersimplex(e);
        if (!hs || hs->is_conflict()) return;
        const std::size_t n = hs->participants.size();
        RelationSignature inferred;
        auto it = declared_.find(hs->relation.symbol);
        if (it == declared_.end())
            inferred = RelationSignature::anonymous(hs->relation.symbol, n);
        else if (hs->agg == Aggregation::Beta && it->second.arity() != n)
            inferred = resized_signature(it->second, n);
        else
            inferred = it->second;
        if (inferred == hs->relation) return;
        os << "relation ";
        write_signature(os, hs->relation);
        os << '\n';
        declared_[hs->relation.symbol] = hs->relation;
    }

private:
    std::map<std::string, RelationSignature> declared_;
};

std::string render(const Hypernetwork& h, const std::vector<const Element*>& order) {
    std::ostringstream os;
    for (const auto& [id, b] : h.boundaries()) os << "boundary " << id << (b.percolating ? " percolating" : "") << '\n';
    SignatureTracker sigs;
    for (const Element* e : order) {
        sigs.before(os, *e);
        write_element(os, *e, false);
        os << '\n';
    }
    return os.str();
}

} // namespace

std::string canonical(const Hypernetwork& h) {
    std::vector<const Element*> order;
    for (const auto& e : h.elements()) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(),
                     [](const Element* a, const Element* b) { return id_of(*a) < id_of(*b); });
    return render(h, order);
}

std::string pretty(const Hypernetwork& h) {
    std::vector<const Element*> order;
    for (const auto& e : h.elements()) order.push_back(&e);
    return render(h, order);
}

std::string render_element(const Element& e) {
    std::ostringstream os;
    write_element(os, e, true);
    return os.str();
}

} // namespace hnet
