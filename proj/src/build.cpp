#include <map>

#include "hnet/algebra.hpp"
#include "hnet/notation.hpp"

namespace hnet {

namespace {

class Builder {
public:
    BuildResult run(const SourceDocument& doc) {
        for (const auto& s : doc.statements)
            std::visit([this](const auto& d) { apply(d); }, s.statement);
        report_.append(validate(h_));
        return {std::move(h_), std::move(report_)};
    }

private:
    void apply(const BoundaryDecl& d) {
        if (h_.boundaries().add(d.boundary)) return;
        if (h_.boundaries().find(d.boundary.id)->percolating != d.boundary.percolating)
            report_.add(Rule::A1, d.boundary.id, "boundary redeclared with a different percolation flag");
    }

    void apply(const VertexDecl& d) { record(d.id, insert_into(h_, Vertex{d.id})); }

    void apply(const AntiDecl& d) {
        AntiVertex anti{d.excludes};
        record(anti.id(), insert_into(h_, anti));
    }

    void apply(const RelationDecl& d) { relations_[d.signature.symbol] = d.signature; }

    void apply(const HypersimplexDecl& d) {
        Hypersimplex hs{d.id, d.agg, signature_for(d), d.participants, d.tags, std::nullopt};
        record(d.id, insert_into(h_, hs));
    }

    void apply(const ConflictDecl& d) {
        Hypersimplex hs;
        hs.id = d.id;
        hs.tags = d.tags;
        hs.conflict = ConflictMarker{std::make_shared<const Element>(d.left),
                                     std::make_shared<const Element>(d.right)};
        record(d.id, insert_into(h_, hs));
    }

    // Inline roles win, then the latest declaration (resized for beta), then
    // an anonymous signature sized to the participant list.
    RelationSignature signature_for(const HypersimplexDecl& d) const {
        const std::size_t n = d.participants.size();
        if (d.inline_roles) return {d.symbol, *d.inline_roles};
        auto it = relations_.find(d.symbol);
        if (it == relations_.end()) return RelationSignature::anonymous(d.symbol, n);
        if (d.agg == Aggregation::Beta && it->second.arity() != n) return resized_signature(it->second, n);
        return it->second;
    }

    void record(const ElementId& id, const InsertStep& step) {
        if (step.outcome != InsertOutcome::Conflict && step.outcome != InsertOutcome::Rejected) return;
        report_.add(step.rule.value_or(Rule::A1), id, step.detail);
    }

    Hypernetwork h_;
    ValidationReport report_;
    std::map<std::string, RelationSignature> relations_;
};

} // namespace

BuildResult build(const SourceDocument& doc) { return Builder{}.run(doc); }

BuildResult load(std::string_view text) { return build(parse(text)); }

} // namespace hnet
