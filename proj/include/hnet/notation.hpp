#ifndef HNET_NOTATION_HPP
#define HNET_NOTATION_HPP

// Textual `.hn` format. One statement per line; `#` starts a comment.
//
//   boundary <id> [percolating]
//   vertex <id>
//   anti <id>
//   relation <symbol>(<role>, ...)
//   alpha <id> = <<p>, ... ; <symbol>> [@ <boundary>, ...]
//   beta <id> = {<p>, ... ; <symbol>} [@ <boundary>, ...]
//   conflict <id> = [<snapshot>] | [<snapshot>] [@ <boundary>, ...]
//
// Participants are plain ids or `~id` anti-vertex references. A snapshot is a
// vertex, anti, alpha, beta or conflict statement; hypersimplex snapshots may
// spell their signature inline as `<symbol>(<role>, ...)`.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hnet/axioms.hpp"
#include "hnet/core.hpp"
#include "hnet/hypernetwork.hpp"

namespace hnet {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, std::string expected, std::string found);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    int line_;
    int column_;
    std::string expected_;
    std::string found_;
};

struct SourcePos {
    int line = 1;
    int column = 1;
};

struct BoundaryDecl {
    Boundary boundary;
};

struct VertexDecl {
    ElementId id;
};

struct AntiDecl {
    ElementId excludes;
};

struct RelationDecl {
    RelationSignature signature;
};

struct HypersimplexDecl {
    ElementId id;
    Aggregation agg = Aggregation::Alpha;
    std::vector<ElementId> participants;
    std::string symbol;
    std::optional<std::vector<std::string>> inline_roles;
    IdSet tags;
};

struct ConflictDecl {
    ElementId id;
    Element left;
    Element right;
    IdSet tags;
};

using Statement =
    std::variant<BoundaryDecl, VertexDecl, AntiDecl, RelationDecl, HypersimplexDecl, ConflictDecl>;

struct SourceStatement {
    Statement statement;
    SourcePos pos;
};

struct SourceDocument {
    std::vector<SourceStatement> statements;
};

// Parses `.hn` text; throws ParseError at the first malformed token.
SourceDocument parse(std::string_view text);

struct BuildResult {
    Hypernetwork network;
    // SameName conflicts and rejected declarations met while building, followed
    // by the validation of the final hypernetwork.
    ValidationReport report;
};

// Folds insert over the statements in document order.
BuildResult build(const SourceDocument& doc);

// parse + build.
BuildResult load(std::string_view text);

// Deterministic rendering: boundaries by id, then elements by id. Alpha
// participant order is kept; beta participants and tags are sorted. Relation
// declarations are emitted just before the first hypersimplex that needs them.
std::string canonical(const Hypernetwork& h);

// As canonical() but in insertion order, with boundaries first.
std::string pretty(const Hypernetwork& h);

// One-line rendering of an element with its signature spelled inline.
std::string render_element(const Element& e);

} // namespace hnet

#endif // HNET_NOTATION_HPP
