#include <cctype>

#include "hnet/notation.hpp"

namespace hnet {

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " +
                         expected + ", found " + found),
      line_(line), column_(column), expected_(std::move(expected)), found_(std::move(found)) {}

namespace {

enum class Tok { Ident, AntiIdent, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End: return "end of line";
    case Tok::Punct: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
    }
}

// Tokenizes one line; comments run from '#' to end of line.
std::vector<Token> lex_line(std::string_view line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto col = [&i] { return static_cast<int>(i) + 1; };
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (ident_char(c) || c == '~') {
            const int start = col();
            std::size_t j = i + (c == '~' ? 1 : 0);
            while (j < line.size() && ident_char(line[j])) ++j;
            std::string text(line.substr(i, j - i));
            if (text == "~")
                throw ParseError(lineno, start, "identifier after '~'",
                                 j < line.size() ? "'" + std::string(1, line[j]) + "'" : "end of line");
            out.push_back({c == '~' ? Tok::AntiIdent : Tok::Ident, std::move(text), lineno, start});
            i = j;
            continue;
        }
        static constexpr std::string_view punct = "=<>{}(),;@[]|";
        if (punct.find(c) == std::string_view::npos)
            throw ParseError(lineno, col(), "token", "'" + std::string(1, c) + "'");
        out.push_back({Tok::Punct, std::string(1, c), lineno, col()});
        ++i;
    }
    out.push_back({Tok::End, {}, lineno, static_cast<int>(line.size()) + 1});
    return out;
}

class LineParser {
public:
    explicit LineParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    SourceStatement statement() {
        const Token& head = peek();
        SourceStatement out{top_level(), {head.line, head.column}};
        expect_end();
        return out;
    }

private:
    Statement top_level() {
        const Token& head = peek();
        if (head.kind != Tok::Ident)
            throw ParseError(head.line, head.column, "statement keyword", describe(head));
        if (head.text == "boundary") {
            next();
            BoundaryDecl d{{ident("boundary identifier"), false}};
            if (peek().kind == Tok::Ident && peek().text == "percolating") {
                next();
                d.boundary.percolating = true;
            }
            return d;
        }
        if (head.text == "relation") {
            next();
            RelationDecl d;
            d.signature.symbol = ident("relation symbol").str();
            d.signature.roles = role_list();
            return d;
        }
        return element_statement();
    }

    // Statements that may also appear as conflict snapshots.
    Statement element_statement() {
        const Token head = peek();
        if (head.kind == Tok::Ident) {
            if (head.text == "vertex") {
                next();
                return VertexDecl{ident("vertex identifier")};
            }
            if (head.text == "anti") {
                next();
                return AntiDecl{ident("excluded vertex identifier")};
            }
            if (head.text == "alpha" || head.text == "beta") return hypersimplex();
            if (head.text == "conflict") return conflict();
        }
        throw ParseError(head.line, head.column,
                         "'boundary', 'vertex', 'anti', 'relation', 'alpha', 'beta' or 'conflict'",
                         describe(head));
    }

    HypersimplexDecl hypersimplex() {
        HypersimplexDecl d;
        const bool alpha = next().text == "alpha";
        d.agg = alpha ? Aggregation::Alpha : Aggregation::Beta;
        d.id = ident("hypersimplex identifier");
        expect("=");
        expect(alpha ? "<" : "{");
        d.participants.push_back(participant());
        while (accept(",")) d.participants.push_back(participant());
        expect(";");
        d.symbol = ident("relation symbol").str();
        if (peek().kind == Tok::Punct && peek().text == "(") d.inline_roles = role_list();
        expect(alpha ? ">" : "}");
        d.tags = tag_list();
        return d;
    }

    ConflictDecl conflict() {
        next();
        ElementId id = ident("conflict identifier");
        expect("=");
        Element left = snapshot();
        expect("|");
        Element right = snapshot();
        return ConflictDecl{std::move(id), std::move(left), std::move(right), tag_list()};
    }

    Element snapshot() {
        expect("[");
        Statement s = element_statement();
        expect("]");
        return std::visit(
            [](auto&& d) -> Element {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, VertexDecl>)
                    return Vertex{d.id};
                else if constexpr (std::is_same_v<T, AntiDecl>)
                    return AntiVertex{d.excludes};
                else if constexpr (std::is_same_v<T, HypersimplexDecl>)
                    return snapshot_hypersimplex(d);
                else if constexpr (std::is_same_v<T, ConflictDecl>)
                    return snapshot_conflict(d);
                else
                    return Vertex{};  // unreachable: element_statement never yields these
            },
            std::move(s));
    }

    static Hypersimplex snapshot_hypersimplex(const HypersimplexDecl& d) {
        Hypersimplex hs{d.id, d.agg, {}, d.participants, d.tags, std::nullopt};
        hs.relation = d.inline_roles ? RelationSignature{d.symbol, *d.inline_roles}
                                     : RelationSignature::anonymous(d.symbol, d.participants.size());
        return hs;
    }

    static Hypersimplex snapshot_conflict(const ConflictDecl& d) {
        Hypersimplex hs;
        hs.id = d.id;
        hs.tags = d.tags;
        hs.conflict = ConflictMarker{std::make_shared<const Element>(d.left),
                                     std::make_shared<const Element>(d.right)};
        return hs;
    }

    std::vector<std::string> role_list() {
        expect("(");
        std::vector<std::string> roles{ident("role name").str()};
        while (accept(",")) roles.push_back(ident("role name").str());
        expect(")");
        return roles;
    }

    IdSet tag_list() {
        IdSet tags;
        if (!accept("@")) return tags;
        tags.insert(ident("boundary identifier"));
        while (accept(",")) tags.insert(ident("boundary identifier"));
        return tags;
    }

    ElementId participant() {
        const Token& t = peek();
        if (t.kind != Tok::Ident && t.kind != Tok::AntiIdent)
            throw ParseError(t.line, t.column, "participant identifier", describe(t));
        return ElementId(next().text);
    }

    ElementId ident(const char* what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident) throw ParseError(t.line, t.column, what, describe(t));
        return ElementId(next().text);
    }

    bool accept(std::string_view p) {
        if (peek().kind != Tok::Punct || peek().text != p) return false;
        next();
        return true;
    }

    void expect(std::string_view p) {
        if (!accept(p)) {
            const Token& t = peek();
            throw ParseError(t.line, t.column, "'" + std::string(p) + "'", describe(t));
        }
    }

    void expect_end() {
        const Token& t = peek();
        if (t.kind != Tok::End) throw ParseError(t.line, t.column, "end of line", describe(t));
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

SourceDocument parse(std::string_view text) {
    SourceDocument doc;
    int lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        auto toks = lex_line(line, lineno);
        if (toks.size() == 1) continue;  // blank or comment-only
        doc.statements.push_back(LineParser(std::move(toks)).statement());
    }
    return doc;
}

} // namespace hnet
