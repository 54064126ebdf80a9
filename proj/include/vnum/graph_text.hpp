#pragma once

// Graph expressions:
//   path(7)  cycle(5)  join(G, H)  cliquesum(G, H)  cliquesum(G, H, v1, v2)
//   edges(6; 1-2, 2-3, 3-4, 2-5, 5-6)

#include <cctype>
#include <charconv>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/graph.hpp"

namespace vnum {

struct GraphExpr {
    enum class Kind { Path, Cycle, Join, CliqueSum, Edges };

    Kind kind = Kind::Edges;
    std::size_t size = 0;  // path/cycle/edges vertex count
    std::vector<GraphExpr> operands;
    Vertex glue_first = 1, glue_second = 1;
    std::vector<Edge> edges;
};

namespace detail {

class GraphParser {
public:
    explicit GraphParser(std::string_view text) : text_(text) {}

    GraphExpr parse() {
        GraphExpr e = expr();
        skip_ws();
        if (pos_ < text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but reached end", pos_);
        if (text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
        ++pos_;
    }

    std::size_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        std::size_t v{};
        auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc()) throw ParseError("integer out of range", start);
        return v;
    }

    GraphExpr expr() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view word = text_.substr(start, pos_ - start);
        if (word.empty()) {
            if (pos_ >= text_.size()) throw ParseError("expected graph expression but reached end", start);
            throw ParseError("expected graph expression but found '" + std::string(1, text_[pos_]) + "'", start);
        }
        GraphExpr e;
        if (word == "path" || word == "cycle") {
            e.kind = word == "path" ? GraphExpr::Kind::Path : GraphExpr::Kind::Cycle;
            expect('(');
            e.size = integer();
            expect(')');
        } else if (word == "join" || word == "cliquesum") {
            e.kind = word == "join" ? GraphExpr::Kind::Join : GraphExpr::Kind::CliqueSum;
            expect('(');
            e.operands.push_back(expr());
            expect(',');
            e.operands.push_back(expr());
            if (e.kind == GraphExpr::Kind::CliqueSum && peek(',')) {
                expect(',');
                e.glue_first = integer();
                expect(',');
                e.glue_second = integer();
            }
            expect(')');
        } else if (word == "edges") {
            e.kind = GraphExpr::Kind::Edges;
            expect('(');
            e.size = integer();
            expect(';');
            if (!peek(')')) {
                while (true) {
                    const Vertex a = integer();
                    expect('-');
                    e.edges.emplace_back(a, integer());
                    if (!peek(',')) break;
                    expect(',');
                }
            }
            expect(')');
        } else {
            throw ParseError("unknown graph constructor '" + std::string(word) + "'", start);
        }
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline GraphExpr parse_graph_expr(std::string_view text) { return detail::GraphParser(text).parse(); }

inline Graph build_graph(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::Path: return path(e.size);
        case GraphExpr::Kind::Cycle: return cycle(e.size);
        case GraphExpr::Kind::Join: return join(build_graph(e.operands[0]), build_graph(e.operands[1]));
        case GraphExpr::Kind::CliqueSum:
            return clique_sum_1(build_graph(e.operands[0]), build_graph(e.operands[1]), e.glue_first, e.glue_second);
        case GraphExpr::Kind::Edges: return Graph::from_edges(e.size, e.edges);
    }
    throw std::logic_error("unhandled graph expression");
}

inline Graph parse_graph(std::string_view text) { return build_graph(parse_graph_expr(text)); }

}  // namespace vnum
