#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nico/sequence.hpp"
#include "nico/surd.hpp"

namespace nico {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct RangeNode {
    long lo = 0, hi = 0;
};
struct LiteralNode {
    std::vector<QuadSurd> values;
};
struct ShiftNode {
    ExprPtr base;
    QuadSurd t;
};
struct ShiftSetNode {
    ExprPtr base;
    Selector sel;
    QuadSurd t;
};
struct ScaleSetNode {
    ExprPtr base;
    Selector sel;
    QuadSurd x;
};
struct RepNode {
    ExprPtr base;
    long u = 0;
};
struct ProdNode {
    ExprPtr lhs, rhs;
};
struct PowNode {
    ExprPtr base;
    long k = 0;
};
struct JoinNode {
    ExprPtr lhs, rhs;
};
struct AdjoinNode {
    ExprPtr base;
    std::vector<QuadSurd> values;
};
struct FamilyNode {
    std::string name;
    std::vector<long> params;
};
struct OmitNode {
    ExprPtr base;
    QuadSurd value;
};

using ExprNode = std::variant<RangeNode, LiteralNode, ShiftNode, ShiftSetNode, ScaleSetNode,
                              RepNode, ProdNode, PowNode, JoinNode, AdjoinNode, FamilyNode,
                              OmitNode>;

struct Expr {
    ExprNode node;
    std::size_t pos = 0;  // byte offset into the source text
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, long line, long column, std::string expected);
    std::size_t offset() const { return offset_; }
    long line() const { return line_; }
    long column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    long line_;
    long column_;
    std::string expected_;
};

/// Domain failure during evaluation, carrying the offending node's offset.
class EvalError : public std::runtime_error {
public:
    EvalError(std::size_t offset, const std::string& message);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar:
///   expr     := range | literal | call
///   range    := "[" int ".." int "]"
///   literal  := "{" [scalar {"," scalar}] "}"
///   call     := name "(" [arg {"," arg}] ")"
///   selector := literal | "mod" "(" int "," int ")"
///   scalar   := int ["/" posint] | "(" int ["+" int "*" "sqrt" "(" int ")"] ")" "/" posint
///   name     := shift | shiftset | scaleset | rep | prod | pow | join | adjoin | omit | family
/// Whitespace-insensitive; "#" comments run to end of line.
ExprPtr parse(const std::string& text);

/// Parse a standalone selector: "{1,3}" (1-based positions) or "mod(m, r)".
Selector parse_selector_text(const std::string& text);

Sequence eval(const ExprPtr& e);

/// Canonical text; parse(format(e)) is structurally equal to e.
std::string format(const ExprPtr& e);

/// Structural equality, ignoring source positions.
bool equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace nico
