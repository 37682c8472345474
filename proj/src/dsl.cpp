#include "nico/dsl.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <type_traits>

#include "nico/families.hpp"

namespace nico {

namespace {

const std::array<const char*, 10> kBuiltins = {
    "shift", "shiftset", "scaleset", "rep", "prod", "pow", "join", "adjoin", "omit", "family",
};

bool is_builtin(const std::string& name) {
    for (const char* b : kBuiltins)
        if (name == b) return true;
    return false;
}

bool is_reserved(const std::string& name) {
    return is_builtin(name) || name == "mod" || name == "sqrt";
}

ExprPtr make_node(ExprNode node, std::size_t at) {
    auto e = std::make_shared<Expr>();
    e->node = std::move(node);
    e->pos = at;
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& text) : src_(text) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ < src_.size()) fail("end of input");
        return e;
    }

    Selector run_selector() {
        skip_ws();
        Selector sel = parse_selector();
        skip_ws();
        if (pos_ < src_.size()) fail("end of input");
        return sel;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        long line = 1, column = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(pos_, line, column, expected);
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("'") + c + "'");
        ++pos_;
    }

    bool try_consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    long parse_int() {
        skip_ws();
        const char* begin = src_.data() + pos_;
        const char* end = src_.data() + src_.size();
        long value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::result_out_of_range) fail("an integer in range");
        if (ptr == begin) fail("an integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    long parse_posint() {
        skip_ws();
        std::size_t at = pos_;
        long v = parse_int();
        if (v < 1) {
            pos_ = at;
            fail("a positive integer");
        }
        return v;
    }

    std::string parse_name() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
            fail("a name");
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return src_.substr(start, pos_ - start);
    }

    void expect_dots() {
        if (peek() != '.') fail("'..'");
        ++pos_;
        if (pos_ >= src_.size() || src_[pos_] != '.') fail("'..'");
        ++pos_;
    }

    QuadSurd parse_scalar() {
        if (peek() == '(') {
            ++pos_;
            long p = parse_int();
            bool surd = false;
            long q = 0, d = 0;
            char c = peek();
            if (c == '+' || c == '-') {
                surd = true;
                if (c == '+') ++pos_;  // a '-' stays as the sign of q
                q = parse_int();
                expect('*');
                skip_ws();
                std::size_t at = pos_;
                if (parse_name() != "sqrt") {
                    pos_ = at;
                    fail("'sqrt'");
                }
                expect('(');
                skip_ws();
                std::size_t dat = pos_;
                d = parse_int();
                if (d < 1) {
                    pos_ = dat;
                    fail("a positive radicand");
                }
                expect(')');
            }
            expect(')');
            expect('/');
            long r = parse_posint();
            Rat a{Int(p), Int(r)};
            a.canonicalize();
            if (!surd) return QuadSurd(a);
            Rat b{Int(q), Int(r)};
            b.canonicalize();
            return QuadSurd::make(a, b, Int(d));
        }
        long p = parse_int();
        if (try_consume('/')) {
            long den = parse_posint();
            Rat v{Int(p), Int(den)};
            v.canonicalize();
            return QuadSurd(v);
        }
        return QuadSurd(p);
    }

    Selector parse_selector() {
        if (peek() == '{') {
            ++pos_;
            std::vector<std::size_t> idx;
            if (!try_consume('}')) {
                do {
                    skip_ws();
                    std::size_t at = pos_;
                    long v = parse_int();
                    if (v < 1) {
                        pos_ = at;
                        fail("a 1-based index");
                    }
                    idx.push_back(static_cast<std::size_t>(v));
                } while (try_consume(','));
                expect('}');
            }
            return Selector::indices(std::move(idx));
        }
        skip_ws();
        std::size_t at = pos_;
        if (parse_name() != "mod") {
            pos_ = at;
            fail("an index list or mod(m, r)");
        }
        expect('(');
        skip_ws();
        std::size_t mat = pos_;
        long m = parse_int();
        if (m < 1) {
            pos_ = mat;
            fail("a positive modulus");
        }
        expect(',');
        long r = parse_int();
        expect(')');
        return Selector::mod(m, r);
    }

    ExprPtr parse_expr() {
        char c = peek();
        if (c == '[') return parse_range();
        if (c == '{') return parse_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_call();
        fail("a sequence expression");
    }

    ExprPtr parse_range() {
        std::size_t at = pos_;
        expect('[');
        long lo = parse_int();
        expect_dots();
        long hi = parse_int();
        expect(']');
        return make_node(RangeNode{lo, hi}, at);
    }

    ExprPtr parse_literal() {
        std::size_t at = pos_;
        expect('{');
        std::vector<QuadSurd> values;
        if (!try_consume('}')) {
            do values.push_back(parse_scalar());
            while (try_consume(','));
            expect('}');
        }
        return make_node(LiteralNode{std::move(values)}, at);
    }

    ExprPtr parse_call() {
        skip_ws();
        std::size_t at = pos_;
        std::string name = parse_name();
        if (!is_builtin(name)) {
            pos_ = at;
            fail("a builtin name");
        }
        expect('(');
        ExprNode node;
        if (name == "shift") {
            ExprPtr base = parse_expr();
            expect(',');
            node = ShiftNode{std::move(base), parse_scalar()};
        } else if (name == "shiftset" || name == "scaleset") {
            ExprPtr base = parse_expr();
            expect(',');
            Selector sel = parse_selector();
            expect(',');
            QuadSurd v = parse_scalar();
            if (name == "shiftset")
                node = ShiftSetNode{std::move(base), std::move(sel), std::move(v)};
            else
                node = ScaleSetNode{std::move(base), std::move(sel), std::move(v)};
        } else if (name == "rep") {
            ExprPtr base = parse_expr();
            expect(',');
            node = RepNode{std::move(base), parse_int()};
        } else if (name == "prod" || name == "join") {
            ExprPtr lhs = parse_expr();
            expect(',');
            ExprPtr rhs = parse_expr();
            if (name == "prod")
                node = ProdNode{std::move(lhs), std::move(rhs)};
            else
                node = JoinNode{std::move(lhs), std::move(rhs)};
        } else if (name == "pow") {
            ExprPtr base = parse_expr();
            expect(',');
            node = PowNode{std::move(base), parse_int()};
        } else if (name == "adjoin") {
            ExprPtr base = parse_expr();
            std::vector<QuadSurd> values;
            expect(',');
            do values.push_back(parse_scalar());
            while (try_consume(','));
            node = AdjoinNode{std::move(base), std::move(values)};
        } else if (name == "omit") {
            ExprPtr base = parse_expr();
            expect(',');
            node = OmitNode{std::move(base), parse_scalar()};
        } else {  // family
            skip_ws();
            std::size_t nat = pos_;
            std::string fname = parse_name();
            if (is_reserved(fname)) {
                pos_ = nat;
                fail("a family name");
            }
            std::vector<long> params;
            while (try_consume(',')) params.push_back(parse_int());
            node = FamilyNode{std::move(fname), std::move(params)};
        }
        expect(')');
        return make_node(std::move(node), at);
    }
};

bool selector_equal(const Selector& a, const Selector& b) {
    if (a.is_mod() != b.is_mod()) return false;
    if (a.is_mod()) return a.modulus() == b.modulus() && a.residue() == b.residue();
    return a.index_list() == b.index_list();
}

std::string join_texts(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, long line, long column, std::string expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " +
                         expected),
      offset_(offset),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

EvalError::EvalError(std::size_t offset, const std::string& message)
    : std::runtime_error(message), offset_(offset) {}

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

Selector parse_selector_text(const std::string& text) {
    return Parser(text).run_selector();
}

Sequence eval(const ExprPtr& e) {
    if (!e) throw std::invalid_argument("eval of a null expression");
    return std::visit(
        [&](const auto& n) -> Sequence {
            using T = std::decay_t<decltype(n)>;
            try {
                if constexpr (std::is_same_v<T, RangeNode>) {
                    return Sequence::range(n.lo, n.hi);
                } else if constexpr (std::is_same_v<T, LiteralNode>) {
                    return Sequence(n.values);
                } else if constexpr (std::is_same_v<T, ShiftNode>) {
                    return translate(eval(n.base), n.t);
                } else if constexpr (std::is_same_v<T, ShiftSetNode>) {
                    return translate_subset(eval(n.base), n.sel, n.t);
                } else if constexpr (std::is_same_v<T, ScaleSetNode>) {
                    return scale_subset(eval(n.base), n.sel, n.x);
                } else if constexpr (std::is_same_v<T, RepNode>) {
                    return repeat_all(eval(n.base), n.u);
                } else if constexpr (std::is_same_v<T, ProdNode>) {
                    return bag_product(eval(n.lhs), eval(n.rhs));
                } else if constexpr (std::is_same_v<T, PowNode>) {
                    return bag_power(eval(n.base), n.k);
                } else if constexpr (std::is_same_v<T, JoinNode>) {
                    return join(eval(n.lhs), eval(n.rhs));
                } else if constexpr (std::is_same_v<T, AdjoinNode>) {
                    return adjoin(eval(n.base), n.values);
                } else if constexpr (std::is_same_v<T, FamilyNode>) {
                    return make_family_sequence(n.name, n.params);
                } else {
                    static_assert(std::is_same_v<T, OmitNode>);
                    return remove_one(eval(n.base), n.value);
                }
            } catch (const EvalError&) {
                throw;  // keep the innermost node's location
            } catch (const std::exception& ex) {
                throw EvalError(e->pos, ex.what());
            }
        },
        e->node);
}

std::string format(const ExprPtr& e) {
    if (!e) throw std::invalid_argument("format of a null expression");
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, RangeNode>) {
                return "[" + std::to_string(n.lo) + ".." + std::to_string(n.hi) + "]";
            } else if constexpr (std::is_same_v<T, LiteralNode>) {
                std::vector<std::string> parts;
                for (const auto& v : n.values) parts.push_back(v.str());
                return "{" + join_texts(parts) + "}";
            } else if constexpr (std::is_same_v<T, ShiftNode>) {
                return "shift(" + format(n.base) + ", " + n.t.str() + ")";
            } else if constexpr (std::is_same_v<T, ShiftSetNode>) {
                return "shiftset(" + format(n.base) + ", " + n.sel.str() + ", " + n.t.str() + ")";
            } else if constexpr (std::is_same_v<T, ScaleSetNode>) {
                return "scaleset(" + format(n.base) + ", " + n.sel.str() + ", " + n.x.str() + ")";
            } else if constexpr (std::is_same_v<T, RepNode>) {
                return "rep(" + format(n.base) + ", " + std::to_string(n.u) + ")";
            } else if constexpr (std::is_same_v<T, ProdNode>) {
                return "prod(" + format(n.lhs) + ", " + format(n.rhs) + ")";
            } else if constexpr (std::is_same_v<T, PowNode>) {
                return "pow(" + format(n.base) + ", " + std::to_string(n.k) + ")";
            } else if constexpr (std::is_same_v<T, JoinNode>) {
                return "join(" + format(n.lhs) + ", " + format(n.rhs) + ")";
            } else if constexpr (std::is_same_v<T, AdjoinNode>) {
                std::vector<std::string> parts;
                for (const auto& v : n.values) parts.push_back(v.str());
                return "adjoin(" + format(n.base) + ", " + join_texts(parts) + ")";
            } else if constexpr (std::is_same_v<T, FamilyNode>) {
                std::string out = "family(" + n.name;
                for (long p : n.params) out += ", " + std::to_string(p);
                return out + ")";
            } else {
                static_assert(std::is_same_v<T, OmitNode>);
                return "omit(" + format(n.base) + ", " + n.value.str() + ")";
            }
        },
        e->node);
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, RangeNode>) {
                return x.lo == y.lo && x.hi == y.hi;
            } else if constexpr (std::is_same_v<T, LiteralNode>) {
                return x.values == y.values;
            } else if constexpr (std::is_same_v<T, ShiftNode>) {
                return x.t == y.t && equal(x.base, y.base);
            } else if constexpr (std::is_same_v<T, ShiftSetNode>) {
                return x.t == y.t && selector_equal(x.sel, y.sel) && equal(x.base, y.base);
            } else if constexpr (std::is_same_v<T, ScaleSetNode>) {
                return x.x == y.x && selector_equal(x.sel, y.sel) && equal(x.base, y.base);
            } else if constexpr (std::is_same_v<T, RepNode>) {
                return x.u == y.u && equal(x.base, y.base);
            } else if constexpr (std::is_same_v<T, ProdNode>) {
                return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<T, PowNode>) {
                return x.k == y.k && equal(x.base, y.base);
            } else if constexpr (std::is_same_v<T, JoinNode>) {
                return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            } else if constexpr (std::is_same_v<T, AdjoinNode>) {
                return x.values == y.values && equal(x.base, y.base);
            } else if constexpr (std::is_same_v<T, FamilyNode>) {
                return x.name == y.name && x.params == y.params;
            } else {
                static_assert(std::is_same_v<T, OmitNode>);
                return x.value == y.value && equal(x.base, y.base);
            }
        },
        a->node);
}

}  // namespace nico
