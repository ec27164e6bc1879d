#include "frobext/functor_expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace frobext {

FunctorExpr FunctorExpr::make(Node n) {
    return FunctorExpr(std::make_shared<const Node>(std::move(n)));
}

FunctorExpr FunctorExpr::identity() {
    Node n;
    n.kind = Kind::Identity;
    return make(std::move(n));
}

FunctorExpr FunctorExpr::divided(int a) {
    if (a < 1) throw std::invalid_argument("power must be >= 1");
    Node n;
    n.kind = Kind::Divided;
    n.power = a;
    return make(std::move(n));
}

FunctorExpr FunctorExpr::sym(int a) {
    if (a < 1) throw std::invalid_argument("power must be >= 1");
    Node n;
    n.kind = Kind::Sym;
    n.power = a;
    return make(std::move(n));
}

FunctorExpr FunctorExpr::exterior(int a) {
    if (a < 1) throw std::invalid_argument("power must be >= 1");
    Node n;
    n.kind = Kind::Exterior;
    n.power = a;
    return make(std::move(n));
}

FunctorExpr FunctorExpr::schur(Partition lambda) {
    Node n;
    n.kind = Kind::Schur;
    n.diagram = std::move(lambda);
    return make(std::move(n));
}

FunctorExpr FunctorExpr::weyl(Partition mu) {
    Node n;
    n.kind = Kind::Weyl;
    n.diagram = std::move(mu);
    return make(std::move(n));
}

FunctorExpr FunctorExpr::tensor(std::vector<FunctorExpr> children) {
    if (children.empty())
        throw std::invalid_argument("tensor needs at least one factor");
    if (children.size() == 1) return children[0];
    Node n;
    n.kind = Kind::Tensor;
    n.children = std::move(children);
    return make(std::move(n));
}

FunctorExpr FunctorExpr::divided_product(const Partition& lambda) {
    if (lambda.empty()) return schur(Partition());
    std::vector<FunctorExpr> parts;
    for (int a : lambda.parts()) parts.push_back(divided(a));
    return tensor(std::move(parts));
}

FunctorExpr FunctorExpr::twist(FunctorExpr child, int i) {
    if (i < 0) throw std::invalid_argument("twist level must be >= 0");
    Node n;
    n.kind = Kind::Twist;
    n.children = {std::move(child)};
    n.twist = i;
    return make(std::move(n));
}

FunctorExpr FunctorExpr::param(FunctorExpr child, GradedSpace space) {
    Node n;
    n.kind = Kind::Param;
    n.children = {std::move(child)};
    n.space = std::move(space);
    return make(std::move(n));
}

FunctorExpr FunctorExpr::precompose(FunctorExpr child, FunctorExpr a) {
    Node n;
    n.kind = Kind::Precompose;
    n.children = {std::move(child), std::move(a)};
    return make(std::move(n));
}

FunctorExpr FunctorExpr::kan_right(FunctorExpr child, FunctorExpr a) {
    Node n;
    n.kind = Kind::KanRight;
    n.children = {std::move(child), std::move(a)};
    return make(std::move(n));
}

FunctorExpr FunctorExpr::kan_left(FunctorExpr child, FunctorExpr a) {
    Node n;
    n.kind = Kind::KanLeft;
    n.children = {std::move(child), std::move(a)};
    return make(std::move(n));
}

FunctorExpr FunctorExpr::dual(FunctorExpr child) {
    Node n;
    n.kind = Kind::Dual;
    n.children = {std::move(child)};
    return make(std::move(n));
}

FunctorExpr FunctorExpr::shift(FunctorExpr child, ShiftSpec s) {
    Node n;
    n.kind = Kind::Shift;
    n.children = {std::move(child)};
    n.shift = std::move(s);
    return make(std::move(n));
}

FunctorExpr FunctorExpr::ext_query(FunctorExpr left, FunctorExpr right) {
    Node n;
    n.kind = Kind::ExtQuery;
    n.children = {std::move(left), std::move(right)};
    return make(std::move(n));
}

FunctorExpr FunctorExpr::sym_tensor_ext(FunctorExpr child, int i) {
    if (i < 1) throw std::invalid_argument("twist level must be >= 1");
    Node n;
    n.kind = Kind::SymTensorExt;
    n.children = {std::move(child)};
    n.twist = i;
    return make(std::move(n));
}

FunctorExpr FunctorExpr::with_child(size_t n, FunctorExpr c) const {
    Node copy = *node_;
    copy.children.at(n) = std::move(c);
    return make(std::move(copy));
}

Int FunctorExpr::degree(int p) const {
    switch (kind()) {
        case Kind::Identity: return 1;
        case Kind::Divided:
        case Kind::Sym:
        case Kind::Exterior: return power();
        case Kind::Schur:
        case Kind::Weyl: return diagram().weight();
        case Kind::Tensor: {
            Int d = 0;
            for (auto& c : children()) d = checked_add(d, c.degree(p));
            return d;
        }
        case Kind::Twist:
            return checked_mul(child().degree(p), ipow(p, twist_level()));
        case Kind::Param:
        case Kind::Dual:
        case Kind::Shift: return child().degree(p);
        case Kind::Precompose:
            return checked_mul(child(0).degree(p), child(1).degree(p));
        case Kind::KanRight:
        case Kind::KanLeft: {
            Int num = child(0).degree(p);
            Int den = child(1).degree(p);
            if (den == 0 || num % den != 0)
                throw std::invalid_argument(
                    "Kan extension with non-divisible degree: " +
                    std::to_string(num) + " by " + std::to_string(den));
            return num / den;
        }
        case Kind::ExtQuery: {
            Int l = child(0).degree(p);
            Int r = child(1).degree(p);
            if (l != r)
                throw std::invalid_argument(
                    "Ext query between functors of different degree: " +
                    std::to_string(l) + " vs " + std::to_string(r));
            return 0;  // a query denotes a graded space, not a functor
        }
        case Kind::SymTensorExt: {
            Int num = child().degree(p);
            Int den = ipow(p, twist_level());
            if (num % den != 0)
                throw std::invalid_argument("SymTensorExt with non-divisible degree");
            return num / den;
        }
    }
    throw std::logic_error("unreachable");
}

bool FunctorExpr::operator==(const FunctorExpr& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case Kind::Identity: return true;
        case Kind::Divided:
        case Kind::Sym:
        case Kind::Exterior: return power() == o.power();
        case Kind::Schur:
        case Kind::Weyl: return diagram() == o.diagram();
        case Kind::Twist:
        case Kind::SymTensorExt:
            if (twist_level() != o.twist_level()) return false;
            break;
        case Kind::Param:
            if (!(space() == o.space())) return false;
            break;
        case Kind::Shift:
            if (shift_spec() != o.shift_spec()) return false;
            break;
        default: break;
    }
    if (children().size() != o.children().size()) return false;
    for (size_t n = 0; n < children().size(); ++n)
        if (children()[n] != o.children()[n]) return false;
    return true;
}

std::optional<Partition> FunctorExpr::as_schur_diagram() const {
    switch (kind()) {
        case Kind::Identity: return Partition{1};
        case Kind::Sym: return Partition{power()};
        case Kind::Exterior:
            return Partition(std::vector<int>(power(), 1));
        case Kind::Schur: return diagram();
        default: return std::nullopt;
    }
}

namespace {

std::string diagram_token(const Partition& p) { return "[" + (p.empty() ? "" : p.to_string()) + "]"; }

}  // namespace

std::string FunctorExpr::to_string() const {
    std::ostringstream os;
    switch (kind()) {
        case Kind::Identity: return "I";
        case Kind::Divided: os << "D^" << power(); break;
        case Kind::Sym: os << "S^" << power(); break;
        case Kind::Exterior: os << "L^" << power(); break;
        case Kind::Schur: os << "Schur" << diagram_token(diagram()); break;
        case Kind::Weyl: os << "Weyl" << diagram_token(diagram()); break;
        case Kind::Tensor: {
            os << "Tensor(";
            for (size_t n = 0; n < children().size(); ++n) {
                if (n) os << ",";
                os << children()[n].to_string();
            }
            os << ")";
            break;
        }
        case Kind::Twist:
            os << "Twist(" << child().to_string() << "," << twist_level() << ")";
            break;
        case Kind::Param:
            os << "Param(" << child().to_string() << "," << space().label << ")";
            break;
        case Kind::Precompose:
            os << "Precompose(" << child(0).to_string() << "," << child(1).to_string() << ")";
            break;
        case Kind::KanRight:
            os << "KanRight(" << child(0).to_string() << "," << child(1).to_string() << ")";
            break;
        case Kind::KanLeft:
            os << "KanLeft(" << child(0).to_string() << "," << child(1).to_string() << ")";
            break;
        case Kind::Dual: os << "Dual(" << child().to_string() << ")"; break;
        case Kind::Shift:
            os << "Shift(" << child().to_string() << "," << shift_spec().to_string() << ")";
            break;
        case Kind::ExtQuery:
            os << "Ext(" << child(0).to_string() << "," << child(1).to_string() << ")";
            break;
        case Kind::SymTensorExt:
            os << "SymTensorExt(" << child().to_string() << "," << twist_level() << ")";
            break;
    }
    return os.str();
}

// ----------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
    std::string text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos) +
                                        " in '" + text + "'");
        ++pos;
    }

    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos)
            throw std::invalid_argument("expected identifier at position " +
                                        std::to_string(start) + " in '" + text + "'");
        return text.substr(start, pos - start);
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("expected integer at position " +
                                        std::to_string(start) + " in '" + text + "'");
        return std::stoi(text.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lex;
    int p;

    int power_suffix() {
        if (lex.accept('^')) return lex.integer();
        lex.expect('[');
        int a = lex.integer();
        lex.expect(']');
        return a;
    }

    Partition partition_list() {
        lex.expect('[');
        std::vector<int> parts;
        if (!lex.accept(']')) {
            parts.push_back(lex.integer());
            while (lex.accept(',')) parts.push_back(lex.integer());
            lex.expect(']');
        }
        return Partition(std::move(parts));
    }

    GradedSpace space_token(const std::string& name) {
        // A_<j> or S_<j>, optionally followed by ^(<i>)
        size_t underscore = name.find('_');
        if (underscore == std::string::npos || underscore + 1 >= name.size())
            throw std::invalid_argument("unknown space token '" + name + "'");
        std::string base = name.substr(0, underscore);
        int j = std::stoi(name.substr(underscore + 1));
        GradedSpace u;
        if (base == "A") {
            u = a_space(p, j);
            u.label = "A_" + std::to_string(j);
        } else if (base == "S") {
            u = s_space(p, j);
            u.label = "S_" + std::to_string(j);
        } else {
            throw std::invalid_argument("unknown space token '" + name + "'");
        }
        if (lex.accept('^')) {
            lex.expect('(');
            int i = lex.integer();
            lex.expect(')');
            u = twist_grading(u, p, i);
        }
        return u;
    }

    ShiftSpec shift_value() {
        if (lex.peek() == 'h') {
            std::string name = lex.ident();
            if (name != "h")
                throw std::invalid_argument("unknown shift token '" + name + "'");
            lex.expect('(');
            int i = lex.integer();
            lex.expect(',');
            int k = lex.integer();
            lex.expect(')');
            return ShiftSpec::symbol(i, k);
        }
        return ShiftSpec::value(lex.integer());
    }

    FunctorExpr expr() {
        std::string name = lex.ident();
        if (name == "I") return FunctorExpr::identity();
        if (name == "D") return FunctorExpr::divided(power_suffix());
        if (name == "S") return FunctorExpr::sym(power_suffix());
        if (name == "L" || name == "Lambda")
            return FunctorExpr::exterior(power_suffix());
        if (name == "Schur") return FunctorExpr::schur(partition_list());
        if (name == "Weyl") return FunctorExpr::weyl(partition_list());
        if (name == "Tensor") {
            lex.expect('(');
            std::vector<FunctorExpr> children;
            children.push_back(expr());
            while (lex.accept(',')) children.push_back(expr());
            lex.expect(')');
            return FunctorExpr::tensor(std::move(children));
        }
        if (name == "Twist") {
            lex.expect('(');
            FunctorExpr c = expr();
            lex.expect(',');
            int i = lex.integer();
            lex.expect(')');
            return FunctorExpr::twist(std::move(c), i);
        }
        if (name == "Param") {
            lex.expect('(');
            FunctorExpr c = expr();
            lex.expect(',');
            GradedSpace u = space_token(lex.ident());
            lex.expect(')');
            return FunctorExpr::param(std::move(c), std::move(u));
        }
        if (name == "Precompose" || name == "KanRight" || name == "KanLeft") {
            lex.expect('(');
            FunctorExpr c = expr();
            lex.expect(',');
            FunctorExpr a = expr();
            lex.expect(')');
            if (name == "Precompose") return FunctorExpr::precompose(std::move(c), std::move(a));
            if (name == "KanRight") return FunctorExpr::kan_right(std::move(c), std::move(a));
            return FunctorExpr::kan_left(std::move(c), std::move(a));
        }
        if (name == "Dual") {
            lex.expect('(');
            FunctorExpr c = expr();
            lex.expect(')');
            return FunctorExpr::dual(std::move(c));
        }
        if (name == "Shift") {
            lex.expect('(');
            FunctorExpr c = expr();
            lex.expect(',');
            ShiftSpec s = shift_value();
            lex.expect(')');
            return FunctorExpr::shift(std::move(c), std::move(s));
        }
        if (name == "Ext") {
            lex.expect('(');
            FunctorExpr l = expr();
            lex.expect(',');
            FunctorExpr r = expr();
            lex.expect(')');
            return FunctorExpr::ext_query(std::move(l), std::move(r));
        }
        throw std::invalid_argument("unknown functor token '" + name + "'");
    }
};

}  // namespace

FunctorExpr FunctorExpr::parse(const std::string& text, int p) {
    Parser parser{Lexer{text, 0}, p};
    FunctorExpr e = parser.expr();
    if (!parser.lex.eof())
        throw std::invalid_argument("trailing input after expression in '" + text + "'");
    return e;
}

}  // namespace frobext
