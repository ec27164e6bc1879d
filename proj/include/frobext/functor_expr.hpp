#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobext/graded.hpp"
#include "frobext/partition.hpp"

namespace frobext {

/// Thrown when an evaluation is requested outside the supported functor
/// families. Callers can distinguish this from malformed input.
class unsupported_functor : public std::runtime_error {
public:
    explicit unsupported_functor(const std::string& what)
        : std::runtime_error(what) {}
};

/// Expression tree over functor combinators. Immutable; cheap to copy.
class FunctorExpr {
public:
    enum class Kind {
        Identity,     // I
        Divided,      // D^a
        Sym,          // S^a
        Exterior,     // L^a
        Schur,        // Schur[lambda]
        Weyl,         // Weyl[mu]
        Tensor,       // children
        Twist,        // child composed with the i-th Frobenius twist
        Param,        // child parameterized by a graded space
        Precompose,   // C_A(child)
        KanRight,     // right Kan extension of child along A
        KanLeft,      // left Kan extension of child along A
        Dual,         // Kuhn dual
        Shift,        // grading shift of child
        ExtQuery,     // Ext^*(left, right)
        SymTensorExt  // I^d (x)_{Sigma_d} Ext^*(I^{d(i)}, child), kept symbolic
    };

    FunctorExpr() : FunctorExpr(identity()) {}

    static FunctorExpr identity();
    static FunctorExpr divided(int a);
    static FunctorExpr sym(int a);
    static FunctorExpr exterior(int a);
    static FunctorExpr schur(Partition lambda);
    static FunctorExpr weyl(Partition mu);
    static FunctorExpr tensor(std::vector<FunctorExpr> children);
    /// D^lambda = D^{lambda_1} (x) ... (x) D^{lambda_k}; empty lambda is the
    /// unit functor Schur[].
    static FunctorExpr divided_product(const Partition& lambda);
    static FunctorExpr twist(FunctorExpr child, int i);
    static FunctorExpr param(FunctorExpr child, GradedSpace space);
    static FunctorExpr precompose(FunctorExpr child, FunctorExpr a);
    static FunctorExpr kan_right(FunctorExpr child, FunctorExpr a);
    static FunctorExpr kan_left(FunctorExpr child, FunctorExpr a);
    static FunctorExpr dual(FunctorExpr child);
    static FunctorExpr shift(FunctorExpr child, ShiftSpec s);
    static FunctorExpr ext_query(FunctorExpr left, FunctorExpr right);
    static FunctorExpr sym_tensor_ext(FunctorExpr child, int i);

    Kind kind() const { return node_->kind; }
    int power() const { return node_->power; }           // Divided/Sym/Exterior
    const Partition& diagram() const { return node_->diagram; }  // Schur/Weyl
    const std::vector<FunctorExpr>& children() const { return node_->children; }
    const FunctorExpr& child(size_t n = 0) const { return node_->children.at(n); }
    int twist_level() const { return node_->twist; }     // Twist/SymTensorExt
    const GradedSpace& space() const { return node_->space; }    // Param
    const ShiftSpec& shift_spec() const { return node_->shift; } // Shift

    /// Homogeneous degree; throws on degree inconsistency (Ext sides of
    /// different degree, Kan extension with non-divisible degree).
    Int degree(int p) const;

    /// Replace the n-th child, keeping all other payload.
    FunctorExpr with_child(size_t n, FunctorExpr c) const;

    bool operator==(const FunctorExpr& o) const;
    bool operator!=(const FunctorExpr& o) const { return !(*this == o); }

    std::string to_string() const;

    /// Parse the CLI expression syntax, e.g.
    /// "Ext(Twist(Weyl[2,1],1), Twist(Schur[2,1],1))".
    /// p is needed to resolve space tokens such as A_1 or A_1^(2).
    static FunctorExpr parse(const std::string& text, int p);

    /// If this expression is one of Schur[nu], Weyl is excluded; S^a and L^a
    /// and I count as single-row / single-column / single-box diagrams.
    std::optional<Partition> as_schur_diagram() const;

private:
    struct Node {
        Kind kind = Kind::Identity;
        int power = 0;
        Partition diagram;
        std::vector<FunctorExpr> children;
        int twist = 0;
        GradedSpace space;
        ShiftSpec shift;
    };

    explicit FunctorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static FunctorExpr make(Node n);

    std::shared_ptr<const Node> node_;
};

}  // namespace frobext
