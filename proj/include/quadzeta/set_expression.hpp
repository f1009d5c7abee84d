#pragma once

#include <memory>
#include <string>
#include <vector>

namespace quadzeta {

/// Symbolic constructible real algebraic set.
///
/// Leaves are atoms (affine spaces, spheres, signature quadrics, ...);
/// internal nodes are products, disjoint unions and differences. Values are
/// immutable and share subtrees.
class SetExpression {
public:
    enum class Kind {
        affine_space,       // R^k
        punctured_line,     // R^*
        point,
        sphere,             // S^n in R^(n+1)
        projective_space,   // P^k(R)
        quadric_affine,     // {sum_{i<=s} x_i^2 - sum_{j<=t} y_j^2 = c} in R^(s+t)
        quadric_projective, // Z_{m,M} in P^(m+M-1)(R)
        product,
        disjoint_union,
        difference,         // children: ambient, closed algebraic subset
    };

    static SetExpression affine_space(int dim);
    static SetExpression punctured_line();
    static SetExpression point();
    static SetExpression sphere(int dim);
    static SetExpression projective_space(int dim);
    static SetExpression quadric_affine(int level, int plus, int minus);
    static SetExpression quadric_projective(int m, int big_m);
    static SetExpression product(std::vector<SetExpression> factors);
    static SetExpression disjoint_union(std::vector<SetExpression> pieces);
    static SetExpression empty() { return disjoint_union({}); }
    /// Throws MalformedExpression unless `closed_subset` is recognisably a
    /// closed algebraic subset of `ambient`.
    static SetExpression difference(SetExpression ambient, SetExpression closed_subset);

    Kind kind() const noexcept { return node_->kind; }
    bool is_atom() const noexcept;

    // Atom parameters; meaning depends on kind():
    //   affine_space/sphere/projective_space: dim()
    //   quadric_affine: level(), plus(), minus()
    //   quadric_projective: plus() = m, minus() = M
    int dim() const noexcept { return node_->a; }
    int level() const noexcept { return node_->c; }
    int plus() const noexcept { return node_->a; }
    int minus() const noexcept { return node_->b; }

    const std::vector<SetExpression>& children() const noexcept { return node_->children; }

    friend bool operator==(const SetExpression& x, const SetExpression& y);

private:
    struct Node {
        Kind kind;
        int a = 0;
        int b = 0;
        int c = 0;
        std::vector<SetExpression> children;
    };

    explicit SetExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static SetExpression make(Kind kind, int a, int b, int c, std::vector<SetExpression> children = {});

    std::shared_ptr<const Node> node_;
};

/// Closed-subset test used to admit Difference nodes. Conservative: it only
/// recognises standard embeddings (linear subspaces, quadrics in their
/// ambient space, the origin in cones, componentwise products).
bool is_closed_subset(const SetExpression& subset, const SetExpression& ambient);

/// Compact one-line rendering, e.g. "Product(PuncturedLine, R^1)".
std::string to_string(const SetExpression& expression);

} // namespace quadzeta
