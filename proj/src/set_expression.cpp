#include "quadzeta/set_expression.hpp"

#include <sstream>

#include "quadzeta/error.hpp"

namespace quadzeta {

namespace {

void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw Error(ErrorKind::malformed_expression, message);
    }
}

// Sets that contain a distinguished point (the origin) as a closed subset.
bool has_origin(const SetExpression& e)
{
    using K = SetExpression::Kind;
    switch (e.kind()) {
    case K::affine_space:
    case K::point:
        return true;
    case K::quadric_affine:
        return e.level() == 0;
    case K::product:
        for (const auto& child : e.children()) {
            if (!has_origin(child)) {
                return false;
            }
        }
        return true;
    default:
        return false;
    }
}

} // namespace

SetExpression SetExpression::make(Kind kind, int a, int b, int c, std::vector<SetExpression> children)
{
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->a = a;
    node->b = b;
    node->c = c;
    node->children = std::move(children);
    return SetExpression(std::move(node));
}

SetExpression SetExpression::affine_space(int dim)
{
    require(dim >= 0, "affine space dimension must be nonnegative");
    return make(Kind::affine_space, dim, 0, 0);
}

SetExpression SetExpression::punctured_line()
{
    return make(Kind::punctured_line, 0, 0, 0);
}

SetExpression SetExpression::point()
{
    return make(Kind::point, 0, 0, 0);
}

SetExpression SetExpression::sphere(int dim)
{
    require(dim >= 0, "sphere dimension must be nonnegative");
    return make(Kind::sphere, dim, 0, 0);
}

SetExpression SetExpression::projective_space(int dim)
{
    require(dim >= 0, "projective space dimension must be nonnegative");
    return make(Kind::projective_space, dim, 0, 0);
}

SetExpression SetExpression::quadric_affine(int level, int plus, int minus)
{
    require(level >= -1 && level <= 1, "quadric level must be -1, 0 or 1");
    require(plus >= 0 && minus >= 0, "quadric signature must be nonnegative");
    return make(Kind::quadric_affine, plus, minus, level);
}

SetExpression SetExpression::quadric_projective(int m, int big_m)
{
    require(m >= 1 && big_m >= 1, "projective quadric needs m >= 1 and M >= 1");
    return make(Kind::quadric_projective, m, big_m, 0);
}

SetExpression SetExpression::product(std::vector<SetExpression> factors)
{
    return make(Kind::product, 0, 0, 0, std::move(factors));
}

SetExpression SetExpression::disjoint_union(std::vector<SetExpression> pieces)
{
    return make(Kind::disjoint_union, 0, 0, 0, std::move(pieces));
}

SetExpression SetExpression::difference(SetExpression ambient, SetExpression closed_subset)
{
    require(is_closed_subset(closed_subset, ambient),
            "difference: " + to_string(closed_subset) + " is not a closed algebraic subset of " + to_string(ambient));
    return make(Kind::difference, 0, 0, 0, {std::move(ambient), std::move(closed_subset)});
}

bool SetExpression::is_atom() const noexcept
{
    switch (kind()) {
    case Kind::product:
    case Kind::disjoint_union:
    case Kind::difference:
        return false;
    default:
        return true;
    }
}

bool operator==(const SetExpression& x, const SetExpression& y)
{
    if (x.node_ == y.node_) {
        return true;
    }
    return x.node_->kind == y.node_->kind && x.node_->a == y.node_->a && x.node_->b == y.node_->b
        && x.node_->c == y.node_->c && x.node_->children == y.node_->children;
}

bool is_closed_subset(const SetExpression& subset, const SetExpression& ambient)
{
    using K = SetExpression::Kind;
    if (subset == ambient) {
        return true;
    }
    if (subset.kind() == K::disjoint_union && subset.children().empty()) {
        return true;
    }
    switch (subset.kind()) {
    case K::point:
        return has_origin(ambient);
    case K::affine_space:
        return ambient.kind() == K::affine_space && subset.dim() <= ambient.dim();
    case K::projective_space:
        return ambient.kind() == K::projective_space && subset.dim() <= ambient.dim();
    case K::sphere:
        return ambient.kind() == K::affine_space && ambient.dim() == subset.dim() + 1;
    case K::quadric_affine:
        return ambient.kind() == K::affine_space && ambient.dim() == subset.plus() + subset.minus();
    case K::quadric_projective:
        return ambient.kind() == K::projective_space && ambient.dim() == subset.plus() + subset.minus() - 1;
    case K::product: {
        if (ambient.kind() != K::product || ambient.children().size() != subset.children().size()) {
            return false;
        }
        for (std::size_t i = 0; i < subset.children().size(); ++i) {
            if (!is_closed_subset(subset.children()[i], ambient.children()[i])) {
                return false;
            }
        }
        return true;
    }
    default:
        return false;
    }
}

std::string to_string(const SetExpression& e)
{
    using K = SetExpression::Kind;
    std::ostringstream out;
    auto list = [&out](const char* name, const std::vector<SetExpression>& children) {
        out << name << '(';
        for (std::size_t i = 0; i < children.size(); ++i) {
            out << (i ? ", " : "") << to_string(children[i]);
        }
        out << ')';
    };
    switch (e.kind()) {
    case K::affine_space: out << "R^" << e.dim(); break;
    case K::punctured_line: out << "PuncturedLine"; break;
    case K::point: out << "Point"; break;
    case K::sphere: out << "S^" << e.dim(); break;
    case K::projective_space: out << "P^" << e.dim(); break;
    case K::quadric_affine:
        out << "X^" << e.level() << "_{" << e.plus() << ',' << e.minus() << '}';
        break;
    case K::quadric_projective: out << "Z_{" << e.plus() << ',' << e.minus() << '}'; break;
    case K::product: list("Product", e.children()); break;
    case K::disjoint_union:
        if (e.children().empty()) {
            out << "Empty";
        } else {
            list("DisjointUnion", e.children());
        }
        break;
    case K::difference: list("Difference", e.children()); break;
    }
    return out.str();
}

} // namespace quadzeta
