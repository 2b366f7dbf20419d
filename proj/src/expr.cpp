#include "sievecert/expr.hpp"

#include <sstream>

namespace sievecert {

const char* var_name(Var v) {
    static const char* names[kVarCount] = {
        "a", "sigma", "ell", "beta", "gamma",
        "alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6",
        "nu", "eps1"};
    return names[static_cast<int>(v)];
}

struct Expr::Node {
    Kind kind;
    double value = 0.0;
    Var var = Var::a;
    std::shared_ptr<const Node> left, right;
};

Expr::Expr(double c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = c;
    node_ = std::move(n);
}

Expr::Expr(Var v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->var = v;
    node_ = std::move(n);
}

Expr Expr::make(Kind k, Expr l, Expr r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->left = l.node_;
    n->right = r.node_;
    return Expr(std::move(n));
}

Expr operator+(Expr a, Expr b) { return Expr::make(Expr::Kind::Add, a, b); }
Expr operator-(Expr a, Expr b) { return Expr::make(Expr::Kind::Sub, a, b); }
Expr operator*(Expr a, Expr b) { return Expr::make(Expr::Kind::Mul, a, b); }
Expr operator/(Expr a, Expr b) { return Expr::make(Expr::Kind::Div, a, b); }
Expr operator-(Expr a) { return Expr::make(Expr::Kind::Neg, a, a); }
Expr min(Expr a, Expr b) { return Expr::make(Expr::Kind::Min, a, b); }
Expr max(Expr a, Expr b) { return Expr::make(Expr::Kind::Max, a, b); }

namespace {

double eval_node(const Expr::Node& n, const Point& p) {
    using K = Expr::Kind;
    switch (n.kind) {
        case K::Constant: return n.value;
        case K::Variable: return p.get(n.var);
        case K::Add: return eval_node(*n.left, p) + eval_node(*n.right, p);
        case K::Sub: return eval_node(*n.left, p) - eval_node(*n.right, p);
        case K::Mul: return eval_node(*n.left, p) * eval_node(*n.right, p);
        case K::Div: {
            double d = eval_node(*n.right, p);
            if (d == 0.0) throw std::domain_error("division by zero in expression");
            return eval_node(*n.left, p) / d;
        }
        case K::Min: return std::min(eval_node(*n.left, p), eval_node(*n.right, p));
        case K::Max: return std::max(eval_node(*n.left, p), eval_node(*n.right, p));
        case K::Neg: return -eval_node(*n.left, p);
    }
    return 0.0;
}

Interval eval_node(const Expr::Node& n, const Box& b) {
    using K = Expr::Kind;
    switch (n.kind) {
        case K::Constant: return Interval(n.value);
        case K::Variable: return b.get(n.var);
        case K::Add: return eval_node(*n.left, b) + eval_node(*n.right, b);
        case K::Sub: return eval_node(*n.left, b) - eval_node(*n.right, b);
        case K::Mul: return eval_node(*n.left, b) * eval_node(*n.right, b);
        case K::Div: return eval_node(*n.left, b) / eval_node(*n.right, b);
        case K::Min: return min(eval_node(*n.left, b), eval_node(*n.right, b));
        case K::Max: return max(eval_node(*n.left, b), eval_node(*n.right, b));
        case K::Neg: return -eval_node(*n.left, b);
    }
    return Interval();
}

void print_node(const Expr::Node& n, std::ostringstream& out) {
    using K = Expr::Kind;
    auto binary = [&](const char* op) {
        out << '(';
        print_node(*n.left, out);
        out << ' ' << op << ' ';
        print_node(*n.right, out);
        out << ')';
    };
    switch (n.kind) {
        case K::Constant: out << n.value; break;
        case K::Variable: out << var_name(n.var); break;
        case K::Add: binary("+"); break;
        case K::Sub: binary("-"); break;
        case K::Mul: binary("*"); break;
        case K::Div: binary("/"); break;
        case K::Min:
            out << "min(";
            print_node(*n.left, out);
            out << ", ";
            print_node(*n.right, out);
            out << ')';
            break;
        case K::Max:
            out << "max(";
            print_node(*n.left, out);
            out << ", ";
            print_node(*n.right, out);
            out << ')';
            break;
        case K::Neg:
            out << "-(";
            print_node(*n.left, out);
            out << ')';
            break;
    }
}

}  // namespace

double Expr::eval(const Point& p) const { return eval_node(*node_, p); }

Interval Expr::eval(const Box& b) const { return eval_node(*node_, b); }

Interval Expr::eval_checked(const Box& b) const {
    Interval r = eval_node(*node_, b);
    if (!r.is_finite())
        throw std::domain_error("denominator interval contains zero; split the box");
    return r;
}

std::string Expr::to_string() const {
    std::ostringstream out;
    print_node(*node_, out);
    return out.str();
}

}  // namespace sievecert
