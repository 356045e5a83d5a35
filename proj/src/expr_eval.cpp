#include <cmath>
#include <cstdio>
#include <string>

#include "conegeom/expr.hpp"

namespace conegeom {

namespace {

using detail::ExprNode;
using detail::NodePtr;
using Op = ExprNode::Op;

std::string format_number(double v) {
  char buf[40];
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
  } else {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
  }
  return buf;
}

// Precedence levels used for minimal parenthesisation when printing.
int precedence(Op op) {
  switch (op) {
    case Op::kAdd: case Op::kSub: return 1;
    case Op::kMul: case Op::kDiv: return 2;
    case Op::kNeg: return 3;
    case Op::kPowInt: case Op::kPowReal: return 4;
    default: return 5;  // atoms and calls
  }
}

void print_node(const NodePtr& n, const std::vector<std::string>& coords,
                std::string& out, int parent_prec) {
  const int prec = precedence(n->op);
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (n->op) {
    case Op::kConstant:
      if (n->constant < 0) {
        out += '(';
        out += format_number(n->constant);
        out += ')';
      } else {
        out += format_number(n->constant);
      }
      break;
    case Op::kCoord:
      out += coords[n->coord];
      break;
    case Op::kAdd:
      print_node(n->a, coords, out, prec);
      out += " + ";
      print_node(n->b, coords, out, prec);
      break;
    case Op::kSub:
      print_node(n->a, coords, out, prec);
      out += " - ";
      print_node(n->b, coords, out, prec + 1);
      break;
    case Op::kMul:
      print_node(n->a, coords, out, prec);
      out += "*";
      print_node(n->b, coords, out, prec);
      break;
    case Op::kDiv:
      print_node(n->a, coords, out, prec);
      out += "/";
      print_node(n->b, coords, out, prec + 1);
      break;
    case Op::kNeg:
      out += '-';
      print_node(n->a, coords, out, prec + 1);
      break;
    case Op::kPowInt:
      print_node(n->a, coords, out, prec + 1);
      out += '^';
      if (n->ipow < 0) {
        out += '(';
        out += std::to_string(n->ipow);
        out += ')';
      } else {
        out += std::to_string(n->ipow);
      }
      break;
    case Op::kPowReal:
      out += "pow(";
      print_node(n->a, coords, out, 0);
      out += ", ";
      out += format_number(n->constant);
      out += ')';
      break;
    case Op::kSin: case Op::kCos: case Op::kExp: case Op::kLog: case Op::kSqrt: {
      const char* name = n->op == Op::kSin   ? "sin"
                         : n->op == Op::kCos ? "cos"
                         : n->op == Op::kExp ? "exp"
                         : n->op == Op::kLog ? "log"
                                             : "sqrt";
      out += name;
      out += '(';
      print_node(n->a, coords, out, 0);
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

[[noreturn]] void domain_error(const char* what, const NodePtr& n,
                               const std::vector<std::string>& coords) {
  std::string rendered;
  print_node(n, coords, rendered, 0);
  std::string msg = std::string(what) + " in '" + rendered + "'";
  if (n->src_end > n->src_begin)
    msg += " at offset " + std::to_string(n->src_begin);
  throw EvalError(msg);
}

Jet eval_node(const NodePtr& n, std::span<const double> p, int order,
              const std::vector<std::string>& coords) {
  const int d = static_cast<int>(p.size());
  switch (n->op) {
    case Op::kConstant:
      return Jet::constant(d, order, n->constant);
    case Op::kCoord:
      return Jet::coordinate(d, order, n->coord, p[n->coord]);
    case Op::kAdd:
      return eval_node(n->a, p, order, coords) + eval_node(n->b, p, order, coords);
    case Op::kSub:
      return eval_node(n->a, p, order, coords) - eval_node(n->b, p, order, coords);
    case Op::kMul:
      return eval_node(n->a, p, order, coords) * eval_node(n->b, p, order, coords);
    case Op::kDiv: {
      Jet a = eval_node(n->a, p, order, coords);
      Jet b = eval_node(n->b, p, order, coords);
      if (b.value() == 0.0) domain_error("division by zero", n, coords);
      return a / b;
    }
    case Op::kNeg:
      return -eval_node(n->a, p, order, coords);
    case Op::kSin:
      return sin(eval_node(n->a, p, order, coords));
    case Op::kCos:
      return cos(eval_node(n->a, p, order, coords));
    case Op::kExp:
      return exp(eval_node(n->a, p, order, coords));
    case Op::kLog: {
      Jet a = eval_node(n->a, p, order, coords);
      if (!(a.value() > 0.0)) domain_error("log of non-positive argument", n, coords);
      return log(a);
    }
    case Op::kSqrt: {
      Jet a = eval_node(n->a, p, order, coords);
      if (!(a.value() > 0.0)) domain_error("sqrt of non-positive argument", n, coords);
      return sqrt(a);
    }
    case Op::kPowInt: {
      Jet a = eval_node(n->a, p, order, coords);
      if (n->ipow < 0 && a.value() == 0.0)
        domain_error("zero base with negative exponent", n, coords);
      return a.pow_int(n->ipow);
    }
    case Op::kPowReal: {
      Jet a = eval_node(n->a, p, order, coords);
      if (!(a.value() > 0.0))
        domain_error("non-integer power of non-positive base", n, coords);
      return pow(a, n->constant);
    }
  }
  throw EvalError("corrupt expression node");
}

}  // namespace

std::string ScalarExpr::to_string() const {
  std::string out;
  print_node(root_, coords(), out, 0);
  return out;
}

Jet eval_jet(const ScalarExpr& e, std::span<const double> p, int order) {
  if (!e.valid()) throw EvalError("empty expression");
  if (static_cast<int>(p.size()) != e.dim())
    throw EvalError("point dimension does not match expression chart");
  if (order < 0 || order > 3) throw EvalError("jet order must be 0..3");
  return eval_node(e.root(), p, order, e.coords());
}

double eval_value(const ScalarExpr& e, std::span<const double> p) {
  return eval_jet(e, p, 0).value();
}

double finite_diff(const ScalarExpr& e, const ChartDomain& chart,
                   std::span<const double> p,
                   const std::vector<int>& multi_index, double h) {
  if (static_cast<int>(multi_index.size()) != e.dim())
    throw PreconditionError("multi-index size does not match chart dimension");
  int coord = -1;
  for (std::size_t i = 0; i < multi_index.size(); ++i) {
    if (multi_index[i] < 0)
      throw PreconditionError("negative derivative count in multi-index");
    if (multi_index[i] > 0 && coord < 0) coord = static_cast<int>(i);
  }
  if (coord < 0) {
    if (!chart.contains(p))
      throw PreconditionError("finite-difference stencil leaves chart domain",
                              std::vector<double>(p.begin(), p.end()));
    return eval_value(e, p);
  }
  std::vector<int> rest = multi_index;
  rest[coord] -= 1;
  std::vector<double> plus(p.begin(), p.end());
  std::vector<double> minus(p.begin(), p.end());
  plus[coord] += h;
  minus[coord] -= h;
  const double fp = finite_diff(e, chart, plus, rest, h);
  const double fm = finite_diff(e, chart, minus, rest, h);
  return (fp - fm) / (2.0 * h);
}

// --- combinators ------------------------------------------------------------

namespace {

using CoordsPtr = std::shared_ptr<const std::vector<std::string>>;

NodePtr const_node(double c) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::kConstant;
  n->constant = c;
  return n;
}

bool is_const(const NodePtr& n, double v) {
  return n->op == Op::kConstant && n->constant == v;
}

const CoordsPtr& merged_coords(const ScalarExpr& a, const ScalarExpr& b) {
  if (*a.coords_ptr() != *b.coords_ptr())
    throw SpecError("combining expressions over different charts");
  return a.coords_ptr();
}

ScalarExpr wrap(const CoordsPtr& coords, NodePtr n) {
  return ScalarExpr(std::move(n), coords);
}

}  // namespace

ScalarExpr make_const(const CoordsPtr& coords, double c) {
  return wrap(coords, const_node(c));
}

ScalarExpr make_coord(const CoordsPtr& coords, int index) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::kCoord;
  n->coord = index;
  return wrap(coords, std::move(n));
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  const auto& coords = merged_coords(a, b);
  if (a.is_constant() && b.is_constant())
    return make_const(coords, a.constant_value() + b.constant_value());
  if (is_const(a.root(), 0.0)) return b;
  if (is_const(b.root(), 0.0)) return a;
  auto n = std::make_shared<ExprNode>();
  n->op = Op::kAdd;
  n->a = a.root();
  n->b = b.root();
  return wrap(coords, std::move(n));
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
  const auto& coords = merged_coords(a, b);
  if (a.is_constant() && b.is_constant())
    return make_const(coords, a.constant_value() - b.constant_value());
  if (is_const(b.root(), 0.0)) return a;
  if (is_const(a.root(), 0.0)) return -b;
  auto n = std::make_shared<ExprNode>();
  n->op = Op::kSub;
  n->a = a.root();
  n->b = b.root();
  return wrap(coords, std::move(n));
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  const auto& coords = merged_coords(a, b);
  if (a.is_constant() && b.is_constant())
    return make_const(coords, a.constant_value() * b.constant_value());
  if (is_const(a.root(), 0.0) || is_const(b.root(), 0.0))
    return make_const(coords, 0.0);
  if (is_const(a.root(), 1.0)) return b;
  if (is_const(b.root(), 1.0)) return a;
  auto n = std::make_shared<ExprNode>();
  n->op = Op::kMul;
  n->a = a.root();
  n->b = b.root();
  return wrap(coords, std::move(n));
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  const auto& coords = merged_coords(a, b);
  if (is_const(b.root(), 1.0)) return a;
  if (a.is_constant() && b.is_constant() && b.constant_value() != 0.0)
    return make_const(coords, a.constant_value() / b.constant_value());
  auto n = std::make_shared<ExprNode>();
  n->op = Op::kDiv;
  n->a = a.root();
  n->b = b.root();
  return wrap(coords, std::move(n));
}

ScalarExpr operator-(const ScalarExpr& a) {
  if (a.is_constant()) return make_const(a.coords_ptr(), -a.constant_value());
  if (a.root()->op == Op::kNeg) return wrap(a.coords_ptr(), a.root()->a);
  auto n = std::make_shared<ExprNode>();
  n->op = Op::kNeg;
  n->a = a.root();
  return wrap(a.coords_ptr(), std::move(n));
}

ScalarExpr operator+(const ScalarExpr& a, double c) {
  return a + make_const(a.coords_ptr(), c);
}
ScalarExpr operator+(double c, const ScalarExpr& a) { return a + c; }
ScalarExpr operator-(const ScalarExpr& a, double c) {
  return a - make_const(a.coords_ptr(), c);
}
ScalarExpr operator-(double c, const ScalarExpr& a) {
  return make_const(a.coords_ptr(), c) - a;
}
ScalarExpr operator*(const ScalarExpr& a, double c) {
  return a * make_const(a.coords_ptr(), c);
}
ScalarExpr operator*(double c, const ScalarExpr& a) { return a * c; }
ScalarExpr operator/(const ScalarExpr& a, double c) {
  return a / make_const(a.coords_ptr(), c);
}

namespace {
ScalarExpr unary_call(const ScalarExpr& a, Op op) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->a = a.root();
  return ScalarExpr(std::move(n), a.coords_ptr());
}
}  // namespace

ScalarExpr expr_sin(const ScalarExpr& a) { return unary_call(a, Op::kSin); }
ScalarExpr expr_cos(const ScalarExpr& a) { return unary_call(a, Op::kCos); }
ScalarExpr expr_exp(const ScalarExpr& a) { return unary_call(a, Op::kExp); }
ScalarExpr expr_log(const ScalarExpr& a) { return unary_call(a, Op::kLog); }
ScalarExpr expr_sqrt(const ScalarExpr& a) { return unary_call(a, Op::kSqrt); }

ScalarExpr expr_pow_int(const ScalarExpr& a, long n) {
  if (n == 0) return make_const(a.coords_ptr(), 1.0);
  if (n == 1) return a;
  auto node = std::make_shared<ExprNode>();
  node->op = Op::kPowInt;
  node->ipow = n;
  node->a = a.root();
  return ScalarExpr(std::move(node), a.coords_ptr());
}

ScalarExpr expr_pow(const ScalarExpr& a, double p) {
  if (p == std::nearbyint(p) && std::abs(p) <= 64.0)
    return expr_pow_int(a, static_cast<long>(p));
  auto node = std::make_shared<ExprNode>();
  node->op = Op::kPowReal;
  node->constant = p;
  node->a = a.root();
  return ScalarExpr(std::move(node), a.coords_ptr());
}

namespace {

NodePtr relabel_node(const NodePtr& n, const std::vector<std::string>& from,
                     const std::vector<std::string>& to) {
  auto out = std::make_shared<ExprNode>(*n);
  if (n->op == Op::kCoord) {
    const std::string& name = from[n->coord];
    int idx = -1;
    for (std::size_t i = 0; i < to.size(); ++i)
      if (to[i] == name) idx = static_cast<int>(i);
    if (idx < 0)
      throw SpecError("coordinate '" + name + "' absent from target chart");
    out->coord = idx;
  }
  if (n->a) out->a = relabel_node(n->a, from, to);
  if (n->b) out->b = relabel_node(n->b, from, to);
  return out;
}

}  // namespace

ScalarExpr relabel(const ScalarExpr& e, const CoordsPtr& coords) {
  if (*e.coords_ptr() == *coords) return e;
  return ScalarExpr(relabel_node(e.root(), e.coords(), *coords), coords);
}

std::shared_ptr<const std::vector<std::string>> chart_coords(
    const ChartDomain& chart) {
  return std::make_shared<const std::vector<std::string>>(chart.coords());
}

}  // namespace conegeom
