#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "conegeom/chart.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/jet.hpp"

namespace conegeom {

namespace detail {

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Op {
    kConstant,
    kCoord,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kNeg,
    kSin,
    kCos,
    kExp,
    kLog,
    kSqrt,
    kPowInt,
    kPowReal,
  };

  Op op;
  double constant = 0.0;  // kConstant value or kPowReal exponent
  long ipow = 0;          // kPowInt exponent
  int coord = -1;         // kCoord index
  NodePtr a, b;
  std::size_t src_begin = 0, src_end = 0;  // byte span in the source, if any
};

}  // namespace detail

/// Immutable closed-form scalar expression over the named coordinates of a
/// chart. Built either by parsing text (parse_expr) or by combining existing
/// expressions with the operators below; the tree is shared and never
/// mutated after construction.
class ScalarExpr {
 public:
  ScalarExpr() = default;
  ScalarExpr(detail::NodePtr root, std::shared_ptr<const std::vector<std::string>> coords)
      : root_(std::move(root)), coords_(std::move(coords)) {}

  bool valid() const { return root_ != nullptr; }
  const detail::NodePtr& root() const { return root_; }
  const std::vector<std::string>& coords() const { return *coords_; }
  const std::shared_ptr<const std::vector<std::string>>& coords_ptr() const {
    return coords_;
  }
  int dim() const { return static_cast<int>(coords_->size()); }

  /// Renders the expression with minimal parentheses; parsing the result
  /// yields an expression with identical values and derivatives.
  std::string to_string() const;

  /// True when the tree is a literal constant (after parse-time folding of
  /// the combinators this catches the common cases, not every constant
  /// function).
  bool is_constant() const {
    return root_ && root_->op == detail::ExprNode::Op::kConstant;
  }
  double constant_value() const { return root_->constant; }

 private:
  detail::NodePtr root_;
  std::shared_ptr<const std::vector<std::string>> coords_;
};

/// Parses expression text over the given coordinate names.
///
/// Grammar: numbers, coordinates, + - * / ^, unary -, function calls
/// sin/cos/exp/log/sqrt (one argument) and pow (base, exponent). Precedence
/// ^  >  unary-  >  * /  >  + -, left-associative within a level and ^
/// right-associative. Exponents must be constant subexpressions; integer
/// exponents are kept exact (repeated multiplication at evaluation time).
ScalarExpr parse_expr(const std::string& source,
                      const std::vector<std::string>& coords);
ScalarExpr parse_expr(const std::string& source, const ChartDomain& chart);

/// Evaluates the expression and all partial derivatives up to `order`
/// (0..3) at the point p, exactly to machine rounding. Throws EvalError when
/// a partial function is evaluated outside its domain.
Jet eval_jet(const ScalarExpr& e, std::span<const double> p, int order);

/// Convenience: value only.
double eval_value(const ScalarExpr& e, std::span<const double> p);

/// Central finite-difference approximation of the partial derivative
/// described by `multi_index` (one derivative count per coordinate, total
/// order <= 3) at p with step h. The full stencil must satisfy the chart's
/// domain constraints; otherwise a PreconditionError is thrown. This is the
/// step-size oracle against which eval_jet is validated.
double finite_diff(const ScalarExpr& e, const ChartDomain& chart,
                   std::span<const double> p, const std::vector<int>& multi_index,
                   double h);

// ---------------------------------------------------------------------------
// Combinators. These fold constants (0 + e -> e, literal arithmetic, ...) so
// that programmatically assembled component expressions stay readable when
// printed. All operands must share the same coordinate list.
// ---------------------------------------------------------------------------

ScalarExpr make_const(const std::shared_ptr<const std::vector<std::string>>& coords,
                      double c);
ScalarExpr make_coord(const std::shared_ptr<const std::vector<std::string>>& coords,
                      int index);

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a);
ScalarExpr operator+(const ScalarExpr& a, double c);
ScalarExpr operator+(double c, const ScalarExpr& a);
ScalarExpr operator-(const ScalarExpr& a, double c);
ScalarExpr operator-(double c, const ScalarExpr& a);
ScalarExpr operator*(const ScalarExpr& a, double c);
ScalarExpr operator*(double c, const ScalarExpr& a);
ScalarExpr operator/(const ScalarExpr& a, double c);

ScalarExpr expr_sin(const ScalarExpr& a);
ScalarExpr expr_cos(const ScalarExpr& a);
ScalarExpr expr_exp(const ScalarExpr& a);
ScalarExpr expr_log(const ScalarExpr& a);
ScalarExpr expr_sqrt(const ScalarExpr& a);
ScalarExpr expr_pow_int(const ScalarExpr& a, long n);
ScalarExpr expr_pow(const ScalarExpr& a, double p);

/// Rebuilds e over a different coordinate list, matching coordinates by
/// name; every coordinate e references must appear in the new list. Used to
/// lift base-chart expressions onto a product chart.
ScalarExpr relabel(const ScalarExpr& e,
                   const std::shared_ptr<const std::vector<std::string>>& coords);

/// Shared coordinate-name list of a chart, for the combinators above.
std::shared_ptr<const std::vector<std::string>> chart_coords(const ChartDomain& chart);

}  // namespace conegeom
