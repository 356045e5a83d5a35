#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

#include "conegeom/expr.hpp"

namespace conegeom {

namespace {

using detail::ExprNode;
using detail::NodePtr;
using Op = ExprNode::Op;

struct Token {
  enum class Kind { kNumber, kIdent, kOp, kEnd };
  Kind kind;
  std::size_t begin, end;
  double number = 0.0;
  char op = 0;
  std::string ident;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    Token t;
    t.begin = pos_;
    if (pos_ >= src_.size()) {
      t.kind = Token::Kind::kEnd;
      t.end = pos_;
      return t;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* first = src_.data() + pos_;
      const char* last = src_.data() + src_.size();
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr == first)
        throw ParseError("malformed number", pos_);
      t.kind = Token::Kind::kNumber;
      t.number = value;
      pos_ += static_cast<std::size_t>(ptr - first);
      t.end = pos_;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      t.kind = Token::Kind::kIdent;
      t.ident = src_.substr(start, pos_ - start);
      t.end = pos_;
      return t;
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '^':
      case '(': case ')': case ',':
        t.kind = Token::Kind::kOp;
        t.op = c;
        ++pos_;
        t.end = pos_;
        return t;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
};

bool is_function_name(const std::string& name) {
  return name == "sin" || name == "cos" || name == "exp" || name == "log" ||
         name == "sqrt" || name == "pow";
}

// Evaluates a coordinate-free subtree to a double (used for exponents).
std::optional<double> fold_constant(const NodePtr& n) {
  switch (n->op) {
    case Op::kConstant:
      return n->constant;
    case Op::kCoord:
      return std::nullopt;
    case Op::kNeg: {
      auto a = fold_constant(n->a);
      return a ? std::optional<double>(-*a) : std::nullopt;
    }
    case Op::kAdd: case Op::kSub: case Op::kMul: case Op::kDiv: {
      auto a = fold_constant(n->a), b = fold_constant(n->b);
      if (!a || !b) return std::nullopt;
      switch (n->op) {
        case Op::kAdd: return *a + *b;
        case Op::kSub: return *a - *b;
        case Op::kMul: return *a * *b;
        default: return *a / *b;
      }
    }
    case Op::kSin: case Op::kCos: case Op::kExp: case Op::kLog: case Op::kSqrt: {
      auto a = fold_constant(n->a);
      if (!a) return std::nullopt;
      switch (n->op) {
        case Op::kSin: return std::sin(*a);
        case Op::kCos: return std::cos(*a);
        case Op::kExp: return std::exp(*a);
        case Op::kLog: return std::log(*a);
        default: return std::sqrt(*a);
      }
    }
    case Op::kPowInt: {
      auto a = fold_constant(n->a);
      return a ? std::optional<double>(std::pow(*a, static_cast<double>(n->ipow)))
               : std::nullopt;
    }
    case Op::kPowReal: {
      auto a = fold_constant(n->a);
      return a ? std::optional<double>(std::pow(*a, n->constant)) : std::nullopt;
    }
  }
  return std::nullopt;
}

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& coords)
      : src_(src), coords_(coords), lexer_(src) {
    advance();
  }

  NodePtr parse() {
    NodePtr e = parse_sum();
    if (cur_.kind != Token::Kind::kEnd)
      throw ParseError("unexpected trailing input", cur_.begin);
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  bool at_op(char c) const {
    return cur_.kind == Token::Kind::kOp && cur_.op == c;
  }

  void expect_op(char c, const char* what) {
    if (!at_op(c)) throw ParseError(std::string("expected ") + what, cur_.begin);
    advance();
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_term();
    while (at_op('+') || at_op('-')) {
      const char op = cur_.op;
      advance();
      NodePtr rhs = parse_term();
      lhs = binary(op == '+' ? Op::kAdd : Op::kSub, lhs, rhs);
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    while (at_op('*') || at_op('/')) {
      const char op = cur_.op;
      advance();
      NodePtr rhs = parse_unary();
      lhs = binary(op == '*' ? Op::kMul : Op::kDiv, lhs, rhs);
    }
    return lhs;
  }

  NodePtr parse_unary() {
    if (at_op('-')) {
      const std::size_t begin = cur_.begin;
      advance();
      NodePtr a = parse_unary();
      auto n = std::make_shared<ExprNode>();
      n->op = Op::kNeg;
      n->a = a;
      n->src_begin = begin;
      n->src_end = a->src_end;
      return n;
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (!at_op('^')) return base;
    const std::size_t caret = cur_.begin;
    advance();
    // Right-associative; the exponent may carry a leading minus.
    NodePtr exponent = at_op('-') ? parse_unary() : parse_power();
    return make_pow(base, exponent, caret);
  }

  NodePtr make_pow(const NodePtr& base, const NodePtr& exponent,
                   std::size_t at) {
    auto folded = fold_constant(exponent);
    if (!folded)
      throw ParseError("exponent must be a constant expression",
                       exponent->src_begin ? exponent->src_begin : at);
    auto n = std::make_shared<ExprNode>();
    n->a = base;
    n->src_begin = base->src_begin;
    n->src_end = exponent->src_end;
    const double p = *folded;
    if (p == std::nearbyint(p) && std::abs(p) <= 64.0) {
      n->op = Op::kPowInt;
      n->ipow = static_cast<long>(p);
    } else {
      n->op = Op::kPowReal;
      n->constant = p;
    }
    return n;
  }

  NodePtr parse_primary() {
    if (cur_.kind == Token::Kind::kNumber) {
      auto n = std::make_shared<ExprNode>();
      n->op = Op::kConstant;
      n->constant = cur_.number;
      n->src_begin = cur_.begin;
      n->src_end = cur_.end;
      advance();
      return n;
    }
    if (cur_.kind == Token::Kind::kIdent) {
      const Token ident = cur_;
      advance();
      if (at_op('(')) {
        if (!is_function_name(ident.ident))
          throw ParseError("unknown function '" + ident.ident + "'", ident.begin);
        advance();
        std::vector<NodePtr> args;
        args.push_back(parse_sum());
        while (at_op(',')) {
          advance();
          args.push_back(parse_sum());
        }
        const std::size_t close = cur_.begin;
        expect_op(')', "')'");
        return make_call(ident, args, close);
      }
      const auto it = std::find(coords_.begin(), coords_.end(), ident.ident);
      if (it == coords_.end())
        throw ParseError("unknown identifier '" + ident.ident + "'", ident.begin);
      auto n = std::make_shared<ExprNode>();
      n->op = Op::kCoord;
      n->coord = static_cast<int>(it - coords_.begin());
      n->src_begin = ident.begin;
      n->src_end = ident.end;
      return n;
    }
    if (at_op('(')) {
      advance();
      NodePtr e = parse_sum();
      expect_op(')', "')'");
      return e;
    }
    throw ParseError("expected expression", cur_.begin);
  }

  NodePtr make_call(const Token& ident, const std::vector<NodePtr>& args,
                    std::size_t close) {
    const std::string& name = ident.ident;
    if (name == "pow") {
      if (args.size() != 2)
        throw ParseError("pow expects 2 arguments, got " +
                             std::to_string(args.size()),
                         ident.begin);
      return make_pow(args[0], args[1], ident.begin);
    }
    if (args.size() != 1)
      throw ParseError(name + " expects 1 argument, got " +
                           std::to_string(args.size()),
                       ident.begin);
    auto n = std::make_shared<ExprNode>();
    n->a = args[0];
    n->src_begin = ident.begin;
    n->src_end = close + 1;
    if (name == "sin") n->op = Op::kSin;
    else if (name == "cos") n->op = Op::kCos;
    else if (name == "exp") n->op = Op::kExp;
    else if (name == "log") n->op = Op::kLog;
    else n->op = Op::kSqrt;
    return n;
  }

  NodePtr binary(Op op, const NodePtr& a, const NodePtr& b) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->a = a;
    n->b = b;
    n->src_begin = a->src_begin;
    n->src_end = b->src_end;
    return n;
  }

  const std::string& src_;
  const std::vector<std::string>& coords_;
  Lexer lexer_;
  Token cur_;
};

}  // namespace

ScalarExpr parse_expr(const std::string& source,
                      const std::vector<std::string>& coords) {
  if (source.empty()) throw ParseError("empty expression", 0);
  Parser parser(source, coords);
  auto shared_coords = std::make_shared<const std::vector<std::string>>(coords);
  return ScalarExpr(parser.parse(), std::move(shared_coords));
}

ScalarExpr parse_expr(const std::string& source, const ChartDomain& chart) {
  return parse_expr(source, chart.coords());
}

}  // namespace conegeom
