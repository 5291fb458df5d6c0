#include "pqb/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace pqb {

ParseError::ParseError(std::string message, std::size_t offset, std::vector<std::string> expected)
    : std::runtime_error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

std::string ParseError::describe() const {
  std::string out = std::string(what()) + " at offset " + std::to_string(offset_);
  if (!expected_.empty()) {
    out += " (expected: ";
    for (std::size_t i = 0; i < expected_.size(); ++i) {
      if (i) out += ", ";
      out += expected_[i];
    }
    out += ")";
  }
  return out;
}

enum class NodeKind { Number, VarX, VarY, Pi, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Sin, Cos, Exp, Abs, Sqrt, Min, Max };

struct ExprNode {
  NodeKind kind;
  std::size_t offset;
  double value = 0.0;
  Func func = Func::Sin;
  std::vector<std::shared_ptr<const ExprNode>> args;
};

namespace {

struct FuncInfo {
  std::string_view name;
  Func func;
  std::size_t arity;
};

constexpr std::array<FuncInfo, 7> kFunctions{{
    {"abs", Func::Abs, 1},
    {"cos", Func::Cos, 1},
    {"exp", Func::Exp, 1},
    {"max", Func::Max, 2},
    {"min", Func::Min, 2},
    {"sin", Func::Sin, 1},
    {"sqrt", Func::Sqrt, 1},
}};

const FuncInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::string_view function_name(Func f) {
  for (const auto& info : kFunctions) {
    if (info.func == f) return info.name;
  }
  return "?";
}

const std::vector<std::string>& operand_expected() {
  static const std::vector<std::string> v{"number", "identifier", "'('", "'-'"};
  return v;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_node(NodeKind kind, std::size_t offset, std::vector<NodePtr> args = {}) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->offset = offset;
  node->args = std::move(args);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_, operand_expected());
    auto root = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) unexpected(after_operand_expected());
    return root;
  }

 private:
  // Closing tokens that are legal at the current nesting level.
  std::vector<std::string> after_operand_expected() const {
    std::vector<std::string> v{"'+'", "'-'", "'*'", "'/'", "'^'"};
    if (closers_.empty()) {
      v.emplace_back("end of input");
    } else if (closers_.back() == ',') {
      v.emplace_back("','");
      v.emplace_back("')'");
    } else {
      v.emplace_back("')'");
    }
    return v;
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_, std::move(expected));
    throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = make_node(NodeKind::Add, at, {lhs, parse_term()});
      } else if (accept('-')) {
        lhs = make_node(NodeKind::Sub, at, {lhs, parse_term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    auto lhs = parse_unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = make_node(NodeKind::Mul, at, {lhs, parse_unary()});
      } else if (accept('/')) {
        lhs = make_node(NodeKind::Div, at, {lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return make_node(NodeKind::Neg, at, {parse_unary()});
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    skip_ws();
    const std::size_t at = pos_;
    if (accept('^')) return make_node(NodeKind::Pow, at, {base, parse_unary()});
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) unexpected(operand_expected());
    const char c = text_[pos_];
    if (is_digit(c) || c == '.') return parse_number();
    if (is_ident_start(c)) return parse_identifier();
    if (c == '(') {
      ++pos_;
      closers_.push_back(')');
      auto inner = parse_expr();
      skip_ws();
      if (!accept(')')) unexpected(after_operand_expected());
      closers_.pop_back();
      return inner;
    }
    unexpected(operand_expected());
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    std::size_t digits = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_, ++digits;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_, ++digits;
    }
    if (digits == 0) throw ParseError("malformed number", start, {"digit"});
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look >= text_.size() || !is_digit(text_[look])) {
        throw ParseError("malformed exponent", look, {"digit"});
      }
      pos_ = look;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    double value = 0.0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(value)) {
      throw ParseError("number out of range", start, {});
    }
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::Number;
    node->offset = start;
    node->value = value;
    return node;
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return make_node(NodeKind::VarX, start);
    if (name == "y") return make_node(NodeKind::VarY, start);
    if (name == "pi") return make_node(NodeKind::Pi, start);
    const FuncInfo* info = find_function(name);
    if (info == nullptr) {
      std::vector<std::string> known{"x", "y", "pi"};
      for (const auto& f : kFunctions) known.emplace_back(f.name);
      throw ParseError("unknown identifier '" + std::string(name) + "'", start, std::move(known));
    }
    skip_ws();
    if (!accept('(')) unexpected({"'('"});
    std::vector<NodePtr> args;
    closers_.push_back(',');
    args.push_back(parse_expr());
    while (accept(',')) args.push_back(parse_expr());
    if (!accept(')')) unexpected(after_operand_expected());
    closers_.pop_back();
    if (args.size() != info->arity) {
      throw ParseError("function '" + std::string(name) + "' expects " +
                           std::to_string(info->arity) + " argument(s), got " +
                           std::to_string(args.size()),
                       start, {});
    }
    auto node = make_node(NodeKind::Call, start, std::move(args));
    std::const_pointer_cast<ExprNode>(node)->func = info->func;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<char> closers_;
};

double checked(double v, const ExprNode& node, const char* what) {
  if (!std::isfinite(v)) throw EvalError(std::string(what) + " produced a non-finite value", node.offset);
  return v;
}

double eval_node(const ExprNode& node, double x, double y) {
  switch (node.kind) {
    case NodeKind::Number: return node.value;
    case NodeKind::VarX: return x;
    case NodeKind::VarY: return y;
    case NodeKind::Pi: return std::numbers::pi;
    case NodeKind::Neg: return -eval_node(*node.args[0], x, y);
    case NodeKind::Add:
      return checked(eval_node(*node.args[0], x, y) + eval_node(*node.args[1], x, y), node, "'+'");
    case NodeKind::Sub:
      return checked(eval_node(*node.args[0], x, y) - eval_node(*node.args[1], x, y), node, "'-'");
    case NodeKind::Mul:
      return checked(eval_node(*node.args[0], x, y) * eval_node(*node.args[1], x, y), node, "'*'");
    case NodeKind::Div: {
      const double den = eval_node(*node.args[1], x, y);
      if (den == 0.0) throw EvalError("division by zero", node.offset);
      return checked(eval_node(*node.args[0], x, y) / den, node, "'/'");
    }
    case NodeKind::Pow:
      return checked(std::pow(eval_node(*node.args[0], x, y), eval_node(*node.args[1], x, y)),
                     node, "'^'");
    case NodeKind::Call: {
      const double a = eval_node(*node.args[0], x, y);
      switch (node.func) {
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Exp: return checked(std::exp(a), node, "exp");
        case Func::Abs: return std::fabs(a);
        case Func::Sqrt:
          if (a < 0.0) throw EvalError("sqrt of a negative value", node.offset);
          return std::sqrt(a);
        case Func::Min: return std::min(a, eval_node(*node.args[1], x, y));
        case Func::Max: return std::max(a, eval_node(*node.args[1], x, y));
      }
      break;
    }
  }
  throw EvalError("corrupt expression node", node.offset);
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void print_node(const ExprNode& node, std::string& out) {
  auto binary = [&](const char* name) {
    out += name;
    out += '(';
    print_node(*node.args[0], out);
    out += ',';
    print_node(*node.args[1], out);
    out += ')';
  };
  switch (node.kind) {
    case NodeKind::Number: out += format_number(node.value); return;
    case NodeKind::VarX: out += 'x'; return;
    case NodeKind::VarY: out += 'y'; return;
    case NodeKind::Pi: out += "pi"; return;
    case NodeKind::Neg:
      out += "Neg(";
      print_node(*node.args[0], out);
      out += ')';
      return;
    case NodeKind::Add: binary("Add"); return;
    case NodeKind::Sub: binary("Sub"); return;
    case NodeKind::Mul: binary("Mul"); return;
    case NodeKind::Div: binary("Div"); return;
    case NodeKind::Pow: binary("Pow"); return;
    case NodeKind::Call:
      out += function_name(node.func);
      out += '(';
      for (std::size_t i = 0; i < node.args.size(); ++i) {
        if (i) out += ',';
        print_node(*node.args[i], out);
      }
      out += ')';
      return;
  }
}

}  // namespace

double Expr::eval(double x, double y) const { return eval_node(*root_, x, y); }

std::string Expr::to_string() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

Expr parse_expr(std::string_view text) { return Expr(Parser(text).parse()); }

}  // namespace pqb
