#include "vekua/expression.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace vekua {

struct Expression::Node {
  enum class Kind { constant, coordinate, add, sub, mul, div, neg, pow, exp_fn };
  Kind kind;
  double value = 0.0;  // constant
  int axis = 0;        // coordinate
  int exponent = 0;    // pow
  std::shared_ptr<const Node> left, right;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

class Parser {
public:
  Parser(const std::string& text, int dimension) : text_(text), n_(dimension) {}

  NodePtr run() {
    NodePtr e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression: " + what + " at offset " +
                                std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr expression() {
    NodePtr e = term();
    while (true) {
      if (consume('+'))
        e = binary(Node::Kind::add, e, term());
      else if (consume('-'))
        e = binary(Node::Kind::sub, e, term());
      else
        return e;
    }
  }

  NodePtr term() {
    NodePtr e = factor();
    while (true) {
      if (consume('*'))
        e = binary(Node::Kind::mul, e, factor());
      else if (consume('/'))
        e = binary(Node::Kind::div, e, factor());
      else
        return e;
    }
  }

  NodePtr factor() {
    if (consume('-')) {
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::neg;
      node->left = factor();
      return node;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (consume('^')) {
      skip_space();
      bool negative = consume('-');
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start) fail("integer exponent expected");
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::pow;
      node->exponent = std::stoi(text_.substr(start, pos_ - start));
      if (negative) node->exponent = -node->exponent;
      node->left = base;
      return node;
    }
    return base;
  }

  NodePtr atom() {
    skip_space();
    if (consume('(')) {
      NodePtr e = expression();
      if (!consume(')')) fail("missing ')'");
      return e;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("unexpected character");
  }

  NodePtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
      ++pos_;
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::constant;
    try {
      node->value = std::stod(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("malformed number");
    }
    return node;
  }

  NodePtr name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string id = text_.substr(start, pos_ - start);
    if (id == "exp") {
      if (!consume('(')) fail("exp requires '('");
      NodePtr arg = expression();
      if (!consume(')')) fail("missing ')'");
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::exp_fn;
      node->left = arg;
      return node;
    }
    if (id == "pi") {
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::constant;
      node->value = 3.14159265358979323846;
      return node;
    }
    if (id.size() >= 2 && id[0] == 'x') {
      const int axis = std::atoi(id.c_str() + 1);
      if (axis >= 1 && axis <= n_) {
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::coordinate;
        node->axis = axis - 1;
        return node;
      }
      fail("coordinate " + id + " outside dimension " + std::to_string(n_));
    }
    fail("unknown name \"" + id + "\" (allowed: numbers, x1..x" + std::to_string(n_) +
         ", exp, pi)");
  }

  NodePtr binary(Node::Kind kind, NodePtr l, NodePtr r) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->left = std::move(l);
    node->right = std::move(r);
    return node;
  }

  const std::string& text_;
  int n_;
  std::size_t pos_ = 0;
};

double eval_node(const Node& node, const Eigen::VectorXd& x) {
  switch (node.kind) {
    case Node::Kind::constant:
      return node.value;
    case Node::Kind::coordinate:
      return x[node.axis];
    case Node::Kind::add:
      return eval_node(*node.left, x) + eval_node(*node.right, x);
    case Node::Kind::sub:
      return eval_node(*node.left, x) - eval_node(*node.right, x);
    case Node::Kind::mul:
      return eval_node(*node.left, x) * eval_node(*node.right, x);
    case Node::Kind::div:
      return eval_node(*node.left, x) / eval_node(*node.right, x);
    case Node::Kind::neg:
      return -eval_node(*node.left, x);
    case Node::Kind::pow:
      return std::pow(eval_node(*node.left, x), node.exponent);
    case Node::Kind::exp_fn:
      return std::exp(eval_node(*node.left, x));
  }
  return 0.0;
}

}  // namespace

Expression::Expression(std::string text, std::shared_ptr<const Node> root)
    : text_(std::move(text)), root_(std::move(root)) {}

Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::Expression(const Expression&) = default;
Expression& Expression::operator=(const Expression&) = default;
Expression::~Expression() = default;

Expression Expression::parse(const std::string& text, int dimension) {
  Parser parser(text, dimension);
  return Expression(text, parser.run());
}

double Expression::evaluate(const Eigen::VectorXd& point) const {
  return eval_node(*root_, point);
}

}  // namespace vekua
