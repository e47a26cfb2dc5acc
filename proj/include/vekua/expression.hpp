#pragma once

#include <Eigen/Core>

#include <memory>
#include <string>

namespace vekua {

/// Tiny arithmetic expression over grid coordinates: numbers, x1..x9, + - * /,
/// integer ^, parentheses and exp(). Gaussian bumps are spelled via exp of a
/// polynomial. No other names are accepted, so configs cannot smuggle code.
class Expression {
public:
  static Expression parse(const std::string& text, int dimension);

  double evaluate(const Eigen::VectorXd& point) const;
  const std::string& text() const { return text_; }

  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;
  Expression(const Expression&);
  Expression& operator=(const Expression&);
  ~Expression();

  struct Node;

private:
  Expression(std::string text, std::shared_ptr<const Node> root);
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace vekua
