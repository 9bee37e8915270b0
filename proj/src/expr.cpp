#include "nichols/expr.hpp"

#include <cctype>

#include "nichols/errors.hpp"

namespace nichols {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  auto eq = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  switch (a.kind) {
    case Expr::Kind::Atom: return a.label == b.label;
    case Expr::Kind::Scale: return a.factor == b.factor && eq(a.lhs, b.lhs);
    case Expr::Kind::Dual: return eq(a.lhs, b.lhs);
    default: return eq(a.lhs, b.lhs) && eq(a.rhs, b.rhs);
  }
}

namespace {

ExprPtr node(Expr::Kind k, ExprPtr l, ExprPtr r = nullptr, long long f = 0) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  e->factor = f;
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (i_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return e;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", i_);
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (eat('+')) e = node(Expr::Kind::Sum, e, term());
    return e;
  }
  ExprPtr term() {
    ExprPtr e = factor();
    while (eat('*')) e = node(Expr::Kind::Tensor, e, factor());
    return e;
  }
  ExprPtr factor() {
    skip();
    if (i_ >= s_.size()) throw SyntaxError("unexpected end of input", i_);
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      long long k = 0;
      try {
        k = std::stoll(s_.substr(start, i_ - start));
      } catch (const std::exception&) {
        throw SyntaxError("integer out of range", start);
      }
      expect('*');
      return node(Expr::Kind::Scale, factor(), nullptr, k);
    }
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string head = s_.substr(start, i_ - start);
      if (head == "dual") {
        expect('(');
        ExprPtr e = expr();
        expect(')');
        return node(Expr::Kind::Dual, e);
      }
      skip();
      if (i_ >= s_.size() || s_[i_] != '(') throw SyntaxError("expected '(' after '" + head + "'", i_);
      std::size_t close = s_.find(')', i_);
      if (close == std::string::npos) throw SyntaxError("unterminated label", start);
      std::string token = s_.substr(start, close + 1 - start);
      i_ = close + 1;
      auto e = std::make_shared<Expr>();
      e->label = Label::parse(token);
      return e;
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", i_);
  }
};

bool atomic(const Expr& e) { return e.kind == Expr::Kind::Atom || e.kind == Expr::Kind::Dual; }

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) {
  auto paren = [](const Expr& x) { return "(" + print_expr(x) + ")"; };
  switch (e.kind) {
    case Expr::Kind::Atom: return e.label.to_string();
    case Expr::Kind::Dual: return "dual(" + print_expr(*e.lhs) + ")";
    case Expr::Kind::Scale:
      return std::to_string(e.factor) + "*" + (atomic(*e.lhs) || e.lhs->kind == Expr::Kind::Scale ? print_expr(*e.lhs) : paren(*e.lhs));
    case Expr::Kind::Tensor: {
      std::string l = e.lhs->kind == Expr::Kind::Sum ? paren(*e.lhs) : print_expr(*e.lhs);
      bool wrap = e.rhs->kind == Expr::Kind::Sum || e.rhs->kind == Expr::Kind::Tensor;
      return l + "*" + (wrap ? paren(*e.rhs) : print_expr(*e.rhs));
    }
    case Expr::Kind::Sum: {
      std::string r = e.rhs->kind == Expr::Kind::Sum ? paren(*e.rhs) : print_expr(*e.rhs);
      return print_expr(*e.lhs) + " + " + r;
    }
  }
  return {};
}

Module eval_module(const Expr& e, AlgebraPtr alg) {
  switch (e.kind) {
    case Expr::Kind::Atom: return realize(e.label, alg);
    case Expr::Kind::Dual: return dual(eval_module(*e.lhs, alg));
    case Expr::Kind::Tensor: return tensor(eval_module(*e.lhs, alg), eval_module(*e.rhs, alg));
    case Expr::Kind::Sum: return direct_sum(alg, {eval_module(*e.lhs, alg), eval_module(*e.rhs, alg)});
    case Expr::Kind::Scale: {
      if (e.factor == 0) return zero_module(alg);
      Module m = eval_module(*e.lhs, alg);
      return direct_sum(alg, std::vector<Module>(static_cast<std::size_t>(e.factor), m));
    }
  }
  return zero_module(alg);
}

GreenElement eval_green(const Expr& e, const HopfAlgebra& alg) {
  switch (e.kind) {
    case Expr::Kind::Atom:
      validate_label(e.label, alg);
      return GreenElement(e.label);
    case Expr::Kind::Dual: return dual(eval_green(*e.lhs, alg));
    case Expr::Kind::Tensor: return green_mul(eval_green(*e.lhs, alg), eval_green(*e.rhs, alg), alg);
    case Expr::Kind::Sum: return eval_green(*e.lhs, alg) + eval_green(*e.rhs, alg);
    case Expr::Kind::Scale: return e.factor * eval_green(*e.lhs, alg);
  }
  return {};
}

}  // namespace nichols
