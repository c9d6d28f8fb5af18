#include <cctype>

#include "sumprod/sets.hpp"

namespace sumprod {

SetExpr SetExpr::leaf(std::string name) {
  SetExpr e;
  e.kind_ = Kind::leaf;
  e.name_ = std::move(name);
  return e;
}

SetExpr SetExpr::binary(SetOp op, SetExpr lhs, SetExpr rhs) {
  SetExpr e;
  e.kind_ = Kind::binary;
  e.op_ = op;
  e.lhs_ = std::make_shared<const SetExpr>(std::move(lhs));
  e.rhs_ = std::make_shared<const SetExpr>(std::move(rhs));
  return e;
}

SetExpr SetExpr::shift(SetExpr inner, std::int64_t amount) {
  SetExpr e;
  e.kind_ = Kind::shift;
  e.scalar_ = amount;
  e.lhs_ = std::make_shared<const SetExpr>(std::move(inner));
  return e;
}

SetExpr SetExpr::dilate(SetExpr inner, std::int64_t factor) {
  SetExpr e;
  e.kind_ = Kind::dilate;
  e.scalar_ = factor;
  e.lhs_ = std::make_shared<const SetExpr>(std::move(inner));
  return e;
}

SetExpr SetExpr::invert(SetExpr inner) {
  SetExpr e;
  e.kind_ = Kind::invert;
  e.lhs_ = std::make_shared<const SetExpr>(std::move(inner));
  return e;
}

std::string SetExpr::to_string() const {
  switch (kind_) {
    case Kind::leaf: return name_;
    case Kind::binary: {
      const char* sym = op_ == SetOp::sum    ? "+"
                        : op_ == SetOp::diff ? "-"
                        : op_ == SetOp::prod ? "*"
                                             : "/";
      return "(" + lhs_->to_string() + sym + rhs_->to_string() + ")";
    }
    case Kind::shift:
      return "shift(" + lhs_->to_string() + "," + std::to_string(scalar_) + ")";
    case Kind::dilate:
      return "dilate(" + lhs_->to_string() + "," + std::to_string(scalar_) + ")";
    case Kind::invert: return "inv(" + lhs_->to_string() + ")";
  }
  return "?";
}

FpSet SetExpr::eval(const FpSet& base) const {
  const Prime& p = base.prime();
  switch (kind_) {
    case Kind::leaf: return base;
    case Kind::binary:
      return combine(lhs_->eval(base), rhs_->eval(base), op_);
    case Kind::shift:
      return dilate_translate(lhs_->eval(base), Elem{1}, p.elem(scalar_));
    case Kind::dilate:
      return dilate_translate(lhs_->eval(base), p.elem(scalar_), Elem{0});
    case Kind::invert: return invert_elements(lhs_->eval(base));
  }
  throw Error(ErrorKind::InvalidArgument, "bad expression node");
}

FpSet eval_expr(const SetExpr& expr, const FpSet& base) {
  return expr.eval(base);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SetExpr parse() {
    SetExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" +
                    std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (begin == pos_) fail("expected a name");
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t begin = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected an integer");
    try {
      return std::stoll(std::string(text_.substr(begin, pos_ - begin)));
    } catch (const std::exception&) {
      fail("bad integer");
    }
  }

  SetExpr expr() {
    SetExpr lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = SetExpr::binary(c == '+' ? SetOp::sum : SetOp::diff, std::move(lhs), term());
    }
  }

  bool starts_factor(char c) const {
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  SetExpr term() {
    SetExpr lhs = factor();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        lhs = SetExpr::binary(c == '*' ? SetOp::prod : SetOp::ratio, std::move(lhs), factor());
      } else if (starts_factor(c)) {
        lhs = SetExpr::binary(SetOp::prod, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  SetExpr factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      SetExpr inner = expr();
      expect(')');
      return inner;
    }
    const std::string name = identifier();
    if (peek() == '(' && (name == "inv" || name == "shift" || name == "dilate")) {
      ++pos_;
      SetExpr inner = expr();
      if (name == "inv") {
        expect(')');
        return SetExpr::invert(std::move(inner));
      }
      expect(',');
      const std::int64_t k = integer();
      expect(')');
      return name == "shift" ? SetExpr::shift(std::move(inner), k)
                             : SetExpr::dilate(std::move(inner), k);
    }
    return SetExpr::leaf(name);
  }
};

}  // namespace

SetExpr SetExpr::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace sumprod
