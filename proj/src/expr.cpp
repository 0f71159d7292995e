#include "schubop/expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "schubop/divdiff.hpp"
#include "schubop/error.hpp"
#include "schubop/ptilde.hpp"
#include "schubop/schubert.hpp"

namespace schubop {

struct ExprNode {
  enum class Op { Leaf, Add, Sub, Mul, Neg, Realize, Apply };
  Op op = Op::Leaf;
  ValueKind kind = ValueKind::Scalar;
  std::shared_ptr<const ExprNode> a;
  std::shared_ptr<const ExprNode> b;
  std::function<Value(int cap)> leaf;
  std::function<Value(const Value&, int cap)> apply;
  int realize_k = 0;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

struct Token {
  enum class Kind { Ident, Number, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      out.push_back({Token::Kind::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == '"') {
      const std::size_t close = s.find('"', i + 1);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated string", i);
      }
      out.push_back({Token::Kind::String, std::string(s.substr(i + 1, close - i - 1)), i});
      i = close + 1;
    } else if (std::string_view("[](),+-*|!@:^/").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

Value scalar_value(const Dyadic& c, int n) { return {ValueKind::Scalar, Polynomial::constant(c, n), SymFun(1)}; }
Value poly_value(Polynomial p) { return {ValueKind::Polynomial, std::move(p), SymFun(1)}; }
Value kernel_value(Polynomial p) { return {ValueKind::Kernel, std::move(p), SymFun(1)}; }
Value sym_value(SymFun f) { return {ValueKind::SymFun, Polynomial(1), std::move(f)}; }

Dyadic scalar_of(const Value& v) { return v.poly.is_zero() ? Dyadic(0) : v.poly.leading().coeff; }

Value promote(const Value& v, ValueKind target, int n, int cap) {
  if (v.kind == target) {
    return v;
  }
  if (v.kind == ValueKind::Scalar) {
    switch (target) {
      case ValueKind::Polynomial:
        return poly_value(v.poly);
      case ValueKind::Kernel:
        return kernel_value(embed(v.poly, 2 * n));
      case ValueKind::SymFun:
        return sym_value(SymFun::constant(scalar_of(v).to_rational(), cap));
      case ValueKind::Scalar:
        break;
    }
  }
  if (v.kind == ValueKind::Polynomial && target == ValueKind::Kernel) {
    return kernel_value(in_x(v.poly));
  }
  throw RangeError("cannot combine these values");
}

Value combine(ExprNode::Op op, const Value& x, const Value& y, ValueKind kind, int n, int cap) {
  const Value a = promote(x, kind, n, cap);
  const Value b = promote(y, kind, n, cap);
  if (kind == ValueKind::SymFun) {
    switch (op) {
      case ExprNode::Op::Add:
        return sym_value(a.sym + b.sym);
      case ExprNode::Op::Sub:
        return sym_value(a.sym - b.sym);
      default:
        return sym_value(a.sym * b.sym);
    }
  }
  Value out{kind, Polynomial(a.poly.alphabet_size()), SymFun(1)};
  switch (op) {
    case ExprNode::Op::Add:
      out.poly = a.poly + b.poly;
      break;
    case ExprNode::Op::Sub:
      out.poly = a.poly - b.poly;
      break;
    default:
      out.poly = a.poly * b.poly;
      break;
  }
  return out;
}

Value eval_node(const ExprNode& node, int n, int cap) {
  switch (node.op) {
    case ExprNode::Op::Leaf:
      return node.leaf(cap);
    case ExprNode::Op::Add:
    case ExprNode::Op::Sub:
    case ExprNode::Op::Mul:
      return combine(node.op, eval_node(*node.a, n, cap), eval_node(*node.b, n, cap), node.kind, n, cap);
    case ExprNode::Op::Neg: {
      Value v = eval_node(*node.a, n, cap);
      if (v.kind == ValueKind::SymFun) {
        v.sym = -v.sym;
      } else {
        v.poly = -v.poly;
      }
      return v;
    }
    case ExprNode::Op::Realize: {
      const Value v = promote(eval_node(*node.a, n, cap), ValueKind::SymFun, n, cap);
      return poly_value(embed(realize(v.sym, node.realize_k), n));
    }
    case ExprNode::Op::Apply:
      return node.apply(eval_node(*node.a, n, cap), cap);
  }
  throw RangeError("malformed expression");
}

class Parser {
 public:
  Parser(std::string_view text, int n) : tokens_(tokenize(text)), n_(n) {}

  NodePtr parse_all() {
    NodePtr root = pipeline();
    if (peek().kind != Token::Kind::End) {
      fail("unexpected '" + peek().text + "'");
    }
    return root;
  }

  int cap() const noexcept { return std::max(1, max_degree_); }

 private:
  struct Parsed {
    NodePtr node;
    int degree = 0;  // bound on the degree of symmetric-function values
  };

  const Token& peek() const { return tokens_[idx_]; }
  const Token& next() { return tokens_[idx_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().pos); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const { throw ParseError(what, pos); }

  bool accept(const char* punct) {
    if (peek().kind == Token::Kind::Punct && peek().text == punct) {
      ++idx_;
      return true;
    }
    return false;
  }
  void expect(const char* punct) {
    if (!accept(punct)) {
      fail(std::string("expected '") + punct + "'");
    }
  }
  int number() {
    if (peek().kind != Token::Kind::Number) {
      fail("expected a number");
    }
    const Token& t = next();
    if (t.text.size() > 6) {
      fail_at("number too large", t.pos);
    }
    return std::stoi(t.text);
  }
  std::vector<int> int_list(bool allow_negative) {
    expect("[");
    std::vector<int> out;
    if (accept("]")) {
      return out;
    }
    do {
      const bool negative = allow_negative && accept("-");
      const int v = number();
      out.push_back(negative ? -v : v);
    } while (accept(","));
    expect("]");
    return out;
  }

  void track(int degree) { max_degree_ = std::max(max_degree_, degree); }

  static ValueKind join(ValueKind a, ValueKind b, std::size_t pos) {
    if (a == b || b == ValueKind::Scalar) {
      return a;
    }
    if (a == ValueKind::Scalar) {
      return b;
    }
    if ((a == ValueKind::Polynomial && b == ValueKind::Kernel) ||
        (a == ValueKind::Kernel && b == ValueKind::Polynomial)) {
      return ValueKind::Kernel;
    }
    throw ParseError("cannot combine a symmetric function with a polynomial; realize it with !k", pos);
  }

  Parsed make_binary(ExprNode::Op op, const Parsed& x, const Parsed& y, std::size_t pos) {
    auto node = std::make_shared<ExprNode>();
    node->op = op;
    node->kind = join(x.node->kind, y.node->kind, pos);
    node->a = x.node;
    node->b = y.node;
    const int degree = op == ExprNode::Op::Mul ? x.degree + y.degree : std::max(x.degree, y.degree);
    if (node->kind == ValueKind::SymFun) {
      track(degree);
    }
    return {node, degree};
  }

  NodePtr pipeline() { return pipeline_parsed().node; }

  Parsed pipeline_parsed() {
    Parsed cur = sum();
    while (accept("|")) {
      cur = operator_applied(cur);
    }
    return cur;
  }

  Parsed sum() {
    Parsed cur = term();
    while (true) {
      const std::size_t pos = peek().pos;
      if (accept("+")) {
        cur = make_binary(ExprNode::Op::Add, cur, term(), pos);
      } else if (accept("-")) {
        cur = make_binary(ExprNode::Op::Sub, cur, term(), pos);
      } else {
        return cur;
      }
    }
  }

  Parsed term() {
    Parsed cur = factor();
    while (true) {
      const std::size_t pos = peek().pos;
      if (!accept("*")) {
        return cur;
      }
      cur = make_binary(ExprNode::Op::Mul, cur, factor(), pos);
    }
  }

  Parsed factor() {
    if (accept("-")) {
      Parsed inner = factor();
      auto node = std::make_shared<ExprNode>();
      node->op = ExprNode::Op::Neg;
      node->kind = inner.node->kind;
      node->a = inner.node;
      return {node, inner.degree};
    }
    Parsed p = primary();
    const std::size_t pos = peek().pos;
    if (accept("!")) {
      if (p.node->kind != ValueKind::SymFun && p.node->kind != ValueKind::Scalar) {
        fail_at("only symmetric functions can be realized", pos);
      }
      const int k = number();
      if (k < 1 || k > n_) {
        fail_at("realization needs 1 <= k <= n", pos);
      }
      auto node = std::make_shared<ExprNode>();
      node->op = ExprNode::Op::Realize;
      node->kind = ValueKind::Polynomial;
      node->a = p.node;
      node->realize_k = k;
      track(p.degree);
      return {node, 0};
    }
    return p;
  }

  Parsed primary() {
    if (accept("(")) {
      Parsed inner = pipeline_parsed();
      expect(")");
      return inner;
    }
    if (peek().kind == Token::Kind::Number) {
      return literal();
    }
    if (peek().kind == Token::Kind::Ident) {
      return atom();
    }
    fail(peek().kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + peek().text + "'");
  }

  static NodePtr leaf(ValueKind kind, std::function<Value(int)> f) {
    auto node = std::make_shared<ExprNode>();
    node->op = ExprNode::Op::Leaf;
    node->kind = kind;
    node->leaf = std::move(f);
    return node;
  }

  Parsed literal() {
    const Token& first = peek();
    std::string text = std::to_string(number());
    if (accept("/")) {
      text += "/" + std::to_string(number());
      if (accept("^")) {
        text += "^" + std::to_string(number());
      }
    }
    Dyadic c;
    try {
      c = Dyadic::parse(text);
    } catch (const Error& e) {
      fail_at(e.what(), first.pos);
    }
    const int n = n_;
    return {leaf(ValueKind::Scalar, [c, n](int) { return scalar_value(c, n); }), 0};
  }

  Partition partition_arg(std::size_t pos, bool strict) {
    const auto parts = int_list(false);
    try {
      Partition p(parts);
      if (strict && !p.is_strict()) {
        fail_at("expected a strict partition", pos);
      }
      return p;
    } catch (const RangeError& e) {
      fail_at(std::string("expected a partition: ") + e.what(), pos);
    }
  }

  Parsed atom() {
    const Token tok = next();
    const std::string& id = tok.text;
    const int n = n_;
    if (id == "Qt" || id == "Pt") {
      const Partition I = partition_arg(tok.pos, false);
      const bool q = id == "Qt";
      return {leaf(ValueKind::Polynomial, [I, n, q](int) { return poly_value(q ? qtilde(I, n) : ptilde(I, n)); }), 0};
    }
    if (id == "Y") {
      const auto alpha = int_list(false);
      return {leaf(ValueKind::Polynomial, [alpha, n](int) { return poly_value(schubert_Y_stable(alpha, n)); }), 0};
    }
    if (id == "x") {
      expect("^");
      auto alpha = int_list(false);
      if (static_cast<int>(alpha.size()) > n) {
        fail_at("exponent vector longer than n", tok.pos);
      }
      alpha.resize(static_cast<std::size_t>(n), 0);
      for (int v : alpha) {
        if (v > kMaxExponent) {
          fail_at("exponent too large", tok.pos);
        }
      }
      return {leaf(ValueKind::Polynomial, [alpha](int) { return poly_value(Polynomial::monomial(alpha)); }), 0};
    }
    if (id == "s") {
      const Partition lambda = partition_arg(tok.pos, false);
      expect("@");
      const int k = number();
      if (k < 1 || k > n) {
        fail_at("s[..]@k needs 1 <= k <= n", tok.pos);
      }
      if (lambda.length() > k) {
        fail_at("more parts than variables", tok.pos);
      }
      return {leaf(ValueKind::Polynomial, [lambda, k, n](int) { return poly_value(schur_S(lambda, k, n)); }), 0};
    }
    if (id == "SP" || id == "SQ") {
      const StrictPartition I(partition_arg(tok.pos, true));
      const SchurKind kind = id == "SP" ? SchurKind::P : SchurKind::Q;
      track(I.size());
      return {leaf(ValueKind::SymFun, [I, kind](int cap) { return sym_value(schur_PQ(I, cap, kind)); }), I.size()};
    }
    if (id == "p" || id == "e" || id == "q") {
      expect("[");
      const int k = number();
      expect("]");
      const Generator g = id == "p" ? Generator::P : (id == "e" ? Generator::E : Generator::Q);
      if (g == Generator::P && k == 0) {
        fail_at("p[0] is not defined", tok.pos);
      }
      track(k);
      return {leaf(ValueKind::SymFun, [g, k](int cap) { return sym_value(generator(g, k, cap)); }), k};
    }
    if (id == "XB" || id == "XD") {
      const auto image = int_list(true);
      const GroupType t = id == "XB" ? GroupType::B : GroupType::D;
      SignedPermutation w;
      try {
        w = SignedPermutation(image);
        w.require(t);
      } catch (const Error& e) {
        fail_at(e.what(), tok.pos);
      }
      if (w.size() != n) {
        fail_at("element of rank " + std::to_string(w.size()) + " for n = " + std::to_string(n), tok.pos);
      }
      return {leaf(ValueKind::Polynomial, [w, t, n](int) { return poly_value(schubert_X(w, t, n)); }), 0};
    }
    if (id == "F" || id == "K") {
      expect("@");
      const int m = number();
      expect(":");
      if (peek().kind != Token::Kind::Ident || (peek().text != "B" && peek().text != "D")) {
        fail("expected group type B or D");
      }
      const GroupType t = parse_group_type(next().text);
      if (m != n) {
        fail_at("kernel rank must equal n", tok.pos);
      }
      if (2 * n > kMaxVariables) {
        fail_at("kernel alphabet too large", tok.pos);
      }
      const bool f = id == "F";
      return {leaf(ValueKind::Kernel, [f, n, t](int) { return kernel_value(f ? kernel_F(n, t) : kernel_Ptilde(n, t)); }),
              0};
    }
    fail_at("unknown atom '" + id + "'", tok.pos);
  }

  Letter simple_letter(int i, std::size_t pos) const {
    if (i < 1 || i >= n_) {
      fail_at("d" + std::to_string(i) + " needs 1 <= i < n", pos);
    }
    return Letter::simple(i);
  }

  Parsed operator_applied(const Parsed& input) {
    if (peek().kind != Token::Kind::Ident) {
      fail("expected an operator");
    }
    const Token tok = next();
    const std::string& id = tok.text;
    const int n = n_;
    const ValueKind in = input.node->kind;
    auto node = std::make_shared<ExprNode>();
    node->op = ExprNode::Op::Apply;
    node->a = input.node;

    if (id == "Us" || id == "Ue" || id == "Ve") {
      if (in != ValueKind::SymFun && in != ValueKind::Scalar) {
        fail_at("vertex operators act on symmetric functions", tok.pos);
      }
      const Vertex v = id == "Us" ? Vertex::Us : (id == "Ue" ? Vertex::Ue : Vertex::Ve);
      node->kind = ValueKind::SymFun;
      node->apply = [v, n](const Value& x, int cap) {
        return sym_value(vertex(v, promote(x, ValueKind::SymFun, n, cap).sym));
      };
      return {node, input.degree};
    }
    if (in == ValueKind::SymFun) {
      fail_at("divided differences act on polynomials; realize with !k first", tok.pos);
    }
    std::function<Polynomial(const Polynomial&)> op;
    if (id == "d") {
      const Letter l = simple_letter(number(), tok.pos);
      op = [l](const Polynomial& f) { return apply_simple(f, l); };
    } else if (id == "d0" || id == "dh" || id == "d0c") {
      const Letter l = id == "d0" ? Letter::zero() : (id == "dh" ? Letter::heart() : Letter::zero_c());
      if (l.reach() > n) {
        fail_at(id + " needs n >= 2", tok.pos);
      }
      op = [l](const Polynomial& f) { return apply_simple(f, l); };
    } else if (id.size() > 1 && id[0] == 'd' && std::all_of(id.begin() + 1, id.end(), ::isdigit)) {
      const Letter l = simple_letter(std::stoi(id.substr(1)), tok.pos);
      op = [l](const Polynomial& f) { return apply_simple(f, l); };
    } else if (id == "dw") {
      if (peek().kind != Token::Kind::String) {
        fail("dw expects a quoted word");
      }
      const Token w = next();
      GeneratorWord word;
      try {
        word = GeneratorWord::parse(w.text, n);
      } catch (const Error& e) {
        fail_at(e.what(), w.pos);
      }
      op = [word](const Polynomial& f) { return apply_word(f, word); };
    } else if (id == "nablaB" || id == "nablaD") {
      expect("(");
      const int k = number();
      expect(")");
      const bool b = id == "nablaB";
      if (b ? k > n : 2 * k > n) {
        fail_at(b ? "nablaB(k) needs k <= n" : "nablaD(k) needs 2k <= n", tok.pos);
      }
      const GeneratorWord word = b ? nabla_B_word(k, n) : nabla_D_word(k, n);
      op = [word](const Polynomial& f) { return apply_word(f, word); };
    } else if (id == "dv") {
      if (n < 2) {
        fail_at("dv needs n >= 2", tok.pos);
      }
      const GeneratorWord word = partial_v_word(n);
      op = [word](const Polynomial& f) { return apply_word(f, word); };
    } else if (id == "dmaxA" || id == "dmaxB" || id == "dmaxD") {
      const GroupType t = id == "dmaxA" ? GroupType::A : (id == "dmaxB" ? GroupType::B : GroupType::D);
      if (t == GroupType::D && n < 2) {
        fail_at("dmaxD needs n >= 2", tok.pos);
      }
      const GeneratorWord word = reduced_word(longest(t, n), t);
      op = [word](const Polynomial& f) { return apply_word(f, word); };
    } else {
      fail_at("unknown operator '" + id + "'", tok.pos);
    }
    node->kind = in == ValueKind::Kernel ? ValueKind::Kernel : ValueKind::Polynomial;
    const ValueKind out = node->kind;
    node->apply = [op, out, n](const Value& x, int cap) {
      Value v = promote(x, out, n, cap);
      v.poly = op(v.poly);
      return v;
    };
    return {node, 0};
  }

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
  int n_;
  int max_degree_ = 0;
};

std::string sym_latex(const SymFun& f) {
  if (f.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
    const auto& [lam, c] = *it;
    const bool negative = sgn(c) < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const bool unit = mag == 1;
    if (!unit || lam.empty()) {
      out += mag.get_den() == 1 ? mag.get_num().get_str()
                                : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    }
    if (!lam.empty()) {
      out += "p_{";
      for (int i = 0; i < lam.length(); ++i) {
        out += (i ? "," : "") + std::to_string(lam[i]);
      }
      out += "}";
    }
  }
  return out;
}

std::string sym_json(const SymFun& f) {
  nlohmann::ordered_json doc;
  doc["basis"] = "p";
  doc["cap"] = f.cap();
  doc["terms"] = nlohmann::ordered_json::array();
  for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
    doc["terms"].push_back({{"lambda", it->first.parts()}, {"coeff", it->second.get_str()}});
  }
  return doc.dump();
}

std::string index_text(const StrictPartition& J) {
  std::string s;
  for (int i = 0; i < J.length(); ++i) {
    s += (i ? "," : "") + std::to_string(J[i]);
  }
  return s;
}

}  // namespace

Expression Expression::parse(std::string_view text, int n) {
  if (n < 1 || n > kMaxVariables) {
    throw RangeError("n must lie in 1.." + std::to_string(kMaxVariables));
  }
  Parser p(text, n);
  Expression e;
  e.root_ = p.parse_all();
  e.n_ = n;
  e.cap_ = p.cap();
  return e;
}

ValueKind Expression::kind() const { return root_->kind; }

Value Expression::evaluate() const { return eval_node(*root_, n_, cap_); }

OutputFormat parse_output_format(std::string_view text) {
  if (text == "plain") {
    return OutputFormat::Plain;
  }
  if (text == "json") {
    return OutputFormat::Json;
  }
  if (text == "latex") {
    return OutputFormat::Latex;
  }
  throw RangeError("unknown format '" + std::string(text) + "'");
}

std::string render(const Value& v, OutputFormat format) {
  if (v.kind == ValueKind::SymFun) {
    switch (format) {
      case OutputFormat::Plain:
        return v.sym.to_string();
      case OutputFormat::Json:
        return sym_json(v.sym);
      case OutputFormat::Latex:
        return sym_latex(v.sym);
    }
  }
  const Alphabet a = v.kind == ValueKind::Kernel ? Alphabet::Doubled : Alphabet::Single;
  switch (format) {
    case OutputFormat::Plain:
      return to_text(v.poly, a);
    case OutputFormat::Json:
      return to_json(v.poly);
    case OutputFormat::Latex:
      return to_latex(v.poly, a);
  }
  return {};
}

std::string render_expansion(const Value& v, int n, GroupType t, OutputFormat format) {
  if (t == GroupType::A) {
    throw RangeError("expansion is over the type B or D invariants");
  }
  if (v.kind == ValueKind::SymFun || v.kind == ValueKind::Kernel || v.poly.alphabet_size() != n) {
    throw MembershipError("expansion needs a symmetric polynomial in x_1..x_n");
  }
  const auto coeffs = ptilde_expand(v.poly, n, t);
  const bool q_basis = t == GroupType::B;
  const std::string name = q_basis ? "Qt" : "Pt";
  const std::string tex = q_basis ? "\\widetilde{Q}" : "\\widetilde{P}";

  if (format == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["type"] = std::string(1, to_char(t));
    doc["basis"] = name;
    doc["terms"] = nlohmann::ordered_json::array();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      const Polynomial c = q_basis ? it->second * Dyadic::pow2(-it->first.length()) : it->second;
      doc["terms"].push_back({{"index", it->first.parts()}, {"coeff", nlohmann::ordered_json::parse(to_json(c))}});
    }
    return doc.dump();
  }

  std::string out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const StrictPartition& J = it->first;
    const Polynomial c = q_basis ? it->second * Dyadic::pow2(-J.length()) : it->second;
    const bool latex = format == OutputFormat::Latex;
    const std::string basis = latex ? tex + "_{" + index_text(J) + "}" : name + "[" + index_text(J) + "]";
    std::string piece;
    bool negative = false;
    if (c.is_constant()) {
      Dyadic d = c.leading().coeff;
      negative = d.sign() < 0;
      if (negative) {
        d = -d;
      }
      const std::string num = latex ? to_latex(Polynomial::constant(d, n)) : d.to_string();
      if (J.empty()) {
        piece = num;
      } else if (d == Dyadic(1)) {
        piece = basis;
      } else {
        piece = num + (latex ? "" : "*") + basis;
      }
    } else {
      const std::string poly = latex ? to_latex(c) : to_text(c);
      if (J.empty()) {
        piece = poly;
      } else {
        piece = latex ? "\\left(" + poly + "\\right)" + basis : "(" + poly + ")*" + basis;
      }
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace schubop
