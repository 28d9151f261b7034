#include "goedel/term.hpp"

#include <mutex>
#include <unordered_map>

namespace goedel {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct Intern {
  std::mutex m;
  std::unordered_multimap<std::size_t, TermPtr> table;
};

Intern& intern() {
  static Intern* i = new Intern;
  return *i;
}

bool keys_equal(const Term& t, TermKind k, const Nat& v, const TermPtr& a,
                const TermPtr& b, const TermPtr& c) {
  if (t.kind() != k || t.child0() != a || t.child1() != b || t.child2() != c)
    return false;
  if (k != TermKind::Const) return true;
  return t.value() == v;
}

}  // namespace

struct Term::MakeKey {
  static TermPtr make(TermKind k, Nat v, TermPtr a, TermPtr b, TermPtr c) {
    std::size_t h = mix(static_cast<std::size_t>(k) + 1, v.hash());
    if (a) h = mix(h, reinterpret_cast<std::size_t>(a.get()));
    if (b) h = mix(h, reinterpret_cast<std::size_t>(b.get()));
    if (c) h = mix(h, reinterpret_cast<std::size_t>(c.get()));
    unsigned height = 1;
    for (const TermPtr* ch : {&a, &b, &c})
      if (*ch) height = std::max(height, (*ch)->height() + 1);
    Intern& in = intern();
    std::lock_guard<std::mutex> g(in.m);
    auto [lo, hi] = in.table.equal_range(h);
    for (auto it = lo; it != hi; ++it)
      if (keys_equal(*it->second, k, v, a, b, c)) return it->second;
    TermPtr t(new Term(k, std::move(v), std::move(a), std::move(b),
                       std::move(c), h, height));
    in.table.emplace(h, t);
    return t;
  }
};

namespace {
TermPtr make_nullary(TermKind k) {
  return Term::MakeKey::make(k, Nat(), nullptr, nullptr, nullptr);
}
}  // namespace

const TermPtr& Term::zero() {
  static TermPtr t = make_nullary(TermKind::Zero);
  return t;
}
const TermPtr& Term::succ() {
  static TermPtr t = make_nullary(TermKind::Succ);
  return t;
}
const TermPtr& Term::pred() {
  static TermPtr t = make_nullary(TermKind::Pred);
  return t;
}
const TermPtr& Term::id() {
  static TermPtr t = make_nullary(TermKind::Id);
  return t;
}
const TermPtr& Term::proj1() {
  static TermPtr t = make_nullary(TermKind::Proj1);
  return t;
}
const TermPtr& Term::proj2() {
  static TermPtr t = make_nullary(TermKind::Proj2);
  return t;
}
const TermPtr& Term::univ() {
  static TermPtr t = make_nullary(TermKind::Univ);
  return t;
}
TermPtr Term::constant(Nat n) {
  return MakeKey::make(TermKind::Const, std::move(n), nullptr, nullptr,
                       nullptr);
}
TermPtr Term::mu(TermPtr body) {
  return MakeKey::make(TermKind::Mu, Nat(), std::move(body), nullptr, nullptr);
}
TermPtr Term::pair(TermPtr f, TermPtr g) {
  return MakeKey::make(TermKind::Pair, Nat(), std::move(f), std::move(g),
                       nullptr);
}
TermPtr Term::comp(TermPtr f, TermPtr g) {
  return MakeKey::make(TermKind::Comp, Nat(), std::move(f), std::move(g),
                       nullptr);
}
TermPtr Term::rec(TermPtr base, TermPtr step) {
  return MakeKey::make(TermKind::Rec, Nat(), std::move(base), std::move(step),
                       nullptr);
}
TermPtr Term::ifz(TermPtr cond, TermPtr then, TermPtr els) {
  return MakeKey::make(TermKind::IfZ, Nat(), std::move(cond), std::move(then),
                       std::move(els));
}

// --- printing ---------------------------------------------------------------

namespace {
void print_into(const TermPtr& t, std::string& out) {
  switch (t->kind()) {
    case TermKind::Zero: out += "zero"; return;
    case TermKind::Succ: out += "succ"; return;
    case TermKind::Pred: out += "pred"; return;
    case TermKind::Id: out += "id"; return;
    case TermKind::Proj1: out += "p1"; return;
    case TermKind::Proj2: out += "p2"; return;
    case TermKind::Univ: out += "univ"; return;
    case TermKind::Const:
      out += "const(";
      out += t->value().to_text();
      out += ')';
      return;
    case TermKind::Mu:
      out += "mu(";
      print_into(t->child0(), out);
      out += ')';
      return;
    case TermKind::Pair:
    case TermKind::Comp:
    case TermKind::Rec:
      out += t->kind() == TermKind::Pair   ? "pair("
             : t->kind() == TermKind::Comp ? "comp("
                                           : "rec(";
      print_into(t->child0(), out);
      out += ',';
      print_into(t->child1(), out);
      out += ')';
      return;
    case TermKind::IfZ:
      out += "ifz(";
      print_into(t->child0(), out);
      out += ',';
      print_into(t->child1(), out);
      out += ',';
      print_into(t->child2(), out);
      out += ')';
      return;
  }
}
}  // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  print_into(t, out);
  return out;
}

// --- parsing ----------------------------------------------------------------

namespace {

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("expected " + expected, pos);
  }
  bool eat(std::string_view word) {
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("'") + c + "'");
    ++pos;
  }

  // A numeral is decimal digits or one of the numeral expression forms
  // p(...), a(...), w(...), s(...). Scan its extent, delegate to Nat.
  Nat parse_nat() {
    std::size_t start = pos;
    if (pos < text.size() &&
        (text[pos] == 'p' || text[pos] == 'a' || text[pos] == 'w' ||
         text[pos] == 's')) {
      ++pos;
      if (pos >= text.size() || text[pos] != '(') fail("natural number");
      int depth = 1;
      ++pos;
      while (pos < text.size() && depth > 0) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')') --depth;
        ++pos;
      }
      if (depth != 0) fail("')'");
    } else {
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    }
    if (pos == start) fail("natural number");
    try {
      return Nat::from_text(text.substr(start, pos - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.offset);
    }
  }

  TermPtr parse() {
    if (eat("zero")) return Term::zero();
    if (eat("succ")) return Term::succ();
    if (eat("pred")) return Term::pred();
    if (eat("pair(")) return binary(&Term::pair);
    if (eat("p1")) return Term::proj1();
    if (eat("p2")) return Term::proj2();
    if (eat("id")) return Term::id();
    if (eat("univ")) return Term::univ();
    if (eat("const(")) {
      Nat n = parse_nat();
      expect(')');
      return Term::constant(std::move(n));
    }
    if (eat("mu(")) {
      TermPtr body = parse();
      expect(')');
      return Term::mu(std::move(body));
    }
    if (eat("comp(")) return binary(&Term::comp);
    if (eat("rec(")) return binary(&Term::rec);
    if (eat("ifz(")) {
      TermPtr c = parse();
      expect(',');
      TermPtr a = parse();
      expect(',');
      TermPtr b = parse();
      expect(')');
      return Term::ifz(std::move(c), std::move(a), std::move(b));
    }
    fail("term keyword");
  }

  TermPtr binary(TermPtr (*ctor)(TermPtr, TermPtr)) {
    TermPtr f = parse();
    expect(',');
    TermPtr g = parse();
    expect(')');
    return ctor(std::move(f), std::move(g));
  }
};

}  // namespace

TermPtr parse_term(std::string_view text) {
  TermParser p{text};
  TermPtr t = p.parse();
  if (p.pos != text.size())
    throw ParseError("trailing characters after term", p.pos);
  return t;
}

}  // namespace goedel
