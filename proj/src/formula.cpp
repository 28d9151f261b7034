#include "goedel/formula.hpp"

#include <mutex>
#include <unordered_map>

namespace goedel {

// --- interning ---------------------------------------------------------------

namespace {

std::size_t mixh(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

template <typename T>
struct InternTable {
  std::mutex m;
  std::unordered_multimap<std::size_t, std::shared_ptr<const T>> table;
};

InternTable<FOTerm>& term_table() {
  static auto* t = new InternTable<FOTerm>;
  return *t;
}
InternTable<Formula>& formula_table() {
  static auto* t = new InternTable<Formula>;
  return *t;
}

}  // namespace

struct FOTerm::MakeKey {
  static FOTermPtr make(FOTermKind k, std::uint64_t v, Nat c, FOTermPtr a,
                        FOTermPtr b) {
    std::size_t h = mixh((std::size_t)k + 11, v);
    h = mixh(h, c.hash());
    if (a) h = mixh(h, (std::size_t)(std::uintptr_t)a.get());
    if (b) h = mixh(h, (std::size_t)(std::uintptr_t)b.get());
    auto& tab = term_table();
    std::lock_guard<std::mutex> g(tab.m);
    auto [lo, hi] = tab.table.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      const FOTerm& e = *it->second;
      if (e.kind_ == k && e.var_ == v && e.a_ == a && e.b_ == b &&
          e.count_ == c)
        return it->second;
    }
    FOTermPtr t(new FOTerm(k, v, std::move(c), std::move(a), std::move(b)));
    tab.table.emplace(h, t);
    return t;
  }
};

const FOTermPtr& FOTerm::zero() {
  static FOTermPtr t =
      MakeKey::make(FOTermKind::Zero, 0, Nat(), nullptr, nullptr);
  return t;
}
FOTermPtr FOTerm::var(std::uint64_t k) {
  return MakeKey::make(FOTermKind::Var, k, Nat(), nullptr, nullptr);
}
FOTermPtr FOTerm::succ_n(Nat count, FOTermPtr t) {
  if (count.is_zero()) return t;
  if (t->kind() == FOTermKind::Succ) {
    Nat merged = count + t->succ_count();
    return MakeKey::make(FOTermKind::Succ, 0, std::move(merged), t->left(),
                         nullptr);
  }
  return MakeKey::make(FOTermKind::Succ, 0, std::move(count), std::move(t),
                       nullptr);
}
FOTermPtr FOTerm::succ(FOTermPtr t) { return succ_n(Nat(1), std::move(t)); }
FOTermPtr FOTerm::plus(FOTermPtr t, FOTermPtr u) {
  return MakeKey::make(FOTermKind::Plus, 0, Nat(), std::move(t), std::move(u));
}
FOTermPtr FOTerm::times(FOTermPtr t, FOTermPtr u) {
  return MakeKey::make(FOTermKind::Times, 0, Nat(), std::move(t),
                       std::move(u));
}
FOTermPtr FOTerm::numeral(Nat n) { return succ_n(std::move(n), zero()); }

std::optional<Nat> numeral_value(const FOTermPtr& t) {
  if (t->kind() == FOTermKind::Zero) return Nat();
  if (t->kind() == FOTermKind::Succ &&
      t->left()->kind() == FOTermKind::Zero)
    return t->succ_count();
  return std::nullopt;
}

struct Formula::MakeKey {
  static FormulaPtr make(FormulaKind k, std::uint64_t tag, FOTermPtr t,
                         FOTermPtr u, FormulaPtr f, FormulaPtr g) {
    std::size_t h = mixh((std::size_t)k + 31, tag);
    for (const void* p : {(const void*)t.get(), (const void*)u.get(),
                          (const void*)f.get(), (const void*)g.get()})
      h = mixh(h, (std::size_t)(std::uintptr_t)p);
    auto& tab = formula_table();
    std::lock_guard<std::mutex> gd(tab.m);
    auto [lo, hi] = tab.table.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      const Formula& e = *it->second;
      if (e.kind_ == k && e.tag_ == tag && e.t_ == t && e.u_ == u &&
          e.f_ == f && e.g_ == g)
        return it->second;
    }
    FormulaPtr r(new Formula(k, tag, std::move(t), std::move(u), std::move(f),
                             std::move(g)));
    tab.table.emplace(h, r);
    return r;
  }
};

FormulaPtr Formula::eq(FOTermPtr t, FOTermPtr u) {
  return MakeKey::make(FormulaKind::Eq, 0, std::move(t), std::move(u),
                       nullptr, nullptr);
}
FormulaPtr Formula::atom(std::uint64_t tag, FOTermPtr t, FOTermPtr u) {
  return MakeKey::make(FormulaKind::Atom, tag, std::move(t), std::move(u),
                       nullptr, nullptr);
}
FormulaPtr Formula::consys(std::uint64_t tag) {
  return MakeKey::make(FormulaKind::Consys, tag, nullptr, nullptr, nullptr,
                       nullptr);
}
FormulaPtr Formula::lnot(FormulaPtr f) {
  return MakeKey::make(FormulaKind::Not, 0, nullptr, nullptr, std::move(f),
                       nullptr);
}
FormulaPtr Formula::imp(FormulaPtr f, FormulaPtr g) {
  return MakeKey::make(FormulaKind::Imp, 0, nullptr, nullptr, std::move(f),
                       std::move(g));
}
FormulaPtr Formula::all(std::uint64_t var, FormulaPtr f) {
  return MakeKey::make(FormulaKind::All, var, nullptr, nullptr, std::move(f),
                       nullptr);
}

// --- variables ----------------------------------------------------------------

std::set<std::uint64_t> term_variables(const FOTermPtr& t) {
  std::set<std::uint64_t> out;
  switch (t->kind()) {
    case FOTermKind::Var: out.insert(t->var_index()); break;
    case FOTermKind::Zero: break;
    case FOTermKind::Succ: out = term_variables(t->left()); break;
    case FOTermKind::Plus:
    case FOTermKind::Times: {
      out = term_variables(t->left());
      auto r = term_variables(t->right());
      out.insert(r.begin(), r.end());
      break;
    }
  }
  return out;
}

namespace {
void free_vars_into(const FormulaPtr& f, std::set<std::uint64_t>& bound,
                    std::set<std::uint64_t>& out) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Atom: {
      for (const FOTermPtr& t : {f->term0(), f->term1()})
        for (std::uint64_t v : term_variables(t))
          if (!bound.count(v)) out.insert(v);
      break;
    }
    case FormulaKind::Consys:
      break;
    case FormulaKind::Not:
      free_vars_into(f->sub0(), bound, out);
      break;
    case FormulaKind::Imp:
      free_vars_into(f->sub0(), bound, out);
      free_vars_into(f->sub1(), bound, out);
      break;
    case FormulaKind::All: {
      bool was = bound.count(f->bound_var());
      bound.insert(f->bound_var());
      free_vars_into(f->sub0(), bound, out);
      if (!was) bound.erase(f->bound_var());
      break;
    }
  }
}
}  // namespace

std::set<std::uint64_t> free_variables(const FormulaPtr& f) {
  std::set<std::uint64_t> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

// --- substitution --------------------------------------------------------------

FOTermPtr substitute_term(const FOTermPtr& u, std::uint64_t k,
                          const FOTermPtr& t) {
  switch (u->kind()) {
    case FOTermKind::Var: return u->var_index() == k ? t : u;
    case FOTermKind::Zero: return u;
    case FOTermKind::Succ:
      return FOTerm::succ_n(u->succ_count(), substitute_term(u->left(), k, t));
    case FOTermKind::Plus:
      return FOTerm::plus(substitute_term(u->left(), k, t),
                          substitute_term(u->right(), k, t));
    case FOTermKind::Times:
      return FOTerm::times(substitute_term(u->left(), k, t),
                           substitute_term(u->right(), k, t));
  }
  return u;
}

bool free_for(const FOTermPtr& t, std::uint64_t k, const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Atom:
    case FormulaKind::Consys:
      return true;
    case FormulaKind::Not:
      return free_for(t, k, f->sub0());
    case FormulaKind::Imp:
      return free_for(t, k, f->sub0()) && free_for(t, k, f->sub1());
    case FormulaKind::All: {
      std::uint64_t x = f->bound_var();
      if (x == k) return true;  // k not free below
      if (!free_variables(f->sub0()).count(k)) return true;
      if (term_variables(t).count(x)) return false;
      return free_for(t, k, f->sub0());
    }
  }
  return true;
}

FormulaPtr substitute(const FormulaPtr& f, std::uint64_t k,
                      const FOTermPtr& t) {
  switch (f->kind()) {
    case FormulaKind::Eq:
      return Formula::eq(substitute_term(f->term0(), k, t),
                         substitute_term(f->term1(), k, t));
    case FormulaKind::Atom:
      return Formula::atom(f->tag(), substitute_term(f->term0(), k, t),
                           substitute_term(f->term1(), k, t));
    case FormulaKind::Consys:
      return f;
    case FormulaKind::Not:
      return Formula::lnot(substitute(f->sub0(), k, t));
    case FormulaKind::Imp:
      return Formula::imp(substitute(f->sub0(), k, t),
                          substitute(f->sub1(), k, t));
    case FormulaKind::All: {
      std::uint64_t x = f->bound_var();
      if (x == k) return f;  // bound occurrence
      if (!free_variables(f->sub0()).count(k)) return f;
      if (term_variables(t).count(x))
        throw std::invalid_argument(
            "substitute: term is not free for the variable (capture)");
      return Formula::all(x, substitute(f->sub0(), k, t));
    }
  }
  return f;
}

// --- Godel numbering ------------------------------------------------------------

Nat gn_term(const FOTermPtr& t) {
  switch (t->kind()) {
    case FOTermKind::Zero: return Nat(0);
    case FOTermKind::Var: return Nat(t->var_index()).mul_u64(4).add_u64(1);
    case FOTermKind::Succ: {
      if (!t->succ_count().fits_u64())
        throw ResourceError("gn_term: successor chain too long to number");
      return Nat::affine_pow(4, 2, t->succ_count().as_u64(),
                             gn_term(t->left()));
    }
    case FOTermKind::Plus:
      return Nat::pair(gn_term(t->left()), gn_term(t->right()))
          .mul_u64(4)
          .add_u64(3);
    case FOTermKind::Times:
      return Nat::pair(gn_term(t->left()), gn_term(t->right()))
          .mul_u64(4)
          .add_u64(4);
  }
  throw std::logic_error("unreachable term kind");
}

FOTermPtr decode_term(const Nat& n0) {
  Nat n = n0;
  Nat succs;
  while (true) {
    if (n.is_zero()) return FOTerm::succ_n(succs, FOTerm::zero());
    Nat m = n.pred();
    auto [q, r] = m.divmod_u64(4);
    switch (r) {
      case 0: {
        if (!q.fits_u64())
          throw ResourceError("decode_term: variable index too large");
        return FOTerm::succ_n(succs, FOTerm::var(q.as_u64()));
      }
      case 1:
        succs = succs.succ();
        n = q;
        continue;
      case 2: {
        auto [a, b] = q.unpair();
        return FOTerm::succ_n(succs,
                              FOTerm::plus(decode_term(a), decode_term(b)));
      }
      default: {
        auto [a, b] = q.unpair();
        return FOTerm::succ_n(succs,
                              FOTerm::times(decode_term(a), decode_term(b)));
      }
    }
  }
}

Nat gn_formula(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
      return Nat::pair(gn_term(f->term0()), gn_term(f->term1())).mul_u64(5);
    case FormulaKind::Atom:
      return Nat::pair(Nat(f->tag()),
                       Nat::pair(gn_term(f->term0()), gn_term(f->term1())))
          .mul_u64(5)
          .add_u64(1);
    case FormulaKind::Consys:
      return Nat::pair(Nat(0), Nat::pair(Nat(f->tag()), Nat(0)))
          .mul_u64(5)
          .add_u64(1);
    case FormulaKind::Not:
      return gn_formula(f->sub0()).mul_u64(5).add_u64(2);
    case FormulaKind::Imp:
      return Nat::pair(gn_formula(f->sub0()), gn_formula(f->sub1()))
          .mul_u64(5)
          .add_u64(3);
    case FormulaKind::All:
      return Nat::pair(Nat(f->bound_var()), gn_formula(f->sub0()))
          .mul_u64(5)
          .add_u64(4);
  }
  throw std::logic_error("unreachable formula kind");
}

FormulaPtr decode_formula(const Nat& n) {
  auto [q, r] = n.divmod_u64(5);
  switch (r) {
    case 0: {
      auto [a, b] = q.unpair();
      return Formula::eq(decode_term(a), decode_term(b));
    }
    case 1: {
      auto [k, rest] = q.unpair();
      auto [tc, uc] = rest.unpair();
      if (k.is_zero() && uc.is_zero()) {
        if (!tc.fits_u64())
          throw ResourceError("decode_formula: consys tag too large");
        return Formula::consys(tc.as_u64());
      }
      if (!k.fits_u64())
        throw ResourceError("decode_formula: atom tag too large");
      return Formula::atom(k.as_u64(), decode_term(tc), decode_term(uc));
    }
    case 2:
      return Formula::lnot(decode_formula(q));
    case 3: {
      auto [a, b] = q.unpair();
      return Formula::imp(decode_formula(a), decode_formula(b));
    }
    default: {
      auto [k, body] = q.unpair();
      if (!k.fits_u64())
        throw ResourceError("decode_formula: bound variable too large");
      return Formula::all(k.as_u64(), decode_formula(body));
    }
  }
}

// --- text ----------------------------------------------------------------------

namespace {
constexpr std::uint64_t kSuccExpandLimit = 32;
}

std::string print_fo_term(const FOTermPtr& t) {
  switch (t->kind()) {
    case FOTermKind::Var: return "v" + std::to_string(t->var_index());
    case FOTermKind::Zero: return "0";
    case FOTermKind::Succ: {
      const Nat& c = t->succ_count();
      if (c.fits_u64() && c.as_u64() <= kSuccExpandLimit) {
        std::string out;
        std::uint64_t k = c.as_u64();
        for (std::uint64_t i = 0; i < k; ++i) out += "S(";
        out += print_fo_term(t->left());
        out.append(k, ')');
        return out;
      }
      return "S^" + c.to_decimal() + "(" + print_fo_term(t->left()) + ")";
    }
    case FOTermKind::Plus:
      return "(" + print_fo_term(t->left()) + " + " +
             print_fo_term(t->right()) + ")";
    case FOTermKind::Times:
      return "(" + print_fo_term(t->left()) + " * " +
             print_fo_term(t->right()) + ")";
  }
  return "";
}

std::string print_formula(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
      return "(" + print_fo_term(f->term0()) + " = " +
             print_fo_term(f->term1()) + ")";
    case FormulaKind::Atom:
      return "A" + std::to_string(f->tag()) + "(" +
             print_fo_term(f->term0()) + ", " + print_fo_term(f->term1()) +
             ")";
    case FormulaKind::Consys:
      return "Consys" + std::to_string(f->tag());
    case FormulaKind::Not:
      return "~" + print_formula(f->sub0());
    case FormulaKind::Imp:
      return "(" + print_formula(f->sub0()) + " -> " +
             print_formula(f->sub1()) + ")";
    case FormulaKind::All:
      return "all v" + std::to_string(f->bound_var()) + ". " +
             print_formula(f->sub0());
  }
  return "";
}

namespace {

struct FormulaParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("expected " + expected, pos);
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
  }
  bool eat(std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view word) {
    if (!eat(word)) fail("'" + std::string(word) + "'");
  }
  std::uint64_t parse_number() {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (std::uint64_t)(text[pos] - '0');
      ++pos;
    }
    if (pos == start) fail("number");
    return v;
  }

  FOTermPtr parse_term() {
    skip_ws();
    if (pos >= text.size()) fail("term");
    char c = text[pos];
    if (c == '0') {
      ++pos;
      return FOTerm::zero();
    }
    if (c == 'v') {
      ++pos;
      return FOTerm::var(parse_number());
    }
    if (c == 'S') {
      ++pos;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
          ++pos;
        if (pos == start) fail("successor count");
        Nat count = Nat::from_decimal(text.substr(start, pos - start));
        expect("(");
        FOTermPtr inner = parse_term();
        expect(")");
        return FOTerm::succ_n(std::move(count), std::move(inner));
      }
      expect("(");
      FOTermPtr inner = parse_term();
      expect(")");
      return FOTerm::succ(std::move(inner));
    }
    if (c == '(') {
      ++pos;
      FOTermPtr left = parse_term();
      skip_ws();
      if (eat("+")) {
        FOTermPtr right = parse_term();
        expect(")");
        return FOTerm::plus(std::move(left), std::move(right));
      }
      if (eat("*")) {
        FOTermPtr right = parse_term();
        expect(")");
        return FOTerm::times(std::move(left), std::move(right));
      }
      fail("'+' or '*'");
    }
    fail("term");
  }

  FormulaPtr parse() {
    skip_ws();
    if (eat("all")) {
      skip_ws();
      if (pos >= text.size() || text[pos] != 'v') fail("bound variable");
      ++pos;
      std::uint64_t k = parse_number();
      expect(".");
      FormulaPtr body = parse();
      return Formula::all(k, std::move(body));
    }
    if (eat("~")) return Formula::lnot(parse());
    if (eat("Consys")) return Formula::consys(parse_number());
    skip_ws();
    if (pos < text.size() && text[pos] == 'A' && pos + 1 < text.size() &&
        text[pos + 1] >= '0' && text[pos + 1] <= '9') {
      ++pos;
      std::uint64_t tag = parse_number();
      expect("(");
      FOTermPtr t = parse_term();
      expect(",");
      FOTermPtr u = parse_term();
      expect(")");
      return Formula::atom(tag, std::move(t), std::move(u));
    }
    if (pos < text.size() && text[pos] == '(') {
      // either (f -> g) or (t = u); try the formula reading first
      std::size_t save = pos;
      ++pos;
      try {
        FormulaPtr f = parse();
        expect("->");
        FormulaPtr g = parse();
        expect(")");
        return Formula::imp(std::move(f), std::move(g));
      } catch (const ParseError&) {
        pos = save;
      }
      ++pos;
      FOTermPtr t = parse_term();
      expect("=");
      FOTermPtr u = parse_term();
      expect(")");
      return Formula::eq(std::move(t), std::move(u));
    }
    fail("formula");
  }
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  FormulaParser p{text};
  FormulaPtr f = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing characters after formula", p.pos);
  return f;
}

}  // namespace goedel
