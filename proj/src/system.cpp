#include "goedel/system.hpp"

#include <sstream>

namespace goedel {

SystemPtr SystemDef::base() {
  static SystemPtr s(new SystemDef(0, nullptr, {}));
  return s;
}

SystemPtr system_at_level(SystemPtr sys, std::uint64_t k) {
  while (sys && sys->level() > k) sys = sys->below();
  if (!sys || sys->level() != k)
    throw std::invalid_argument("no such system level");
  return sys;
}

bool SystemDef::in_signature(const FormulaPtr& f) const {
  switch (f->kind()) {
    case FormulaKind::Eq: return true;
    case FormulaKind::Atom: return atom_tag_in_signature(f->tag());
    case FormulaKind::Consys: return consys_tag_in_signature(f->tag());
    case FormulaKind::Not: return in_signature(f->sub0());
    case FormulaKind::Imp:
      return in_signature(f->sub0()) && in_signature(f->sub1());
    case FormulaKind::All: return in_signature(f->sub0());
  }
  return false;
}

SystemPtr SystemDef::extend(SystemPtr below, FormulaPtr admitted_schema) {
  std::vector<FormulaPtr> admitted = below->admitted_;
  admitted.push_back(std::move(admitted_schema));
  std::uint64_t level = below->level_ + 1;
  return SystemPtr(new SystemDef(level, std::move(below), std::move(admitted)));
}

// --- axioms -------------------------------------------------------------------

const char* axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::L1: return "L1";
    case AxiomId::L2: return "L2";
    case AxiomId::L3: return "L3";
    case AxiomId::Q1: return "Q1";
    case AxiomId::Q2: return "Q2";
    case AxiomId::E1: return "E1";
    case AxiomId::E2: return "E2";
    case AxiomId::N1: return "N1";
    case AxiomId::N2: return "N2";
    case AxiomId::N3: return "N3";
    case AxiomId::N4: return "N4";
    case AxiomId::N5: return "N5";
    default: return "N6";
  }
}

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  for (int i = 1; i <= 13; ++i) {
    AxiomId id = (AxiomId)i;
    if (name == axiom_name(id)) return id;
  }
  return std::nullopt;
}

namespace {

bool is_imp(const FormulaPtr& f) { return f->kind() == FormulaKind::Imp; }
bool is_not(const FormulaPtr& f) { return f->kind() == FormulaKind::Not; }
bool is_all(const FormulaPtr& f) { return f->kind() == FormulaKind::All; }
bool is_eq(const FormulaPtr& f) { return f->kind() == FormulaKind::Eq; }
bool atomic_formula(const FormulaPtr& f) {
  return f->kind() == FormulaKind::Eq || f->kind() == FormulaKind::Atom;
}

// One S application peeled off a (possibly run-length compressed) chain.
std::optional<FOTermPtr> peel_succ(const FOTermPtr& t) {
  if (t->kind() != FOTermKind::Succ) return std::nullopt;
  Nat c = t->succ_count();
  if (c == Nat(1)) return t->left();
  return FOTerm::succ_n(c.pred(), t->left());
}

// Match u2 == u1[t/x] where x occurrences in u1 are unknown: walk both terms,
// recording what substitutes for var x; all positions must agree.
bool match_subst_term(const FOTermPtr& u1, const FOTermPtr& u2,
                      std::uint64_t x, std::optional<FOTermPtr>& binding) {
  if (u1->kind() == FOTermKind::Var && u1->var_index() == x) {
    if (binding && *binding != u2) return false;
    binding = u2;
    return true;
  }
  if (u1->kind() != u2->kind()) {
    // a compressed succ chain may split differently; peel one level
    if (u1->kind() == FOTermKind::Succ && u2->kind() == FOTermKind::Succ)
      return false;  // unreachable, kinds equal
    return false;
  }
  switch (u1->kind()) {
    case FOTermKind::Var: return u1->var_index() == u2->var_index();
    case FOTermKind::Zero: return true;
    case FOTermKind::Succ: {
      // succ counts must agree unless the variable hides underneath
      if (u1->succ_count() == u2->succ_count())
        return match_subst_term(u1->left(), u2->left(), x, binding);
      // u1 ends in var x: S^k(x) against S^m(w) with m >= k
      if (u1->left()->kind() == FOTermKind::Var &&
          u1->left()->var_index() == x &&
          Nat::compare(u2->succ_count(), u1->succ_count()) > 0) {
        FOTermPtr residue = FOTerm::succ_n(
            Nat::sub(u2->succ_count(), u1->succ_count()), u2->left());
        if (binding && *binding != residue) return false;
        binding = residue;
        return true;
      }
      return false;
    }
    case FOTermKind::Plus:
    case FOTermKind::Times:
      return match_subst_term(u1->left(), u2->left(), x, binding) &&
             match_subst_term(u1->right(), u2->right(), x, binding);
  }
  return false;
}

// Match f2 == f1[t/x] for unknown t (quantifier instantiation, Q1).
bool match_subst_formula(const FormulaPtr& f1, const FormulaPtr& f2,
                         std::uint64_t x, std::optional<FOTermPtr>& binding) {
  if (f1->kind() != f2->kind()) return false;
  switch (f1->kind()) {
    case FormulaKind::Eq:
      return match_subst_term(f1->term0(), f2->term0(), x, binding) &&
             match_subst_term(f1->term1(), f2->term1(), x, binding);
    case FormulaKind::Atom:
      return f1->tag() == f2->tag() &&
             match_subst_term(f1->term0(), f2->term0(), x, binding) &&
             match_subst_term(f1->term1(), f2->term1(), x, binding);
    case FormulaKind::Consys: return f1 == f2;
    case FormulaKind::Not:
      return match_subst_formula(f1->sub0(), f2->sub0(), x, binding);
    case FormulaKind::Imp:
      return match_subst_formula(f1->sub0(), f2->sub0(), x, binding) &&
             match_subst_formula(f1->sub1(), f2->sub1(), x, binding);
    case FormulaKind::All: {
      if (f1->bound_var() != f2->bound_var()) return false;
      if (f1->bound_var() == x) return f1 == f2;  // x bound: no substitution
      return match_subst_formula(f1->sub0(), f2->sub0(), x, binding);
    }
  }
  return false;
}

// E2 helper: lhs == A[s/x] and rhs == A[t/x] for some atomic A: positions
// must pairwise agree or be an (s, t) replacement.
bool match_replace_term(const FOTermPtr& a, const FOTermPtr& b,
                        const FOTermPtr& s, const FOTermPtr& t) {
  if (a == b) return true;
  if (a == s && b == t) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case FOTermKind::Succ:
      if (a->succ_count() == b->succ_count())
        return match_replace_term(a->left(), b->left(), s, t);
      return false;
    case FOTermKind::Plus:
    case FOTermKind::Times:
      return match_replace_term(a->left(), b->left(), s, t) &&
             match_replace_term(a->right(), b->right(), s, t);
    default:
      return false;
  }
}

bool match_replace_atomic(const FormulaPtr& lhs, const FormulaPtr& rhs,
                          const FOTermPtr& s, const FOTermPtr& t) {
  if (!atomic_formula(lhs) || lhs->kind() != rhs->kind()) return false;
  if (lhs->kind() == FormulaKind::Atom && lhs->tag() != rhs->tag())
    return false;
  return match_replace_term(lhs->term0(), rhs->term0(), s, t) &&
         match_replace_term(lhs->term1(), rhs->term1(), s, t);
}

}  // namespace

bool axiom_instance(AxiomId id, const FormulaPtr& f) {
  switch (id) {
    case AxiomId::L1: {
      // A -> (B -> A)
      if (!is_imp(f) || !is_imp(f->sub1())) return false;
      return f->sub1()->sub1() == f->sub0();
    }
    case AxiomId::L2: {
      // (A -> (B -> C)) -> ((A -> B) -> (A -> C))
      if (!is_imp(f) || !is_imp(f->sub0()) || !is_imp(f->sub1())) return false;
      const FormulaPtr& p = f->sub0();
      if (!is_imp(p->sub1())) return false;
      FormulaPtr A = p->sub0(), B = p->sub1()->sub0(), C = p->sub1()->sub1();
      const FormulaPtr& q = f->sub1();
      if (!is_imp(q->sub0()) || !is_imp(q->sub1())) return false;
      return q->sub0()->sub0() == A && q->sub0()->sub1() == B &&
             q->sub1()->sub0() == A && q->sub1()->sub1() == C;
    }
    case AxiomId::L3: {
      // (~B -> ~A) -> (A -> B)
      if (!is_imp(f) || !is_imp(f->sub0()) || !is_imp(f->sub1())) return false;
      const FormulaPtr& p = f->sub0();
      if (!is_not(p->sub0()) || !is_not(p->sub1())) return false;
      FormulaPtr B = p->sub0()->sub0(), A = p->sub1()->sub0();
      return f->sub1()->sub0() == A && f->sub1()->sub1() == B;
    }
    case AxiomId::Q1: {
      // all x. A -> A[t/x], t free for x in A
      if (!is_imp(f) || !is_all(f->sub0())) return false;
      std::uint64_t x = f->sub0()->bound_var();
      const FormulaPtr& body = f->sub0()->sub0();
      std::optional<FOTermPtr> t;
      if (!match_subst_formula(body, f->sub1(), x, t)) return false;
      if (!t) return true;  // x not free: any instantiation degenerates
      return free_for(*t, x, body);
    }
    case AxiomId::Q2: {
      // all x. (A -> B) -> (A -> all x. B), x not free in A
      if (!is_imp(f) || !is_all(f->sub0()) || !is_imp(f->sub0()->sub0()))
        return false;
      std::uint64_t x = f->sub0()->bound_var();
      FormulaPtr A = f->sub0()->sub0()->sub0();
      FormulaPtr B = f->sub0()->sub0()->sub1();
      if (!is_imp(f->sub1()) || f->sub1()->sub0() != A) return false;
      const FormulaPtr& rhs = f->sub1()->sub1();
      if (!is_all(rhs) || rhs->bound_var() != x || rhs->sub0() != B)
        return false;
      return free_variables(A).count(x) == 0;
    }
    case AxiomId::E1: {
      return is_eq(f) && f->term0() == f->term1();
    }
    case AxiomId::E2: {
      // (s = t) -> (A[s/x] -> A[t/x]) for atomic A
      if (!is_imp(f) || !is_eq(f->sub0()) || !is_imp(f->sub1())) return false;
      return match_replace_atomic(f->sub1()->sub0(), f->sub1()->sub1(),
                                  f->sub0()->term0(), f->sub0()->term1());
    }
    case AxiomId::N1: {
      // ~(S t = 0)
      if (!is_not(f) || !is_eq(f->sub0())) return false;
      return f->sub0()->term0()->kind() == FOTermKind::Succ &&
             f->sub0()->term1()->kind() == FOTermKind::Zero;
    }
    case AxiomId::N2: {
      // (S s = S t) -> (s = t)
      if (!is_imp(f) || !is_eq(f->sub0()) || !is_eq(f->sub1())) return false;
      auto s = peel_succ(f->sub0()->term0());
      auto t = peel_succ(f->sub0()->term1());
      return s && t && f->sub1()->term0() == *s && f->sub1()->term1() == *t;
    }
    case AxiomId::N3: {
      // (s + 0) = s
      if (!is_eq(f)) return false;
      const FOTermPtr& l = f->term0();
      return l->kind() == FOTermKind::Plus &&
             l->right()->kind() == FOTermKind::Zero &&
             l->left() == f->term1();
    }
    case AxiomId::N4: {
      // (s + S t) = S(s + t)
      if (!is_eq(f)) return false;
      const FOTermPtr& l = f->term0();
      if (l->kind() != FOTermKind::Plus) return false;
      auto t = peel_succ(l->right());
      if (!t) return false;
      auto inner = peel_succ(f->term1());
      if (!inner) return false;
      return (*inner)->kind() == FOTermKind::Plus &&
             (*inner)->left() == l->left() && (*inner)->right() == *t;
    }
    case AxiomId::N5: {
      // (s * 0) = 0
      if (!is_eq(f)) return false;
      const FOTermPtr& l = f->term0();
      return l->kind() == FOTermKind::Times &&
             l->right()->kind() == FOTermKind::Zero &&
             f->term1()->kind() == FOTermKind::Zero;
    }
    case AxiomId::N6: {
      // (s * S t) = ((s * t) + s)
      if (!is_eq(f)) return false;
      const FOTermPtr& l = f->term0();
      if (l->kind() != FOTermKind::Times) return false;
      auto t = peel_succ(l->right());
      if (!t) return false;
      const FOTermPtr& r = f->term1();
      return r->kind() == FOTermKind::Plus && r->right() == l->left() &&
             r->left()->kind() == FOTermKind::Times &&
             r->left()->left() == l->left() && r->left()->right() == *t;
    }
  }
  return false;
}

// --- proof checking -------------------------------------------------------------

namespace {
CheckResult reject(std::size_t line, std::string reason) {
  return {false, line, std::move(reason)};
}
}  // namespace

CheckResult check_proof(const SystemPtr& sys, const Proof& proof) {
  if (proof.lines.empty()) return reject(0, "EMPTY: proof has no lines");
  for (std::size_t idx = 0; idx < proof.lines.size(); ++idx) {
    const ProofLine& ln = proof.lines[idx];
    std::size_t lineno = idx + 1;
    if (!ln.formula) return reject(lineno, "MALFORMED: missing formula");
    if (!sys->in_signature(ln.formula))
      return reject(lineno, "SIGNATURE: formula uses symbols outside the system");
    switch (ln.kind) {
      case ProofLine::Just::Axiom: {
        if (!axiom_instance(ln.axiom_id, ln.formula))
          return reject(lineno, std::string("AXIOM-MISMATCH: not an instance of ") +
                                    axiom_name(ln.axiom_id));
        break;
      }
      case ProofLine::Just::MP: {
        if (ln.ref1 < 1 || ln.ref1 >= lineno || ln.ref2 < 1 ||
            ln.ref2 >= lineno)
          return reject(lineno, "REF-RANGE: modus ponens reference out of range");
        const FormulaPtr& a = proof.lines[ln.ref1 - 1].formula;
        const FormulaPtr& ab = proof.lines[ln.ref2 - 1].formula;
        if (!is_imp(ab) || ab->sub0() != a || ab->sub1() != ln.formula)
          return reject(lineno, "MP-MISMATCH: premises do not yield this line");
        break;
      }
      case ProofLine::Just::Gen: {
        if (ln.ref1 < 1 || ln.ref1 >= lineno)
          return reject(lineno, "REF-RANGE: generalization reference out of range");
        const FormulaPtr& a = proof.lines[ln.ref1 - 1].formula;
        if (!is_all(ln.formula) || ln.formula->bound_var() != ln.gen_var ||
            ln.formula->sub0() != a)
          return reject(lineno, "GEN-MISMATCH: not a generalization of the premise");
        break;
      }
      case ProofLine::Just::Chk: {
        FormulaPtr inner = ln.formula;
        bool expected = true;
        if (is_not(inner)) {
          expected = false;
          inner = inner->sub0();
        }
        if (inner->kind() != FormulaKind::Atom)
          return reject(lineno, "CHK-SHAPE: not a checker atom");
        std::uint64_t tag = inner->tag();
        if (!sys->atom_tag_in_signature(tag))
          return reject(lineno, "SIGNATURE: checker atom outside the system");
        auto m = numeral_value(inner->term0());
        auto n = numeral_value(inner->term1());
        if (!m || !n)
          return reject(lineno, "CHK-SHAPE: checker atom arguments must be numerals");
        bool truth = prf_checker(system_at_level(sys, tag - 1), *m, *n);
        if (truth != expected)
          return reject(lineno, "CHK-MISMATCH: checker disagrees with the stated polarity");
        break;
      }
      case ProofLine::Just::Admit: {
        const auto& admitted = sys->admitted_schemas();
        if (ln.admit_id < 1 || ln.admit_id > admitted.size())
          return reject(lineno, "ADMIT-RANGE: no admitted schema with that number");
        if (admitted[ln.admit_id - 1] != ln.formula)
          return reject(lineno, "ADMIT-MISMATCH: formula is not the admitted schema");
        break;
      }
    }
  }
  return {true, 0, ""};
}

// --- proof object numbering -------------------------------------------------------

Nat encode_proof(const Proof& p) {
  // build the list back to front: nil = 0, cons(h, t) = pair(h, t) + 1
  Nat code;
  for (std::size_t i = p.lines.size(); i-- > 0;) {
    const ProofLine& ln = p.lines[i];
    Nat j;
    switch (ln.kind) {
      case ProofLine::Just::Axiom:
        j = Nat::pair(Nat(0), Nat((std::uint64_t)ln.axiom_id));
        break;
      case ProofLine::Just::MP:
        j = Nat::pair(Nat(1), Nat::pair(Nat(ln.ref1), Nat(ln.ref2)));
        break;
      case ProofLine::Just::Gen:
        j = Nat::pair(Nat(2), Nat::pair(Nat(ln.ref1), Nat(ln.gen_var)));
        break;
      case ProofLine::Just::Chk:
        j = Nat::pair(Nat(3), Nat(0));
        break;
      case ProofLine::Just::Admit:
        j = Nat::pair(Nat(4), Nat(ln.admit_id));
        break;
    }
    Nat line_code = Nat::pair(gn_formula(ln.formula), j);
    code = Nat::pair(line_code, code).succ();
  }
  return code;
}

std::optional<Proof> decode_proof(const Nat& code) {
  Proof p;
  Nat rest = code;
  std::size_t guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 100000) return std::nullopt;
    auto [head, tail] = rest.pred().unpair();
    auto [fcode, j] = head.unpair();
    ProofLine ln;
    try {
      ln.formula = decode_formula(fcode);
    } catch (const ResourceError&) {
      return std::nullopt;
    }
    auto [jkind, jarg] = j.unpair();
    if (!jkind.fits_u64()) return std::nullopt;
    switch (jkind.as_u64()) {
      case 0: {
        if (!jarg.fits_u64() || jarg.as_u64() < 1 || jarg.as_u64() > 13)
          return std::nullopt;
        ln.kind = ProofLine::Just::Axiom;
        ln.axiom_id = (AxiomId)jarg.as_u64();
        break;
      }
      case 1: {
        auto [i, jj] = jarg.unpair();
        if (!i.fits_u64() || !jj.fits_u64()) return std::nullopt;
        ln.kind = ProofLine::Just::MP;
        ln.ref1 = i.as_u64();
        ln.ref2 = jj.as_u64();
        break;
      }
      case 2: {
        auto [i, v] = jarg.unpair();
        if (!i.fits_u64() || !v.fits_u64()) return std::nullopt;
        ln.kind = ProofLine::Just::Gen;
        ln.ref1 = i.as_u64();
        ln.gen_var = v.as_u64();
        break;
      }
      case 3:
        ln.kind = ProofLine::Just::Chk;
        break;
      case 4: {
        if (!jarg.fits_u64()) return std::nullopt;
        ln.kind = ProofLine::Just::Admit;
        ln.admit_id = jarg.as_u64();
        break;
      }
      default:
        return std::nullopt;
    }
    p.lines.push_back(std::move(ln));
    rest = tail;
  }
  return p;
}

bool prf_checker(const SystemPtr& base, const Nat& a, const Nat& b) {
  FormulaPtr f;
  try {
    f = decode_formula(a);
  } catch (const ResourceError&) {
    return false;
  }
  std::set<std::uint64_t> frees = free_variables(f);
  if (frees.size() != 1) return false;
  std::uint64_t v = *frees.begin();
  std::optional<Proof> proof = decode_proof(b);
  if (!proof || proof->lines.empty()) return false;
  CheckResult r = check_proof(base, *proof);
  if (!r.accepted) return false;
  FormulaPtr target;
  try {
    target = substitute(f, v, FOTerm::numeral(a));
  } catch (const std::invalid_argument&) {
    return false;
  }
  return proof->lines.back().formula == target;
}

// --- proof files -----------------------------------------------------------------

std::string print_proof(const Proof& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& ln = p.lines[i];
    os << (i + 1) << ". " << print_formula(ln.formula) << " ; ";
    switch (ln.kind) {
      case ProofLine::Just::Axiom: os << "AX " << axiom_name(ln.axiom_id); break;
      case ProofLine::Just::MP: os << "MP " << ln.ref1 << " " << ln.ref2; break;
      case ProofLine::Just::Gen:
        os << "GEN " << ln.ref1 << " v" << ln.gen_var;
        break;
      case ProofLine::Just::Chk: os << "CHK"; break;
      case ProofLine::Just::Admit: os << "ADMIT " << ln.admit_id; break;
    }
    os << '\n';
  }
  return os.str();
}

namespace {
std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}
}  // namespace

Proof parse_proof(std::string_view text) {
  Proof p;
  std::size_t line_start = 0;
  std::size_t lineno = 0;
  while (line_start < text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::string_view raw = nl == std::string_view::npos
                               ? text.substr(line_start)
                               : text.substr(line_start, nl - line_start);
    std::size_t base_off = line_start;
    line_start = nl == std::string_view::npos ? text.size() : nl + 1;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    ++lineno;
    // "n. formula ; JUSTIFICATION"
    std::size_t dot = line.find('.');
    if (dot == std::string_view::npos)
      throw ParseError("proof line: expected 'n.'", base_off);
    std::uint64_t stated = 0;
    for (char c : line.substr(0, dot)) {
      if (c < '0' || c > '9')
        throw ParseError("proof line: bad line number", base_off);
      stated = stated * 10 + (std::uint64_t)(c - '0');
    }
    if (stated != lineno)
      throw ParseError("proof line: numbering must be sequential from 1",
                       base_off);
    std::size_t semi = line.rfind(';');
    if (semi == std::string_view::npos || semi <= dot)
      throw ParseError("proof line: expected ';' before justification",
                       base_off);
    std::string_view ftext = trim(line.substr(dot + 1, semi - dot - 1));
    std::string_view jtext = trim(line.substr(semi + 1));
    ProofLine ln;
    try {
      ln.formula = parse_formula(ftext);
    } catch (const ParseError& e) {
      throw ParseError(std::string("proof formula: ") + e.what(),
                       base_off + dot + 1 + e.offset);
    }
    std::istringstream js{std::string(jtext)};
    std::string word;
    js >> word;
    if (word == "AX") {
      std::string name;
      js >> name;
      auto id = axiom_from_name(name);
      if (!id) throw ParseError("unknown axiom id: " + name, base_off);
      ln.kind = ProofLine::Just::Axiom;
      ln.axiom_id = *id;
    } else if (word == "MP") {
      ln.kind = ProofLine::Just::MP;
      if (!(js >> ln.ref1 >> ln.ref2))
        throw ParseError("MP needs two line references", base_off);
    } else if (word == "GEN") {
      ln.kind = ProofLine::Just::Gen;
      std::string v;
      if (!(js >> ln.ref1 >> v) || v.size() < 2 || v[0] != 'v')
        throw ParseError("GEN needs a reference and a variable", base_off);
      ln.gen_var = std::stoull(v.substr(1));
    } else if (word == "CHK") {
      ln.kind = ProofLine::Just::Chk;
    } else if (word == "ADMIT") {
      ln.kind = ProofLine::Just::Admit;
      if (!(js >> ln.admit_id))
        throw ParseError("ADMIT needs a schema number", base_off);
    } else {
      throw ParseError("unknown justification: " + word, base_off);
    }
    std::string rest;
    if (js >> rest)
      throw ParseError("trailing tokens after justification", base_off);
    p.lines.push_back(std::move(ln));
  }
  return p;
}

}  // namespace goedel
