#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "heyting/algebra.hpp"
#include "heyting/extension.hpp"

namespace heyting {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Op { var, zero, one, meet, join, implies, pcomp, supp };
  Op op = Op::zero;
  int var = -1;
  TermPtr l, r;

  static TermPtr v(int i) { return std::make_shared<Term>(Term{Op::var, i, nullptr, nullptr}); }
  static TermPtr zero() { return std::make_shared<Term>(Term{Op::zero, -1, nullptr, nullptr}); }
  static TermPtr one() { return std::make_shared<Term>(Term{Op::one, -1, nullptr, nullptr}); }
  static TermPtr meet(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term{Op::meet, -1, std::move(a), std::move(b)});
  }
  static TermPtr join(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term{Op::join, -1, std::move(a), std::move(b)});
  }
  static TermPtr implies(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term{Op::implies, -1, std::move(a), std::move(b)});
  }
  static TermPtr pcomp(TermPtr a) {
    return std::make_shared<Term>(Term{Op::pcomp, -1, std::move(a), nullptr});
  }
  static TermPtr supp(TermPtr a) {
    return std::make_shared<Term>(Term{Op::supp, -1, std::move(a), nullptr});
  }
};

inline int eval(const Term& t, const HeytingAlgebra& A, const std::vector<int>& assign) {
  switch (t.op) {
    case Term::Op::var:
      if (t.var < 0 || t.var >= static_cast<int>(assign.size()))
        throw UnsupportedOperation("assignment does not cover variable x" +
                                   std::to_string(t.var + 1));
      return assign[t.var];
    case Term::Op::zero:
      return A.bot;
    case Term::Op::one:
      return A.top;
    case Term::Op::meet:
      return A.meet(eval(*t.l, A, assign), eval(*t.r, A, assign));
    case Term::Op::join:
      return A.join(eval(*t.l, A, assign), eval(*t.r, A, assign));
    case Term::Op::implies:
      return A.implies(eval(*t.l, A, assign), eval(*t.r, A, assign));
    case Term::Op::pcomp:
      return A.pseudocomplement(eval(*t.l, A, assign));
    case Term::Op::supp:
      return A.supplement(eval(*t.l, A, assign));
  }
  throw UnsupportedOperation("bad term node");
}

inline bool term_uses_supplement(const Term& t) {
  if (t.op == Term::Op::supp) return true;
  return (t.l && term_uses_supplement(*t.l)) || (t.r && term_uses_supplement(*t.r));
}

inline int term_var_count(const Term& t) {
  int n = t.op == Term::Op::var ? t.var + 1 : 0;
  if (t.l) n = std::max(n, term_var_count(*t.l));
  if (t.r) n = std::max(n, term_var_count(*t.r));
  return n;
}

// inequations s <= t are stored as s ^ t = s
struct Equation {
  TermPtr lhs, rhs;
  std::string name;
  int vars = 0;
  bool supplemented_signature = false;

  static Equation make(TermPtr l, TermPtr r, std::string nm) {
    Equation e;
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    e.name = std::move(nm);
    e.vars = std::max(term_var_count(*e.lhs), term_var_count(*e.rhs));
    e.supplemented_signature =
        term_uses_supplement(*e.lhs) || term_uses_supplement(*e.rhs);
    return e;
  }
};

struct Satisfaction {
  bool holds = true;
  std::vector<int> witness;  // first failing assignment, variable 0 outermost
};

inline Satisfaction satisfies(const HeytingAlgebra& A, const Equation& eq) {
  Satisfaction s;
  std::vector<int> assign(eq.vars, 0);
  size_t total = 1;
  for (int i = 0; i < eq.vars; ++i) total *= static_cast<size_t>(A.n);
  for (size_t k = 0; k < total; ++k) {
    size_t rest = k;
    for (int i = eq.vars; i-- > 0;) {
      assign[i] = static_cast<int>(rest % A.n);
      rest /= A.n;
    }
    if (eval(*eq.lhs, A, assign) != eval(*eq.rhs, A, assign)) {
      s.holds = false;
      s.witness = assign;
      return s;
    }
  }
  return s;
}

// ---- equation DSL --------------------------------------------------------
// variables x1..xn (or free names), operators ^ v -> * +, constants 0 1,
// relation = or <=; postfix * + bind tightest, then ^, then v, then ->
// (right-associative)

namespace detail {

struct EqParser {
  const std::string& s;
  size_t pos = 0;
  std::vector<std::string> names;

  explicit EqParser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos), pos);
  }

  int var_index(const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    names.push_back(name);
    return static_cast<int>(names.size() - 1);
  }

  TermPtr atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      TermPtr t = implication();
      skip();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      return t;
    }
    if (c == '0') {
      ++pos;
      return Term::zero();
    }
    if (c == '1') {
      ++pos;
      return Term::one();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "v") fail("'v' is the join operator, not a variable");
      return Term::v(var_index(name));
    }
    fail("expected an atom");
  }

  TermPtr postfix() {
    TermPtr t = atom();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        t = Term::pcomp(t);
      } else if (pos < s.size() && s[pos] == '+') {
        ++pos;
        t = Term::supp(t);
      } else {
        return t;
      }
    }
  }

  TermPtr meet_level() {
    TermPtr t = postfix();
    while (eat("^")) t = Term::meet(t, postfix());
    return t;
  }

  TermPtr join_level() {
    TermPtr t = meet_level();
    while (true) {
      skip();
      // 'v' must be a standalone token
      if (pos < s.size() && s[pos] == 'v' &&
          (pos + 1 >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[pos + 1])) ||
                                    s[pos + 1] == '_'))) {
        ++pos;
        t = Term::join(t, meet_level());
      } else {
        return t;
      }
    }
  }

  TermPtr implication() {
    TermPtr t = join_level();
    skip();
    if (eat("->")) return Term::implies(t, implication());
    return t;
  }

  Equation equation(const std::string& name) {
    TermPtr l = implication();
    skip();
    bool le = false;
    if (eat("<=")) {
      le = true;
    } else if (!eat("=")) {
      fail("expected '=' or '<='");
    }
    TermPtr r = implication();
    skip();
    if (pos != s.size()) fail("trailing input");
    remap_numeric();
    l = remap(l);
    r = remap(r);
    if (le) return Equation::make(Term::meet(l, r), l, name);
    return Equation::make(l, r, name);
  }

  // x1..xn get their numeric indices when every variable has that shape;
  // otherwise first-occurrence order stands
  std::vector<int> remap_table;
  void remap_numeric() {
    remap_table.assign(names.size(), -1);
    bool all_numeric = !names.empty();
    for (const auto& nm : names) {
      if (nm.size() < 2 || nm[0] != 'x' ||
          !std::all_of(nm.begin() + 1, nm.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        all_numeric = false;
    }
    for (size_t i = 0; i < names.size(); ++i)
      remap_table[i] = all_numeric ? std::stoi(names[i].substr(1)) - 1 : static_cast<int>(i);
  }
  TermPtr remap(const TermPtr& t) {
    if (!t) return nullptr;
    if (t->op == Term::Op::var) return Term::v(remap_table[t->var]);
    auto copy = std::make_shared<Term>(*t);
    copy->l = remap(t->l);
    copy->r = remap(t->r);
    return copy;
  }
};

}  // namespace detail

inline Equation parse_equation(const std::string& text, const std::string& name = "") {
  detail::EqParser p(text);
  return p.equation(name.empty() ? text : name);
}

// the named equations used throughout
inline std::vector<Equation> equation_library() {
  return {
      parse_equation("x1 ^ x1* = 0", "pseudocomplement-meet"),
      parse_equation("x1 v x1* = 1", "excluded-middle"),
      parse_equation("x1* v x1** = 1", "weak-excluded-middle"),
      parse_equation("(x1 -> x2) v (x2 -> x1) = 1", "linearity"),
      parse_equation("(x1 ^ x2)+ = x1+ v x2+", "de-morgan-meet-supplement"),
      parse_equation("(x1 v x2)+ = x1+ ^ x2+", "dual-stone"),
      parse_equation("1 = x2 v (x2 -> (x1 v x1*))", "bd2"),
      parse_equation("x1+ ^ x1 <= x2 v x2*", "bd2-supplement-form"),
  };
}

inline Equation bd2_equation() { return parse_equation("1 = x2 v (x2 -> (x1 v x1*))", "bd2"); }

struct Bd2Verdict {
  bool bd2 = false;
  bool supplement_form = false;
  bool codense_below_dense = false;
};

// the three equivalent readings of bd2 on a supplemented algebra
inline Bd2Verdict bd2_equivalence_check(const HeytingAlgebra& A) {
  Bd2Verdict v;
  v.bd2 = satisfies(A, bd2_equation()).holds;
  v.supplement_form =
      satisfies(A, parse_equation("x1+ ^ x1 <= x2 v x2*", "bd2-supplement-form")).holds;
  ElementClasses c = classify_elements(A);
  v.codense_below_dense = true;
  for (int a = c.codense.first(); a >= 0; a = c.codense.next(a))
    for (int b = c.dense.first(); b >= 0; b = c.dense.next(b))
      if (!A.leq(a, b)) v.codense_below_dense = false;
  if (v.bd2 != v.supplement_form || v.bd2 != v.codense_below_dense)
    throw InvariantBreach("the three bd2 readings disagree on a supplemented algebra");
  return v;
}

struct ClosureRow {
  std::string id;
  bool holds_in_base = false;
  bool holds_in_extension = false;
  std::vector<int> witness;  // in S(A), when the extension falsifies
};

struct ClosureReport {
  std::string equation;
  std::vector<ClosureRow> rows;
  int failures = 0;  // base satisfies but the extension does not
};

// for each algebra satisfying eq, does its centrally supplemented extension
// (= its hyper-MacNeille completion at finite scale) still satisfy it?
inline ClosureReport closure_experiment(
    const Equation& eq,
    const std::vector<std::pair<std::string, const ExtensionAlgebra*>>& entries) {
  ClosureReport r;
  r.equation = eq.name;
  for (const auto& [id, E] : entries) {
    ClosureRow row;
    row.id = id;
    row.holds_in_base = satisfies(E->base, eq).holds;
    Satisfaction ext = satisfies(E->alg, eq);
    row.holds_in_extension = ext.holds;
    if (row.holds_in_base && !row.holds_in_extension) {
      row.witness = ext.witness;
      ++r.failures;
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

// HSP transport behind the variety witness: an equation holding in A holds in
// every quotient A_y, in the full product (= S(A) at finite scale), and so in
// S(A)
inline bool hsp_transport_holds(const Equation& eq, const ExtensionAlgebra& E) {
  if (!satisfies(E.base, eq).holds) return true;
  for (const auto& f : E.rep.factors)
    if (!satisfies(f, eq).holds) return false;
  return satisfies(E.alg, eq).holds;
}

}  // namespace heyting
