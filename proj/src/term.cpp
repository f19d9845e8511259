#include "strdiag/term.hpp"

#include <algorithm>
#include <numeric>

#include "strdiag/error.hpp"

namespace strdiag {

const char* mode_name(Mode mode) {
  return mode == Mode::Smc ? "smc" : "frobenius";
}

Term Term::atom(Kind kind, std::size_t n, std::size_t m) {
  Term t;
  t.kind_ = kind;
  t.n_ = n;
  t.m_ = m;
  return t;
}

Term Term::gen(std::string name) {
  Term t = atom(Kind::Gen);
  t.name_ = std::move(name);
  return t;
}

Term Term::id(std::size_t n) { return atom(Kind::Id, n); }
Term Term::sym(std::size_t n, std::size_t m) { return atom(Kind::Sym, n, m); }
Term Term::fmul() { return atom(Kind::FMul); }
Term Term::funit() { return atom(Kind::FUnit); }
Term Term::fcomul() { return atom(Kind::FComul); }
Term Term::fcounit() { return atom(Kind::FCounit); }
Term Term::cup(std::size_t n) { return atom(Kind::Cup, n); }
Term Term::cap(std::size_t n) { return atom(Kind::Cap, n); }

Term Term::seq(Term first, Term second) {
  Term t = atom(Kind::Seq);
  t.left_ = std::make_shared<const Term>(std::move(first));
  t.right_ = std::make_shared<const Term>(std::move(second));
  return t;
}

Term Term::par(Term top, Term bottom) {
  Term t = atom(Kind::Par);
  t.left_ = std::make_shared<const Term>(std::move(top));
  t.right_ = std::make_shared<const Term>(std::move(bottom));
  return t;
}

bool Term::is_frobenius_only() const {
  switch (kind_) {
    case Kind::FMul:
    case Kind::FUnit:
    case Kind::FComul:
    case Kind::FCounit:
    case Kind::Cup:
    case Kind::Cap:
      return true;
    default:
      return false;
  }
}

std::size_t Term::size() const {
  switch (kind_) {
    case Kind::Gen: return 1;
    case Kind::Seq:
    case Kind::Par: return left_->size() + right_->size();
    default: return 0;
  }
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_ || a.n_ != b.n_ ||
      a.m_ != b.m_) {
    return false;
  }
  if (a.kind_ == Term::Kind::Seq || a.kind_ == Term::Kind::Par) {
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }
  return true;
}

namespace {

void print(const Term& t, bool inPar, std::string& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Gen: out += t.name(); return;
    case K::Id: out += "id " + std::to_string(t.n()); return;
    case K::Sym:
      out += "sym " + std::to_string(t.n()) + " " + std::to_string(t.m());
      return;
    case K::FMul: out += "fmul"; return;
    case K::FUnit: out += "funit"; return;
    case K::FComul: out += "fcomul"; return;
    case K::FCounit: out += "fcounit"; return;
    case K::Cup: out += "cup " + std::to_string(t.n()); return;
    case K::Cap: out += "cap " + std::to_string(t.n()); return;
    case K::Seq: {
      if (inPar) out += '(';
      print(t.left(), false, out);
      out += " ; ";
      // both operators associate to the left when parsed
      const bool nested = t.right().kind() == K::Seq;
      if (nested) out += '(';
      print(t.right(), false, out);
      if (nested) out += ')';
      if (inPar) out += ')';
      return;
    }
    case K::Par: {
      print(t.left(), true, out);
      out += " * ";
      const bool nested = t.right().kind() == K::Par;
      if (nested) out += '(';
      print(t.right(), true, out);
      if (nested) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, false, out);
  return out;
}

TermType typecheck(const Term& t, const Signature& sig, Mode mode) {
  using K = Term::Kind;
  if (mode == Mode::Smc && t.is_frobenius_only()) {
    throw Error(Errc::FrobeniusInSmcMode,
                "'" + to_string(t) + "' is only available in frobenius mode");
  }
  switch (t.kind()) {
    case K::Gen: {
      const Generator* g = sig.find(t.name());
      if (g == nullptr) {
        throw Error(Errc::UnknownGenerator,
                    "unknown generator '" + t.name() + "'");
      }
      return {g->arity, g->coarity};
    }
    case K::Id: return {t.n(), t.n()};
    case K::Sym: return {t.n() + t.m(), t.n() + t.m()};
    case K::Seq: {
      TermType a = typecheck(t.left(), sig, mode);
      TermType b = typecheck(t.right(), sig, mode);
      if (a.cod != b.dom) {
        throw Error(Errc::TypeMismatch,
                    "cannot compose '" + to_string(t.left()) + "' (coarity " +
                        std::to_string(a.cod) + ") with '" +
                        to_string(t.right()) + "' (arity " +
                        std::to_string(b.dom) + ")");
      }
      return {a.dom, b.cod};
    }
    case K::Par: {
      TermType a = typecheck(t.left(), sig, mode);
      TermType b = typecheck(t.right(), sig, mode);
      return {a.dom + b.dom, a.cod + b.cod};
    }
    case K::FMul: return {2, 1};
    case K::FUnit: return {0, 1};
    case K::FComul: return {1, 2};
    case K::FCounit: return {1, 0};
    case K::Cup: return {2 * t.n(), 0};
    case K::Cap: return {0, 2 * t.n()};
  }
  throw Error(Errc::TypeMismatch, "malformed term");
}

InterfacedGraph generator_cospan(const Generator& g) {
  InterfacedGraph c;
  c.graph.nodeCount = g.arity + g.coarity;
  Hyperedge e{g.name, {}, {}};
  for (NodeId v = 0; v < g.arity; ++v) {
    e.sources.push_back(v);
    c.inputs.push_back(v);
  }
  for (NodeId v = g.arity; v < g.arity + g.coarity; ++v) {
    e.targets.push_back(v);
    c.outputs.push_back(v);
  }
  c.graph.add_edge(std::move(e));
  return c;
}

namespace {

InterfacedGraph interpret_checked(const Term& t, const Signature& sig) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Gen: return generator_cospan(*sig.find(t.name()));
    case K::Id: return identity(t.n());
    case K::Sym: return symmetry(t.n(), t.m());
    case K::Seq:
      return compose(interpret_checked(t.left(), sig),
                     interpret_checked(t.right(), sig));
    case K::Par:
      return tensor(interpret_checked(t.left(), sig),
                    interpret_checked(t.right(), sig));
    case K::FMul: return frob_gen(FrobGen::Mul);
    case K::FUnit: return frob_gen(FrobGen::Unit);
    case K::FComul: return frob_gen(FrobGen::Comul);
    case K::FCounit: return frob_gen(FrobGen::Counit);
    case K::Cup: return interpret_checked(expand_cup(t.n()), sig);
    case K::Cap: return interpret_checked(expand_cap(t.n()), sig);
  }
  throw Error(Errc::TypeMismatch, "malformed term");
}

}  // namespace

InterfacedGraph interpret(const Term& t, const Signature& sig) {
  typecheck(t, sig, Mode::Frobenius);
  return interpret_checked(t, sig);
}

Term expand_cup(std::size_t n) {
  if (n == 0) return Term::id(0);
  Term one = Term::seq(Term::fmul(), Term::fcounit());
  if (n == 1) return one;
  Term inner = Term::par(Term::par(Term::id(1), expand_cup(n - 1)), Term::id(1));
  return Term::seq(std::move(inner), std::move(one));
}

Term expand_cap(std::size_t n) {
  if (n == 0) return Term::id(0);
  Term one = Term::seq(Term::funit(), Term::fcomul());
  if (n == 1) return one;
  Term inner = Term::par(Term::par(Term::id(1), expand_cap(n - 1)), Term::id(1));
  return Term::seq(std::move(one), std::move(inner));
}

Term bend(const Term& d, const Signature& sig) {
  TermType ty = typecheck(d, sig, Mode::Frobenius);
  return Term::seq(Term::cap(ty.dom), Term::par(Term::id(ty.dom), d));
}

Term dual(const Term& c, const Signature& sig) {
  TermType ty = typecheck(c, sig, Mode::Frobenius);
  const std::size_t n = ty.dom;
  const std::size_t m = ty.cod;
  Term first = Term::par(Term::cap(n), Term::id(m));
  Term middle = Term::par(Term::par(Term::id(n), c), Term::id(m));
  Term last = Term::par(Term::id(n), Term::cup(m));
  return Term::seq(Term::seq(std::move(first), std::move(middle)),
                   std::move(last));
}

Term seq_smart(const Term& a, const Term& b) {
  if (a.kind() == Term::Kind::Id) return b;
  if (b.kind() == Term::Kind::Id) return a;
  return Term::seq(a, b);
}

Term par_smart(const Term& a, const Term& b) {
  const bool aId = a.kind() == Term::Kind::Id;
  const bool bId = b.kind() == Term::Kind::Id;
  if (aId && bId) return Term::id(a.n() + b.n());
  if (aId && a.n() == 0) return b;
  if (bId && b.n() == 0) return a;
  return Term::par(a, b);
}

Term permutation_term(const std::vector<std::size_t>& target) {
  const std::size_t w = target.size();
  // wire sitting at each position
  std::vector<std::size_t> cur(w);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::size_t> wanted(w);
  for (std::size_t k = 0; k < w; ++k) wanted.at(target[k]) = k;
  Term result = Term::id(w);
  for (std::size_t t = 0; t < w; ++t) {
    auto it = std::find(cur.begin() + t, cur.end(), wanted[t]);
    const std::size_t q = static_cast<std::size_t>(it - cur.begin());
    if (q == t) continue;
    Term layer = par_smart(par_smart(Term::id(t), Term::sym(q - t, 1)),
                           Term::id(w - q - 1));
    result = seq_smart(result, layer);
    std::rotate(cur.begin() + t, cur.begin() + q, cur.begin() + q + 1);
  }
  return result;
}

}  // namespace strdiag
