#pragma once

// Terms of the free PROP over a signature, optionally extended with a chosen
// special Frobenius structure (fmul, funit, fcomul, fcounit, cups and caps).

#include <memory>
#include <string>
#include <string_view>

#include "strdiag/cospan.hpp"
#include "strdiag/hypergraph.hpp"

namespace strdiag {

enum class Mode { Smc, Frobenius };

const char* mode_name(Mode mode);

struct TermType {
  std::size_t dom = 0;
  std::size_t cod = 0;

  bool operator==(const TermType&) const = default;
};

class Term {
 public:
  enum class Kind { Gen, Id, Sym, Seq, Par, FMul, FUnit, FComul, FCounit, Cup, Cap };

  static Term gen(std::string name);
  static Term id(std::size_t n);
  static Term sym(std::size_t n, std::size_t m);
  static Term seq(Term first, Term second);
  static Term par(Term top, Term bottom);
  static Term fmul();
  static Term funit();
  static Term fcomul();
  static Term fcounit();
  static Term cup(std::size_t n);
  static Term cap(std::size_t n);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  /// Children of Seq / Par.
  const Term& left() const { return *left_; }
  const Term& right() const { return *right_; }

  bool is_frobenius_only() const;
  /// Number of generator occurrences.
  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  Term() = default;
  static Term atom(Kind kind, std::size_t n = 0, std::size_t m = 0);

  Kind kind_ = Kind::Id;
  std::string name_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::shared_ptr<const Term> left_;
  std::shared_ptr<const Term> right_;
};

/// Concrete syntax: `;` for composition, `*` for the monoidal product
/// (binding tighter), atoms `id n`, `sym n m`, generator names, `fmul`,
/// `funit`, `fcomul`, `fcounit`, `cup n`, `cap n`.
std::string to_string(const Term& t);

/// Throws Errc::UnknownGenerator, Errc::TypeMismatch,
/// Errc::FrobeniusInSmcMode.
TermType typecheck(const Term& t, const Signature& sig, Mode mode);

/// The interpretation functor into interfaced hypergraphs. Cups and caps are
/// expanded first. Typechecks in Frobenius mode before interpreting.
InterfacedGraph interpret(const Term& t, const Signature& sig);

/// Graph of a single generator o: n -> m: n+m nodes, one edge.
InterfacedGraph generator_cospan(const Generator& g);

/// cup(0) = id 0, cup(1) = fmul ; fcounit,
/// cup(n+1) = (id 1 * cup(n) * id 1) ; cup(1). Caps are dual.
Term expand_cup(std::size_t n);
Term expand_cap(std::size_t n);

/// For d: n -> m, cap(n) ; (id n * d) : 0 -> n+m.
Term bend(const Term& d, const Signature& sig);

/// For c: n -> m, (cap(n) * id m) ; (id n * c * id m) ; (id n * cup(m)).
Term dual(const Term& c, const Signature& sig);

/// Identity-and-symmetry term sending input wire k to output target[k].
Term permutation_term(const std::vector<std::size_t>& target);

/// Composition helpers that drop identities of matching width.
Term seq_smart(const Term& a, const Term& b);
Term par_smart(const Term& a, const Term& b);

}  // namespace strdiag
