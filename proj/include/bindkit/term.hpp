#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bindkit/var.hpp"

namespace bindkit {

// Raw syntax tree with named binders. Immutable, structurally shared;
// equality is structural. Alpha-equivalence lives on Term, not here.
class PreTerm {
 public:
  enum class Kind { Var, App, Lam };

  static PreTerm var(VarId v);
  static PreTerm app(PreTerm fun, PreTerm arg);
  static PreTerm lam(VarId binder, PreTerm body);

  Kind kind() const { return n_->kind; }
  VarId var() const { return n_->v; }  // Var payload or Lam binder
  PreTerm fun() const { return PreTerm(n_->a); }
  PreTerm arg() const { return PreTerm(n_->b); }
  PreTerm body() const { return PreTerm(n_->a); }

  std::size_t size() const { return n_->size; }  // node count

  bool identical(const PreTerm& other) const;  // structural equality

 private:
  struct Node {
    Kind kind;
    VarId v;
    std::shared_ptr<const Node> a;  // App fun / Lam body
    std::shared_ptr<const Node> b;  // App arg
    std::size_t size;
  };
  std::shared_ptr<const Node> n_;
  explicit PreTerm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
};

// Nameless form: Bound carries the number of binders between the
// occurrence and its binder, Free carries a variable. Structural equality
// is the canonical alpha-equivalence key.
class DbTerm {
 public:
  enum class Kind { Bound, Free, App, Lam };

  static DbTerm bound(std::uint32_t k);
  static DbTerm free(VarId v);
  static DbTerm app(DbTerm fun, DbTerm arg);
  static DbTerm lam(DbTerm body);

  Kind kind() const { return n_->kind; }
  std::uint32_t bound_index() const { return n_->k; }
  VarId free_var() const { return n_->v; }
  DbTerm fun() const { return DbTerm(n_->a); }
  DbTerm arg() const { return DbTerm(n_->b); }
  DbTerm body() const { return DbTerm(n_->a); }

  bool operator==(const DbTerm& other) const;

  // Preorder byte encoding; usable as an ordered map key.
  std::string encode() const;
  std::string show() const;

 private:
  struct Node {
    Kind kind;
    std::uint32_t k = 0;
    VarId v;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };
  std::shared_ptr<const Node> n_;
  explicit DbTerm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
};

// A term is a pre-term considered up to alpha-equivalence: operator== is
// alpha-equivalence, and every exported operation respects it. The stored
// representative is reachable via repr() for structural walks.
class Term {
 public:
  explicit Term(PreTerm repr) : repr_(std::move(repr)) {}
  static Term var(VarId v) { return Term(PreTerm::var(v)); }
  static Term app(const Term& f, const Term& a) {
    return Term(PreTerm::app(f.repr_, a.repr_));
  }
  static Term lam(VarId binder, const Term& body) {
    return Term(PreTerm::lam(binder, body.repr_));
  }

  const PreTerm& repr() const { return repr_; }
  std::size_t size() const { return repr_.size(); }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) = default;

 private:
  PreTerm repr_;
};

// Free variables (binders removed below their scope).
VarSet free_vars(const PreTerm& t);
VarSet free_vars(const Term& t);

// True iff v is not free in t. Agrees with the renaming-derived freshness
// of the term renaming structure; the law suites check that agreement.
bool is_fresh(VarId v, const Term& t);

// Capture-avoiding renaming t[to/from]: substitutes the variable `from`
// by the variable `to`. Binders equal to `from` shadow; a binder equal to
// `to` with `from` free below is first renamed to a fresh variable.
Term rename(const Term& t, VarId to, VarId from);

// Swaps the two variables everywhere, including binding positions.
Term swap(const Term& t, VarId x1, VarId x2);

// Finitely supported substitution environment: variables off the support
// map to themselves.
class FinTermEnv {
 public:
  FinTermEnv() = default;

  // Binding v to Var v normalizes to removal.
  void bind(VarId v, const Term& t);
  Term apply(VarId v) const;
  VarSet support() const;
  VarSet range_free_vars() const;  // union of free_vars over the images

  const std::map<VarId, Term>& entries() const { return map_; }

 private:
  std::map<VarId, Term> map_;
};

// Capture-avoiding substitution t[s/x] of a term for a variable.
Term subst(const Term& t, const Term& s, VarId x);

// Simultaneous capture-avoiding substitution.
Term psubst(const Term& t, const FinTermEnv& rho);

bool alpha_eq(const Term& a, const Term& b);

DbTerm to_debruijn(const Term& t);
Term from_debruijn(const DbTerm& d);

// Canonical alpha-class key (encoded de Bruijn form).
std::string db_key(const Term& t);

}  // namespace bindkit
