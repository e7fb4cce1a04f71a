#include "bindkit/term.hpp"

#include <algorithm>

namespace bindkit {

PreTerm PreTerm::var(VarId v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->v = v;
  n->size = 1;
  return PreTerm(std::move(n));
}

PreTerm PreTerm::app(PreTerm fun, PreTerm arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->size = 1 + fun.size() + arg.size();
  n->a = std::move(fun.n_);
  n->b = std::move(arg.n_);
  return PreTerm(std::move(n));
}

PreTerm PreTerm::lam(VarId binder, PreTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->v = binder;
  n->size = 1 + body.size();
  n->a = std::move(body.n_);
  return PreTerm(std::move(n));
}

bool PreTerm::identical(const PreTerm& other) const {
  if (n_ == other.n_) return true;
  if (kind() != other.kind() || size() != other.size()) return false;
  switch (kind()) {
    case Kind::Var:
      return var() == other.var();
    case Kind::App:
      return fun().identical(other.fun()) && arg().identical(other.arg());
    case Kind::Lam:
      return var() == other.var() && body().identical(other.body());
  }
  return false;
}

DbTerm DbTerm::bound(std::uint32_t k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bound;
  n->k = k;
  return DbTerm(std::move(n));
}

DbTerm DbTerm::free(VarId v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Free;
  n->v = v;
  return DbTerm(std::move(n));
}

DbTerm DbTerm::app(DbTerm fun, DbTerm arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->a = std::move(fun.n_);
  n->b = std::move(arg.n_);
  return DbTerm(std::move(n));
}

DbTerm DbTerm::lam(DbTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->a = std::move(body.n_);
  return DbTerm(std::move(n));
}

bool DbTerm::operator==(const DbTerm& other) const {
  if (n_ == other.n_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Bound:
      return bound_index() == other.bound_index();
    case Kind::Free:
      return free_var() == other.free_var();
    case Kind::App:
      return fun() == other.fun() && arg() == other.arg();
    case Kind::Lam:
      return body() == other.body();
  }
  return false;
}

namespace {

void encode_rec(const DbTerm& d, std::string& out) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
      out += 'B';
      out += std::to_string(d.bound_index());
      out += ';';
      return;
    case DbTerm::Kind::Free:
      out += 'F';
      out += std::to_string(d.free_var().index);
      out += ';';
      return;
    case DbTerm::Kind::App:
      out += 'A';
      encode_rec(d.fun(), out);
      encode_rec(d.arg(), out);
      return;
    case DbTerm::Kind::Lam:
      out += 'L';
      encode_rec(d.body(), out);
      return;
  }
}

void show_rec(const DbTerm& d, bool atom, std::string& out) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
      out += std::to_string(d.bound_index());
      return;
    case DbTerm::Kind::Free:
      out += var_name(d.free_var());
      return;
    case DbTerm::Kind::App: {
      if (atom) out += '(';
      show_rec(d.fun(), d.fun().kind() == DbTerm::Kind::Lam, out);
      out += ' ';
      show_rec(d.arg(), d.arg().kind() != DbTerm::Kind::Bound &&
                            d.arg().kind() != DbTerm::Kind::Free,
               out);
      if (atom) out += ')';
      return;
    }
    case DbTerm::Kind::Lam:
      if (atom) out += '(';
      out += "\\. ";
      show_rec(d.body(), false, out);
      if (atom) out += ')';
      return;
  }
}

}  // namespace

std::string DbTerm::encode() const {
  std::string out;
  encode_rec(*this, out);
  return out;
}

std::string DbTerm::show() const {
  std::string out;
  show_rec(*this, false, out);
  return out;
}

bool operator==(const Term& a, const Term& b) { return alpha_eq(a, b); }

namespace {

void free_vars_rec(const PreTerm& t, std::vector<VarId>& bound,
                   VarSet& out) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      if (std::find(bound.rbegin(), bound.rend(), t.var()) == bound.rend())
        out.insert(t.var());
      return;
    case PreTerm::Kind::App:
      free_vars_rec(t.fun(), bound, out);
      free_vars_rec(t.arg(), bound, out);
      return;
    case PreTerm::Kind::Lam:
      bound.push_back(t.var());
      free_vars_rec(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

VarSet free_vars(const PreTerm& t) {
  VarSet out;
  std::vector<VarId> bound;
  free_vars_rec(t, bound, out);
  return out;
}

VarSet free_vars(const Term& t) { return free_vars(t.repr()); }

bool is_fresh(VarId v, const Term& t) { return !free_vars(t).contains(v); }

namespace {

PreTerm rename_rec(const PreTerm& t, VarId to, VarId from) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return t.var() == from ? PreTerm::var(to) : t;
    case PreTerm::Kind::App:
      return PreTerm::app(rename_rec(t.fun(), to, from),
                          rename_rec(t.arg(), to, from));
    case PreTerm::Kind::Lam: {
      VarId b = t.var();
      if (b == from) return t;  // shadowed below
      if (b == to && free_vars(t.body()).contains(from)) {
        VarSet avoid = free_vars(t.body());
        avoid.insert(to);
        avoid.insert(from);
        VarId z = fresh_var(avoid);
        // z is fresh for the body, so retargeting the binder first is a
        // plain alpha-step.
        return PreTerm::lam(
            z, rename_rec(rename_rec(t.body(), z, b), to, from));
      }
      return PreTerm::lam(b, rename_rec(t.body(), to, from));
    }
  }
  return t;
}

PreTerm swap_rec(const PreTerm& t, VarId x1, VarId x2) {
  auto tr = [&](VarId v) { return v == x1 ? x2 : (v == x2 ? x1 : v); };
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return PreTerm::var(tr(t.var()));
    case PreTerm::Kind::App:
      return PreTerm::app(swap_rec(t.fun(), x1, x2),
                          swap_rec(t.arg(), x1, x2));
    case PreTerm::Kind::Lam:
      return PreTerm::lam(tr(t.var()), swap_rec(t.body(), x1, x2));
  }
  return t;
}

}  // namespace

Term rename(const Term& t, VarId to, VarId from) {
  if (to == from) return t;
  return Term(rename_rec(t.repr(), to, from));
}

Term swap(const Term& t, VarId x1, VarId x2) {
  if (x1 == x2) return t;
  return Term(swap_rec(t.repr(), x1, x2));
}

void FinTermEnv::bind(VarId v, const Term& t) {
  if (t.repr().kind() == PreTerm::Kind::Var && t.repr().var() == v) {
    map_.erase(v);
    return;
  }
  map_.insert_or_assign(v, t);
}

Term FinTermEnv::apply(VarId v) const {
  auto it = map_.find(v);
  if (it != map_.end()) return it->second;
  return Term::var(v);
}

VarSet FinTermEnv::support() const {
  VarSet s;
  for (const auto& [v, t] : map_) s.insert(v);
  return s;
}

VarSet FinTermEnv::range_free_vars() const {
  VarSet s;
  for (const auto& [v, t] : map_) s = s.unioned(free_vars(t));
  return s;
}

namespace {

PreTerm subst_rec(const PreTerm& t, const PreTerm& s, VarId x,
                  const VarSet& fv_s) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return t.var() == x ? s : t;
    case PreTerm::Kind::App:
      return PreTerm::app(subst_rec(t.fun(), s, x, fv_s),
                          subst_rec(t.arg(), s, x, fv_s));
    case PreTerm::Kind::Lam: {
      VarId b = t.var();
      if (b == x) return t;
      if (fv_s.contains(b) && free_vars(t.body()).contains(x)) {
        VarSet avoid = free_vars(t.body()).unioned(fv_s);
        avoid.insert(x);
        VarId z = fresh_var(avoid);
        PreTerm body = rename_rec(t.body(), z, b);
        return PreTerm::lam(z, subst_rec(body, s, x, fv_s));
      }
      return PreTerm::lam(b, subst_rec(t.body(), s, x, fv_s));
    }
  }
  return t;
}

PreTerm psubst_rec(const PreTerm& t, const FinTermEnv& rho,
                   const VarSet& clash) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return rho.apply(t.var()).repr();
    case PreTerm::Kind::App:
      return PreTerm::app(psubst_rec(t.fun(), rho, clash),
                          psubst_rec(t.arg(), rho, clash));
    case PreTerm::Kind::Lam: {
      VarId b = t.var();
      if (clash.contains(b)) {
        VarSet avoid = clash.unioned(free_vars(t.body()));
        VarId z = fresh_var(avoid);
        return PreTerm::lam(z, psubst_rec(rename_rec(t.body(), z, b), rho,
                                          clash));
      }
      return PreTerm::lam(b, psubst_rec(t.body(), rho, clash));
    }
  }
  return t;
}

}  // namespace

Term subst(const Term& t, const Term& s, VarId x) {
  return Term(subst_rec(t.repr(), s.repr(), x, free_vars(s)));
}

Term psubst(const Term& t, const FinTermEnv& rho) {
  VarSet clash = rho.support().unioned(rho.range_free_vars());
  return Term(psubst_rec(t.repr(), rho, clash));
}

namespace {

DbTerm to_db_rec(const PreTerm& t, std::vector<VarId>& binders) {
  switch (t.kind()) {
    case PreTerm::Kind::Var: {
      for (std::size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == t.var())
          return DbTerm::bound(
              static_cast<std::uint32_t>(binders.size() - 1 - i));
      }
      return DbTerm::free(t.var());
    }
    case PreTerm::Kind::App: {
      DbTerm f = to_db_rec(t.fun(), binders);
      DbTerm a = to_db_rec(t.arg(), binders);
      return DbTerm::app(std::move(f), std::move(a));
    }
    case PreTerm::Kind::Lam: {
      binders.push_back(t.var());
      DbTerm b = to_db_rec(t.body(), binders);
      binders.pop_back();
      return DbTerm::lam(std::move(b));
    }
  }
  return DbTerm::free(VarId{0});
}

void db_free_vars(const DbTerm& d, VarSet& out) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
      return;
    case DbTerm::Kind::Free:
      out.insert(d.free_var());
      return;
    case DbTerm::Kind::App:
      db_free_vars(d.fun(), out);
      db_free_vars(d.arg(), out);
      return;
    case DbTerm::Kind::Lam:
      db_free_vars(d.body(), out);
      return;
  }
}

PreTerm from_db_rec(const DbTerm& d, std::vector<VarId>& binders) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound: {
      std::uint32_t k = d.bound_index();
      // Indices pointing past the context denote nothing we can name;
      // reject by construction (to_debruijn never produces them).
      return PreTerm::var(binders[binders.size() - 1 - k]);
    }
    case DbTerm::Kind::Free:
      return PreTerm::var(d.free_var());
    case DbTerm::Kind::App: {
      PreTerm f = from_db_rec(d.fun(), binders);
      PreTerm a = from_db_rec(d.arg(), binders);
      return PreTerm::app(std::move(f), std::move(a));
    }
    case DbTerm::Kind::Lam: {
      VarSet avoid;
      db_free_vars(d.body(), avoid);
      for (VarId b : binders) avoid.insert(b);
      VarId z = fresh_var(avoid);
      binders.push_back(z);
      PreTerm b = from_db_rec(d.body(), binders);
      binders.pop_back();
      return PreTerm::lam(z, std::move(b));
    }
  }
  return PreTerm::var(VarId{0});
}

}  // namespace

DbTerm to_debruijn(const Term& t) {
  std::vector<VarId> binders;
  return to_db_rec(t.repr(), binders);
}

Term from_debruijn(const DbTerm& d) {
  std::vector<VarId> binders;
  return Term(from_db_rec(d, binders));
}

bool alpha_eq(const Term& a, const Term& b) {
  if (a.size() != b.size()) return false;
  return to_debruijn(a) == to_debruijn(b);
}

std::string db_key(const Term& t) { return to_debruijn(t).encode(); }

}  // namespace bindkit
