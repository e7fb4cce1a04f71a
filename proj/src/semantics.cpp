#include "bindkit/semantics.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bindkit/parse.hpp"

namespace bindkit {

SemVal SemVal::neutral(VarId head, std::vector<SemVal> spine) {
  auto n = std::make_shared<Node>();
  n->closure = false;
  n->head = head;
  n->spine = std::move(spine);
  return SemVal(std::move(n));
}

SemVal SemVal::closure(std::function<SemVal(const SemVal&)> fn) {
  auto n = std::make_shared<Node>();
  n->closure = true;
  n->fn = std::move(fn);
  return SemVal(std::move(n));
}

namespace {

PreTerm reify(const SemVal& v, const VarSet& avoid) {
  if (!v.is_closure()) {
    PreTerm acc = PreTerm::var(v.head());
    for (const SemVal& s : v.spine()) acc = PreTerm::app(acc, reify(s, avoid));
    return acc;
  }
  VarId z = fresh_var(avoid);
  VarSet inner = avoid;
  inner.insert(z);
  return PreTerm::lam(z, reify(v.apply_closure(SemVal::neutral(z, {})), inner));
}

}  // namespace

Term normalize(const Term& t, long long fuel) {
  if (fuel < 1) throw std::invalid_argument("normalize: fuel must be >= 1");
  auto gas = std::make_shared<long long>(fuel);
  SemDomain<SemVal> dom;
  dom.name = "nbe";
  dom.ap = [gas, fuel](const SemVal& f, const SemVal& a) {
    if (f.is_closure()) {
      if (--*gas < 0) throw FuelExhausted(fuel);
      return f.apply_closure(a);
    }
    std::vector<SemVal> spine = f.spine();
    spine.push_back(a);
    return SemVal::neutral(f.head(), std::move(spine));
  };
  dom.lm = [](const std::function<SemVal(const SemVal&)>& f) {
    return SemVal::closure(f);
  };
  // No probes and no equality: this domain is evaluated, never law-checked.
  Env<SemVal> env0{[](VarId v) { return SemVal::neutral(v, {}); }, {}};
  SemVal v = recurse(interp_ce_spec<SemVal>(dom), AvoidSet{}, t).run(env0);
  return Term(reify(v, free_vars(t)));
}

namespace {

RensetInstance<unsigned long long> nat_renset(const std::string& name) {
  RensetInstance<unsigned long long> r;
  r.name = name;
  r.rename = [](const unsigned long long& n, VarId, VarId) { return n; };
  r.equal = [](const unsigned long long& a, const unsigned long long& b) {
    return a == b;
  };
  r.support_bound = [](const unsigned long long&) { return VarSet{}; };
  r.sample = [](Rng& rng) {
    return static_cast<unsigned long long>(rng.below(40));
  };
  r.show = [](const unsigned long long& n) { return std::to_string(n); };
  return r;
}

}  // namespace

CERensetSpec<unsigned long long> length_spec() {
  CERensetSpec<unsigned long long> s;
  s.name = "length";
  s.base = nat_renset("length-nat");
  s.vr = [](VarId) -> unsigned long long { return 1; };
  s.ap = [](const unsigned long long& a, const unsigned long long& b) {
    return std::max(a, b) + 1;
  };
  s.lm = [](VarId, const unsigned long long& n) { return n + 1; };
  return s;
}

CERensetSpec<unsigned long long> clam_spec() {
  CERensetSpec<unsigned long long> s;
  s.name = "clam";
  s.base = nat_renset("clam-nat");
  s.vr = [](VarId) -> unsigned long long { return 0; };
  s.ap = [](const unsigned long long& a, const unsigned long long& b) {
    return a + b;
  };
  s.lm = [](VarId, const unsigned long long& n) { return n + 1; };
  return s;
}

unsigned long long VarCount::value(VarId v) const {
  auto it = at.find(v);
  return it != at.end() ? it->second : 0;
}

void VarCount::set(VarId v, unsigned long long n) {
  if (n == 0)
    at.erase(v);
  else
    at.insert_or_assign(v, n);
}

std::string VarCount::show() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, n] : at) {
    if (!first) out += ", ";
    first = false;
    out += var_name(v) + ":" + std::to_string(n);
  }
  return out + "}";
}

CERensetSpec<VarCount> cfv_spec() {
  CERensetSpec<VarCount> s;
  s.name = "cfv";
  s.base.name = "var-counts";
  // Renaming folds the old variable's count into the new one.
  s.base.rename = [](const VarCount& f, VarId to, VarId from) {
    if (to == from) return f;
    VarCount g = f;
    g.set(to, f.value(to) + f.value(from));
    g.set(from, 0);
    return g;
  };
  s.base.equal = [](const VarCount& a, const VarCount& b) { return a == b; };
  s.base.support_bound = [](const VarCount& f) {
    VarSet keys;
    for (const auto& [v, n] : f.at) keys.insert(v);
    return keys;
  };
  s.base.sample = [](Rng& rng) {
    VarCount f;
    for (VarId v : default_alphabet().items())
      if (rng.chance(1, 3)) f.set(v, 1 + rng.below(3));
    return f;
  };
  s.base.show = [](const VarCount& f) { return f.show(); };
  s.vr = [](VarId x) {
    VarCount f;
    f.set(x, 1);
    return f;
  };
  s.ap = [](const VarCount& a, const VarCount& b) {
    VarCount c = a;
    for (const auto& [v, n] : b.at) c.set(v, c.value(v) + n);
    return c;
  };
  s.lm = [](VarId x, const VarCount& f) {
    VarCount g = f;
    g.set(x, 0);
    return g;
  };
  return s;
}

SemDomain<long long> flat_sum_domain() {
  SemDomain<long long> d;
  d.name = "flat-sum";
  d.ap = [](const long long& a, const long long& b) { return a + b; };
  d.lm = [](const std::function<long long(const long long&)>& f) {
    return f(1);
  };
  d.equal_probe = {0, 1, 2, 3};
  d.equal = [](const long long& a, const long long& b) { return a == b; };
  d.show = [](const long long& v) { return std::to_string(v); };
  return d;
}

SemDomain<long long> flat_and_domain() {
  SemDomain<long long> d;
  d.name = "flat-and";
  d.ap = [](const long long& a, const long long& b) {
    return (a != 0 && b != 0) ? 1LL : 0LL;
  };
  d.lm = [](const std::function<long long(const long long&)>& f) {
    return f(1) != 0 ? 1LL : 0LL;
  };
  d.equal_probe = {0, 1};
  d.equal = [](const long long& a, const long long& b) { return a == b; };
  d.show = [](const long long& v) { return v != 0 ? "true" : "false"; };
  return d;
}

FixtureConfig FixtureConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture config: " + path);
  FixtureConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    line.erase(line.begin(),
               std::find_if(line.begin(), line.end(), notspace));
    line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(),
               line.end());
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto strip = [&](std::string s) {
      s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
      s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
      return s;
    };
    key = strip(key);
    val = strip(val);
    long long parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoll(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": not an integer: " + val);
    }
    if (key == "modulus")
      cfg.modulus = parsed;
    else if (key == "ap_a")
      cfg.ap_a = parsed;
    else if (key == "ap_b")
      cfg.ap_b = parsed;
    else if (key == "ap_c")
      cfg.ap_c = parsed;
    else if (key == "ap_k")
      cfg.ap_k = parsed;
    else if (key == "lm_a")
      cfg.lm_a = parsed;
    else if (key == "lm_b")
      cfg.lm_b = parsed;
    else if (key == "lm_k")
      cfg.lm_k = parsed;
    else if (key == "lm_probe")
      cfg.lm_probe = parsed;
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key: " + key);
  }
  return cfg;
}

std::string FixtureConfig::describe() const {
  std::ostringstream os;
  os << "modulus=" << modulus << " ap=(" << ap_a << "," << ap_b << "," << ap_c
     << "," << ap_k << ") lm=(" << lm_a << "," << lm_b << "," << lm_k
     << ") lm_probe=" << lm_probe;
  return os.str();
}

SemDomain<long long> arith_domain(const FixtureConfig& cfg) {
  const long long m = cfg.modulus;
  if (m < 2 || m > 1'000'000)
    throw std::runtime_error("fixture modulus must be in [2, 1000000]");
  auto norm = [m](long long v) { return ((v % m) + m) % m; };
  const long long aa = norm(cfg.ap_a), ab = norm(cfg.ap_b),
                  ac = norm(cfg.ap_c), ak = norm(cfg.ap_k);
  const long long la = norm(cfg.lm_a), lb = norm(cfg.lm_b),
                  lk = norm(cfg.lm_k), lp = norm(cfg.lm_probe);
  SemDomain<long long> d;
  d.name = "arith";
  d.ap = [=](const long long& a, const long long& b) {
    return norm(aa * a + ab * b + norm(ac * a) * b + ak);
  };
  d.lm = [=](const std::function<long long(const long long&)>& f) {
    return norm(la * f(lp) + lb * f(norm(lp + 1)) + lk);
  };
  for (long long v : {0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 97}) {
    long long p = norm(v);
    if (std::find(d.equal_probe.begin(), d.equal_probe.end(), p) ==
        d.equal_probe.end())
      d.equal_probe.push_back(p);
  }
  d.equal = [](const long long& a, const long long& b) { return a == b; };
  d.show = [](const long long& v) { return std::to_string(v); };
  return d;
}

SemDomain<long long> one_point_domain() {
  SemDomain<long long> d;
  d.name = "one-point";
  d.ap = [](const long long&, const long long&) { return 0LL; };
  d.lm = [](const std::function<long long(const long long&)>&) { return 0LL; };
  d.equal_probe = {0};
  d.equal = [](const long long& a, const long long& b) { return a == b; };
  d.show = [](const long long& v) { return std::to_string(v); };
  return d;
}

unsigned long long length_of(const Term& t) {
  return recurse(length_spec(), AvoidSet{}, t);
}

unsigned long long clam(const Term& t) {
  return recurse(clam_spec(), AvoidSet{}, t);
}

unsigned long long cfv(const Term& t, VarId x) {
  return recurse(cfv_spec(), AvoidSet{}, t).value(x);
}

unsigned long long cbv(const Term& t) {
  Env<long long> zero{[](VarId) { return 0LL; }, {}};
  return static_cast<unsigned long long>(sem(flat_sum_domain(), t, zero));
}

bool can_eta(const Term& t) {
  const PreTerm& r = t.repr();
  if (r.kind() != PreTerm::Kind::Lam) return false;
  PreTerm body = r.body();
  if (body.kind() != PreTerm::Kind::App) return false;
  if (body.arg().kind() != PreTerm::Kind::Var ||
      body.arg().var() != r.var())
    return false;
  Env<long long> top{[](VarId) { return 1LL; }, {}};
  return sem(flat_and_domain(), Term(body.fun()),
             top.update(r.var(), 0)) != 0;
}

Term subst_via_recursor(const Term& t, const Term& s, VarId x) {
  CERensetSpec<Term> spec = term_ce_spec();
  spec.name = "subst-via-recursor";
  spec.vr = [s, x](VarId y) { return y == x ? s : Term::var(y); };
  AvoidSet avoid = free_vars(s);
  avoid.insert(x);
  return recurse(spec, avoid, t);
}

Term psubst_via_recursor(const Term& t, const FinTermEnv& rho) {
  CERensetSpec<Term> spec = term_ce_spec();
  spec.name = "psubst-via-recursor";
  spec.vr = [rho](VarId y) { return rho.apply(y); };
  AvoidSet avoid = rho.support().unioned(rho.range_free_vars());
  return recurse(spec, avoid, t);
}

namespace {

unsigned long long length_db(const DbTerm& d) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
    case DbTerm::Kind::Free:
      return 1;
    case DbTerm::Kind::App:
      return std::max(length_db(d.fun()), length_db(d.arg())) + 1;
    case DbTerm::Kind::Lam:
      return length_db(d.body()) + 1;
  }
  return 0;
}

unsigned long long clam_db(const DbTerm& d) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
    case DbTerm::Kind::Free:
      return 0;
    case DbTerm::Kind::App:
      return clam_db(d.fun()) + clam_db(d.arg());
    case DbTerm::Kind::Lam:
      return clam_db(d.body()) + 1;
  }
  return 0;
}

unsigned long long cfv_db(const DbTerm& d, VarId x) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
      return 0;
    case DbTerm::Kind::Free:
      return d.free_var() == x ? 1 : 0;
    case DbTerm::Kind::App:
      return cfv_db(d.fun(), x) + cfv_db(d.arg(), x);
    case DbTerm::Kind::Lam:
      return cfv_db(d.body(), x);
  }
  return 0;
}

unsigned long long cbv_db(const DbTerm& d) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
      return 1;
    case DbTerm::Kind::Free:
      return 0;
    case DbTerm::Kind::App:
      return cbv_db(d.fun()) + cbv_db(d.arg());
    case DbTerm::Kind::Lam:
      return cbv_db(d.body());
  }
  return 0;
}

bool refers_to_depth(const DbTerm& d, std::uint32_t depth) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
      return d.bound_index() == depth;
    case DbTerm::Kind::Free:
      return false;
    case DbTerm::Kind::App:
      return refers_to_depth(d.fun(), depth) ||
             refers_to_depth(d.arg(), depth);
    case DbTerm::Kind::Lam:
      return refers_to_depth(d.body(), depth + 1);
  }
  return false;
}

}  // namespace

unsigned long long length_structural(const Term& t) {
  return length_db(to_debruijn(t));
}

unsigned long long clam_structural(const Term& t) {
  return clam_db(to_debruijn(t));
}

unsigned long long cfv_structural(const Term& t, VarId x) {
  return cfv_db(to_debruijn(t), x);
}

unsigned long long cbv_structural(const Term& t) {
  return cbv_db(to_debruijn(t));
}

bool can_eta_structural(const Term& t) {
  DbTerm d = to_debruijn(t);
  if (d.kind() != DbTerm::Kind::Lam) return false;
  DbTerm body = d.body();
  if (body.kind() != DbTerm::Kind::App) return false;
  if (body.arg().kind() != DbTerm::Kind::Bound ||
      body.arg().bound_index() != 0)
    return false;
  return !refers_to_depth(body.fun(), 0);
}

std::vector<std::string> cross_check_names() {
  return {"length", "clam", "cfv", "subst", "psubst", "cbv", "caneta"};
}

LawReport cross_check(const std::string& function_name, std::size_t max_size,
                      const VarSet& vars, std::uint64_t seed,
                      int random_trials) {
  auto names = cross_check_names();
  if (std::find(names.begin(), names.end(), function_name) == names.end())
    throw std::invalid_argument("unknown cross_check function: " +
                                function_name);

  LawReport r{.law = "crosscheck:" + function_name, .seed = seed};
  r.meta = "exhaustive size<=" + std::to_string(max_size) + " over " +
           vars.show() + " then " + std::to_string(random_trials) +
           " random of size<=25";
  Rng rng(mix_seed(seed, "crosscheck-" + function_name));

  auto check_numeric = [&](const Term& t, unsigned long long engine,
                           unsigned long long oracle) {
    ++r.trials;
    if (engine != oracle)
      r.record("t=" + print_term(t), std::to_string(engine),
               std::to_string(oracle));
  };

  auto compare = [&](const Term& t) {
    if (function_name == "length") {
      check_numeric(t, length_of(t), length_structural(t));
    } else if (function_name == "clam") {
      check_numeric(t, clam(t), clam_structural(t));
    } else if (function_name == "cbv") {
      check_numeric(t, cbv(t), cbv_structural(t));
    } else if (function_name == "caneta") {
      ++r.trials;
      bool engine = can_eta(t), oracle = can_eta_structural(t);
      if (engine != oracle)
        r.record("t=" + print_term(t), engine ? "true" : "false",
                 oracle ? "true" : "false");
    } else if (function_name == "cfv") {
      std::vector<VarId> xs = vars.items();
      xs.push_back(fresh_var(vars.unioned(free_vars(t))));
      for (VarId x : xs) {
        ++r.trials;
        unsigned long long engine = cfv(t, x), oracle = cfv_structural(t, x);
        if (engine != oracle)
          r.record("t=" + print_term(t) + " x=" + var_name(x),
                   std::to_string(engine), std::to_string(oracle));
      }
    } else if (function_name == "subst") {
      Term s = random_term(rng, vars, 6);
      std::vector<VarId> xs = vars.items();
      VarId x = xs[rng.below(xs.size())];
      ++r.trials;
      Term engine = subst_via_recursor(t, s, x);
      Term oracle = subst(t, s, x);
      if (!alpha_eq(engine, oracle))
        r.record("t=" + print_term(t) + " s=" + print_term(s) +
                     " x=" + var_name(x),
                 print_term(engine), print_term(oracle));
    } else if (function_name == "psubst") {
      FinTermEnv rho;
      std::vector<VarId> xs = vars.items();
      int binds = 1 + static_cast<int>(rng.below(3));
      for (int i = 0; i < binds; ++i)
        rho.bind(xs[rng.below(xs.size())], random_term(rng, vars, 5));
      Term engine = psubst_via_recursor(t, rho);
      Term oracle = psubst(t, rho);
      ++r.trials;
      if (!alpha_eq(engine, oracle)) {
        std::string rs;
        for (const auto& [v, img] : rho.entries())
          rs += var_name(v) + ":=" + print_term(img) + "; ";
        r.record("t=" + print_term(t) + " rho=[" + rs + "]",
                 print_term(engine), print_term(oracle));
      }
    }
  };

  for (const Term& t : enum_terms(max_size, vars)) compare(t);
  for (int i = 0; i < random_trials; ++i)
    compare(random_term(rng, vars, 25));
  return r;
}

}  // namespace bindkit
