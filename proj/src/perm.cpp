#include "bindkit/perm.hpp"

#include <algorithm>
#include <stdexcept>

#include "bindkit/enumerate.hpp"
#include "bindkit/parse.hpp"

namespace bindkit {

FinPerm FinPerm::transposition(VarId a, VarId b) {
  FinPerm p;
  if (a != b) {
    p.fwd_[a] = b;
    p.fwd_[b] = a;
  }
  return p;
}

FinPerm FinPerm::from_map(const std::map<VarId, VarId>& m) {
  FinPerm p;
  std::map<VarId, int> image_count;
  for (const auto& [k, v] : m) {
    ++image_count[v];
    if (!m.contains(v))
      throw std::invalid_argument("permutation image leaves the domain");
  }
  for (const auto& [v, c] : image_count)
    if (c != 1) throw std::invalid_argument("permutation is not injective");
  for (const auto& [k, v] : m)
    if (k != v) p.fwd_[k] = v;
  return p;
}

VarId FinPerm::operator()(VarId v) const {
  auto it = fwd_.find(v);
  return it == fwd_.end() ? v : it->second;
}

FinPerm FinPerm::compose(const FinPerm& tau) const {
  FinPerm out;
  VarSet keys;
  for (const auto& [k, v] : fwd_) keys.insert(k);
  for (const auto& [k, v] : tau.fwd_) keys.insert(k);
  for (VarId k : keys) {
    VarId image = (*this)(tau(k));
    if (image != k) out.fwd_[k] = image;
  }
  return out;
}

FinPerm FinPerm::inverse() const {
  FinPerm out;
  for (const auto& [k, v] : fwd_) out.fwd_[v] = k;
  return out;
}

VarSet FinPerm::moved() const {
  VarSet s;
  for (const auto& [k, v] : fwd_) s.insert(k);
  return s;
}

std::vector<std::pair<VarId, VarId>> FinPerm::transpositions() const {
  std::vector<std::pair<VarId, VarId>> out;
  VarSet done;
  for (const auto& [start, unused] : fwd_) {  // map order: smallest first
    if (done.contains(start)) continue;
    VarId c = (*this)(start);
    done.insert(start);
    while (c != start) {
      done.insert(c);
      out.emplace_back(start, c);
      c = (*this)(c);
    }
  }
  return out;
}

nlohmann::ordered_json FinPerm::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fwd_) j[std::to_string(k.index)] = v.index;
  return j;
}

FinPerm FinPerm::from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw std::invalid_argument("permutation JSON must be an object");
  std::map<VarId, VarId> m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t pos = 0;
    unsigned long k = std::stoul(it.key(), &pos);
    if (pos != it.key().size())
      throw std::invalid_argument("permutation key is not an index");
    if (!it.value().is_number_unsigned())
      throw std::invalid_argument("permutation value is not an index");
    m[vid(static_cast<std::uint32_t>(k))] =
        vid(it.value().get<std::uint32_t>());
  }
  return from_map(m);
}

std::string FinPerm::show() const { return to_json().dump(); }

Term perm_action_term(const Term& t, const FinPerm& p) {
  Term acc = t;
  for (const auto& [u, v] : p.transpositions()) acc = swap(acc, u, v);
  return acc;
}

namespace {

PreTerm relabel_rec(const PreTerm& t, const FinPerm& p) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return PreTerm::var(p(t.var()));
    case PreTerm::Kind::App:
      return PreTerm::app(relabel_rec(t.fun(), p), relabel_rec(t.arg(), p));
    case PreTerm::Kind::Lam:
      return PreTerm::lam(p(t.var()), relabel_rec(t.body(), p));
  }
  return t;
}

}  // namespace

Term direct_relabel_term(const Term& t, const FinPerm& p) {
  return Term(relabel_rec(t.repr(), p));
}

FinPerm random_perm(Rng& rng, const std::vector<VarId>& window) {
  std::vector<VarId> image = window;
  for (std::size_t i = image.size(); i > 1; --i)
    std::swap(image[i - 1], image[rng.below(i)]);
  std::map<VarId, VarId> m;
  for (std::size_t i = 0; i < window.size(); ++i) m[window[i]] = image[i];
  return FinPerm::from_map(m);
}

std::vector<LawReport> check_perm_group_laws(std::uint64_t seed, int trials) {
  std::vector<LawReport> out;
  std::vector<VarId> window = {vid(0), vid(1), vid(2), vid(3), vid(4)};

  {
    LawReport r{.law = "finperm:group-identity",
                .seed = mix_seed(seed, "group-identity")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      FinPerm p = random_perm(rng, window);
      ++r.trials;
      bool ok = p.compose(FinPerm::identity()) == p &&
                FinPerm::identity().compose(p) == p;
      if (!ok) r.record("sigma=" + p.show(), "compose with id", p.show());
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = "finperm:group-associativity",
                .seed = mix_seed(seed, "group-assoc")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      FinPerm a = random_perm(rng, window);
      FinPerm b = random_perm(rng, window);
      FinPerm c = random_perm(rng, window);
      ++r.trials;
      if (!(a.compose(b).compose(c) == a.compose(b.compose(c))))
        r.record("a=" + a.show() + " b=" + b.show() + " c=" + c.show(),
                 a.compose(b).compose(c).show(),
                 a.compose(b.compose(c)).show());
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = "finperm:group-inverse",
                .seed = mix_seed(seed, "group-inverse")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      FinPerm p = random_perm(rng, window);
      ++r.trials;
      bool ok = p.compose(p.inverse()).is_identity() &&
                p.inverse().compose(p).is_identity();
      if (!ok)
        r.record("sigma=" + p.show(), p.compose(p.inverse()).show(), "{}");
    }
    out.push_back(std::move(r));
  }

  {
    // The decomposition must reconstruct its permutation.
    LawReport r{.law = "finperm:decomposition-sound",
                .seed = mix_seed(seed, "decomp-sound")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      FinPerm p = random_perm(rng, window);
      FinPerm acc;
      for (const auto& [u, v] : p.transpositions())
        acc = FinPerm::transposition(u, v).compose(acc);
      ++r.trials;
      if (!(acc == p)) r.record("sigma=" + p.show(), acc.show(), p.show());
    }
    out.push_back(std::move(r));
  }

  return out;
}

PermNominalInstance<Term> term_perm_nominal(std::size_t sampler_max_size,
                                            const VarSet& alphabet) {
  PermNominalInstance<Term> p;
  p.name = "term";
  p.act = perm_action_term;
  p.equal = alpha_eq;
  p.support_bound = [](const Term& t) { return free_vars(t); };
  p.sample = [alphabet, sampler_max_size](Rng& rng) {
    return random_term(rng, alphabet, sampler_max_size);
  };
  p.show = [](const Term& t) { return print_term(t); };
  return p;
}

}  // namespace bindkit
