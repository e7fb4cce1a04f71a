#include "bindkit/var.hpp"

#include <algorithm>
#include <cctype>

namespace bindkit {

std::string var_name(VarId v) { return "x" + std::to_string(v.index); }

VarSet::VarSet(std::initializer_list<VarId> xs) : xs_(xs) {
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
}

VarSet::VarSet(std::vector<VarId> xs) : xs_(std::move(xs)) {
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
}

bool VarSet::contains(VarId v) const {
  return std::binary_search(xs_.begin(), xs_.end(), v);
}

void VarSet::insert(VarId v) {
  auto it = std::lower_bound(xs_.begin(), xs_.end(), v);
  if (it == xs_.end() || *it != v) xs_.insert(it, v);
}

void VarSet::erase(VarId v) {
  auto it = std::lower_bound(xs_.begin(), xs_.end(), v);
  if (it != xs_.end() && *it == v) xs_.erase(it);
}

VarSet VarSet::unioned(const VarSet& other) const {
  std::vector<VarId> out;
  out.reserve(xs_.size() + other.xs_.size());
  std::set_union(xs_.begin(), xs_.end(), other.xs_.begin(), other.xs_.end(),
                 std::back_inserter(out));
  VarSet r;
  r.xs_ = std::move(out);
  return r;
}

VarSet VarSet::minus(const VarSet& other) const {
  std::vector<VarId> out;
  std::set_difference(xs_.begin(), xs_.end(), other.xs_.begin(),
                      other.xs_.end(), std::back_inserter(out));
  VarSet r;
  r.xs_ = std::move(out);
  return r;
}

VarId VarSet::min_excluded() const {
  std::uint32_t i = 0;
  for (VarId v : xs_) {
    if (v.index != i) break;
    ++i;
  }
  return VarId{i};
}

std::string VarSet::show() const {
  std::string s = "{";
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (i) s += ", ";
    s += var_name(xs_[i]);
  }
  return s + "}";
}

VarId fresh_var(const VarSet& avoid) { return avoid.min_excluded(); }

namespace {

// Recognizes canonical names x<digits> (no leading-zero normalization:
// "x007" is a plain identifier, only the exact decimal form is canonical).
bool canonical_index(const std::string& name, std::uint32_t* out) {
  if (name.size() < 2 || name[0] != 'x') return false;
  if (name[1] == '0' && name.size() > 2) return false;
  std::uint64_t acc = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    acc = acc * 10 + static_cast<std::uint64_t>(name[i] - '0');
    if (acc > 0xffffffffull) return false;
  }
  *out = static_cast<std::uint32_t>(acc);
  return true;
}

}  // namespace

void Interner::mark(std::uint32_t index) {
  if (taken_.size() <= index) taken_.resize(index + 1, false);
  taken_[index] = true;
}

void Interner::reserve(VarId v) { mark(v.index); }

VarId Interner::intern(const std::string& name) {
  std::uint32_t idx = 0;
  if (canonical_index(name, &idx)) {
    mark(idx);
    return VarId{idx};
  }
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second;
  std::uint32_t i = 0;
  while (i < taken_.size() && taken_[i]) ++i;
  VarId v{i};
  mark(i);
  by_name_.emplace(name, v);
  by_id_.emplace(v, name);
  return v;
}

std::string Interner::name(VarId v) const {
  auto it = by_id_.find(v);
  if (it != by_id_.end()) return it->second;
  return var_name(v);
}

}  // namespace bindkit
