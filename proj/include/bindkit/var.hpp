#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace bindkit {

// Variables are indices into an unbounded universe, so every finite avoid
// set leaves a smallest free index. Display names are attached by an
// Interner and never affect identity.
struct VarId {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(VarId, VarId) = default;
};

constexpr VarId vid(std::uint32_t i) { return VarId{i}; }

// Canonical rendering: "x<index>".
std::string var_name(VarId v);

// Finite variable set over a sorted vector. These stay small in practice
// (free-variable sets, avoid sets, law-check alphabets).
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<VarId> xs);
  explicit VarSet(std::vector<VarId> xs);

  bool contains(VarId v) const;
  void insert(VarId v);
  void erase(VarId v);

  VarSet unioned(const VarSet& other) const;
  VarSet minus(const VarSet& other) const;

  // Smallest index not in the set.
  VarId min_excluded() const;

  bool empty() const { return xs_.empty(); }
  std::size_t size() const { return xs_.size(); }
  auto begin() const { return xs_.begin(); }
  auto end() const { return xs_.end(); }
  const std::vector<VarId>& items() const { return xs_; }

  std::string show() const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<VarId> xs_;  // sorted, unique
};

// Deterministic fresh-name policy: the smallest index outside `avoid`.
VarId fresh_var(const VarSet& avoid);

// Maps human-readable names to indices for one parsing/printing session.
// Identifiers of the form x<digits> always denote that index; any other
// identifier is assigned the smallest index not yet taken. Sessions are
// explicit values, never ambient state.
class Interner {
 public:
  VarId intern(const std::string& name);
  void reserve(VarId v);
  std::string name(VarId v) const;  // bound display name, or canonical x<N>

 private:
  std::map<std::string, VarId> by_name_;
  std::map<VarId, std::string> by_id_;
  std::vector<bool> taken_;  // index -> already assigned or reserved

  void mark(std::uint32_t index);
};

}  // namespace bindkit
