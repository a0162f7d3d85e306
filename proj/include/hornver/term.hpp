#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hornver/signature.hpp"

namespace horn {

using TermId = std::uint32_t;
using VarId = std::uint32_t;

enum class TermTag : std::uint8_t { Var, App, Nat };

struct TermNode {
  TermTag tag = TermTag::Var;
  std::uint32_t head = 0;    // VarId when Var, SymId when App
  std::int64_t nat = 0;      // value when Nat
  std::vector<TermId> args;  // children when App
  std::uint32_t size = 1;    // total node count
  std::uint32_t depth = 1;
};

/// Interning arena for terms. Structurally equal terms share one TermId,
/// so equality anywhere downstream (indexing, dedup, memo keys) is an
/// integer compare. Terms are immutable once created.
class TermArena {
 public:
  TermArena() = default;
  TermArena(const TermArena&) = delete;
  TermArena& operator=(const TermArena&) = delete;
  TermArena(TermArena&&) = default;
  TermArena& operator=(TermArena&&) = default;

  VarId fresh_var(std::string hint);

  TermId var(VarId v);
  TermId app(SymId sym, std::vector<TermId> args);
  TermId nat(std::int64_t value);

  const TermNode& node(TermId t) const { return nodes_[t]; }
  const std::string& var_hint(VarId v) const { return var_hints_[v]; }
  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(var_hints_.size()); }
  std::size_t num_terms() const { return nodes_.size(); }

  bool is_var(TermId t) const { return nodes_[t].tag == TermTag::Var; }
  bool is_app(TermId t) const { return nodes_[t].tag == TermTag::App; }
  bool is_nat(TermId t) const { return nodes_[t].tag == TermTag::Nat; }

  void collect_vars(TermId t, std::set<VarId>& out) const;
  bool contains_var(TermId t, VarId v) const;

 private:
  struct Key {
    TermTag tag;
    std::uint32_t head;
    std::int64_t nat;
    std::vector<TermId> args;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  TermId intern(Key key);

  std::vector<TermNode> nodes_;
  std::unordered_map<Key, TermId, KeyHash> intern_;
  std::vector<std::string> var_hints_;
};

/// Idempotent substitution: a finite map from variables to terms where no
/// image mentions a domain variable. Built by unify/match; applying twice
/// equals applying once.
class Subst {
 public:
  Subst() = default;

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  std::optional<TermId> lookup(VarId v) const {
    auto it = map_.find(v);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  const std::map<VarId, TermId>& bindings() const { return map_; }

  TermId apply(TermArena& arena, TermId t) const;

  /// Normalizes triangular bindings (images may mention bound variables of
  /// later entries) into an idempotent substitution. Requires acyclicity,
  /// which unification guarantees via the occur check.
  static Subst from_triangular(TermArena& arena, const std::map<VarId, TermId>& bindings);

  /// Sequential composition: applies `then` to every image of this
  /// substitution and keeps `then`'s extra bindings.
  Subst compose(TermArena& arena, const Subst& then) const;

  void bind(VarId v, TermId t) { map_[v] = t; }

 private:
  std::map<VarId, TermId> map_;  // ordered: deterministic iteration
};

/// Most general unifier with occur check. `prefer` biases variable-variable
/// bindings toward binding a preferred variable; used by the disequation
/// simplifier to decide whether a unifier can be confined to the universals.
std::optional<Subst> unify(TermArena& arena, TermId a, TermId b,
                           const std::set<VarId>* prefer = nullptr);

/// One-sided unification: variables of `target` are rigid. On success
/// apply(result, pattern) == target.
std::optional<Subst> match_term(TermArena& arena, TermId pattern, TermId target);

/// Matching step that extends an accumulated binding map; used when several
/// patterns must match under one substitution.
bool match_extend(TermArena& arena, TermId pattern, TermId target,
                  std::map<VarId, TermId>& bindings);

}  // namespace horn
