#include "hornver/term.hpp"

#include <cassert>
#include <functional>

namespace horn {

std::size_t TermArena::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<std::uint32_t>()(static_cast<std::uint32_t>(k.tag));
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<std::uint32_t>()(k.head));
  mix(std::hash<std::int64_t>()(k.nat));
  for (TermId a : k.args) mix(std::hash<TermId>()(a));
  return h;
}

VarId TermArena::fresh_var(std::string hint) {
  var_hints_.push_back(std::move(hint));
  return static_cast<VarId>(var_hints_.size() - 1);
}

TermId TermArena::intern(Key key) {
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;
  TermNode node;
  node.tag = key.tag;
  node.head = key.head;
  node.nat = key.nat;
  node.args = key.args;
  if (key.tag == TermTag::App) {
    std::uint32_t size = 1, depth = 0;
    for (TermId a : node.args) {
      size += nodes_[a].size;
      depth = std::max(depth, nodes_[a].depth);
    }
    node.size = size;
    node.depth = depth + 1;
  }
  TermId id = static_cast<TermId>(nodes_.size());
  nodes_.push_back(std::move(node));
  intern_.emplace(std::move(key), id);
  return id;
}

TermId TermArena::var(VarId v) {
  assert(v < var_hints_.size());
  return intern(Key{TermTag::Var, v, 0, {}});
}

TermId TermArena::app(SymId sym, std::vector<TermId> args) {
  return intern(Key{TermTag::App, sym, 0, std::move(args)});
}

TermId TermArena::nat(std::int64_t value) {
  return intern(Key{TermTag::Nat, 0, value, {}});
}

void TermArena::collect_vars(TermId t, std::set<VarId>& out) const {
  const TermNode& n = nodes_[t];
  if (n.tag == TermTag::Var) {
    out.insert(n.head);
  } else {
    for (TermId a : n.args) collect_vars(a, out);
  }
}

bool TermArena::contains_var(TermId t, VarId v) const {
  const TermNode& n = nodes_[t];
  if (n.tag == TermTag::Var) return n.head == v;
  for (TermId a : n.args)
    if (contains_var(a, v)) return true;
  return false;
}

namespace {

TermId apply_rec(TermArena& arena, const std::map<VarId, TermId>& map, TermId t,
                 std::unordered_map<TermId, TermId>& memo) {
  auto hit = memo.find(t);
  if (hit != memo.end()) return hit->second;
  const TermNode& n = arena.node(t);
  TermId out = t;
  if (n.tag == TermTag::Var) {
    auto it = map.find(n.head);
    if (it != map.end()) out = it->second;
  } else if (n.tag == TermTag::App) {
    bool changed = false;
    std::vector<TermId> args;
    args.reserve(n.args.size());
    for (TermId a : n.args) {
      TermId b = apply_rec(arena, map, a, memo);
      changed |= (b != a);
      args.push_back(b);
    }
    if (changed) out = arena.app(n.head, std::move(args));
  }
  memo.emplace(t, out);
  return out;
}

}  // namespace

TermId Subst::apply(TermArena& arena, TermId t) const {
  if (map_.empty()) return t;
  std::unordered_map<TermId, TermId> memo;
  return apply_rec(arena, map_, t, memo);
}

Subst Subst::from_triangular(TermArena& arena, const std::map<VarId, TermId>& bindings) {
  // Resolve each image by repeatedly substituting the triangular bindings;
  // the occur check makes the binding relation acyclic, so this terminates.
  Subst out;
  std::unordered_map<TermId, TermId> memo;
  std::function<TermId(TermId)> resolve = [&](TermId t) -> TermId {
    auto hit = memo.find(t);
    if (hit != memo.end()) return hit->second;
    const TermNode& n = arena.node(t);
    TermId r = t;
    if (n.tag == TermTag::Var) {
      auto it = bindings.find(n.head);
      if (it != bindings.end()) r = resolve(it->second);
    } else if (n.tag == TermTag::App) {
      bool changed = false;
      std::vector<TermId> args;
      args.reserve(n.args.size());
      for (TermId a : n.args) {
        TermId b = resolve(a);
        changed |= (b != a);
        args.push_back(b);
      }
      if (changed) r = arena.app(n.head, std::move(args));
    }
    memo.emplace(t, r);
    return r;
  };
  for (const auto& [v, img] : bindings) {
    TermId r = resolve(img);
    if (arena.node(r).tag == TermTag::Var && arena.node(r).head == v) continue;
    out.bind(v, r);
  }
  return out;
}

Subst Subst::compose(TermArena& arena, const Subst& then) const {
  Subst out;
  for (const auto& [v, img] : map_) out.bind(v, then.apply(arena, img));
  for (const auto& [v, img] : then.bindings()) {
    if (!map_.count(v)) out.bind(v, img);
  }
  return out;
}

namespace {

// Dereferences top-level variable chains through the triangular bindings.
TermId walk(TermArena& arena, const std::map<VarId, TermId>& b, TermId t) {
  while (arena.node(t).tag == TermTag::Var) {
    auto it = b.find(arena.node(t).head);
    if (it == b.end()) break;
    t = it->second;
  }
  return t;
}

bool occurs(TermArena& arena, const std::map<VarId, TermId>& b, VarId v, TermId t) {
  t = walk(arena, b, t);
  const TermNode& n = arena.node(t);
  if (n.tag == TermTag::Var) return n.head == v;
  if (n.tag == TermTag::App) {
    for (TermId a : n.args)
      if (occurs(arena, b, v, a)) return true;
  }
  return false;
}

bool unify_rec(TermArena& arena, std::map<VarId, TermId>& b, TermId s, TermId t,
               const std::set<VarId>* prefer) {
  s = walk(arena, b, s);
  t = walk(arena, b, t);
  if (s == t) return true;
  const TermNode& ns = arena.node(s);
  const TermNode& nt = arena.node(t);
  if (ns.tag == TermTag::Var && nt.tag == TermTag::Var) {
    // Both unbound; bind the preferred side when asked to.
    if (prefer && !prefer->count(ns.head) && prefer->count(nt.head)) {
      b.emplace(nt.head, s);
    } else {
      b.emplace(ns.head, t);
    }
    return true;
  }
  if (ns.tag == TermTag::Var) {
    if (occurs(arena, b, ns.head, t)) return false;
    b.emplace(ns.head, t);
    return true;
  }
  if (nt.tag == TermTag::Var) {
    if (occurs(arena, b, nt.head, s)) return false;
    b.emplace(nt.head, s);
    return true;
  }
  if (ns.tag != nt.tag) return false;
  if (ns.tag == TermTag::Nat) return ns.nat == nt.nat;
  if (ns.head != nt.head || ns.args.size() != nt.args.size()) return false;
  for (std::size_t i = 0; i < ns.args.size(); ++i) {
    if (!unify_rec(arena, b, ns.args[i], nt.args[i], prefer)) return false;
  }
  return true;
}

}  // namespace

std::optional<Subst> unify(TermArena& arena, TermId a, TermId b, const std::set<VarId>* prefer) {
  std::map<VarId, TermId> bindings;
  if (!unify_rec(arena, bindings, a, b, prefer)) return std::nullopt;
  return Subst::from_triangular(arena, bindings);
}

bool match_extend(TermArena& arena, TermId pattern, TermId target,
                  std::map<VarId, TermId>& bindings) {
  const TermNode& p = arena.node(pattern);
  if (p.tag == TermTag::Var) {
    auto it = bindings.find(p.head);
    if (it != bindings.end()) return it->second == target;
    bindings.emplace(p.head, target);
    return true;
  }
  const TermNode& t = arena.node(target);
  if (p.tag != t.tag) return false;
  if (p.tag == TermTag::Nat) return p.nat == t.nat;
  if (p.head != t.head || p.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (!match_extend(arena, p.args[i], t.args[i], bindings)) return false;
  }
  return true;
}

std::optional<Subst> match_term(TermArena& arena, TermId pattern, TermId target) {
  std::map<VarId, TermId> bindings;
  if (!match_extend(arena, pattern, target, bindings)) return std::nullopt;
  Subst out;
  for (const auto& [v, img] : bindings) {
    if (arena.node(img).tag == TermTag::Var && arena.node(img).head == v) continue;
    out.bind(v, img);
  }
  return out;
}

}  // namespace horn
