#include "hornver/clause.hpp"

#include <algorithm>
#include <cassert>

#include "hornver/constraints.hpp"

namespace horn {

Fact apply_subst(TermArena& arena, const Subst& s, const Fact& f) {
  Fact out;
  out.pred = f.pred;
  out.args.reserve(f.args.size());
  for (TermId t : f.args) out.args.push_back(s.apply(arena, t));
  return out;
}

ConstraintSet apply_subst(TermArena& arena, const Subst& s, const ConstraintSet& cs) {
  ConstraintSet out;
  out.diseqs.reserve(cs.diseqs.size());
  for (const Diseq& d : cs.diseqs) {
    // Universals never occur in clause facts, so substitutions coming from
    // resolution cannot bind or capture them.
    out.diseqs.push_back({d.universals, s.apply(arena, d.lhs), s.apply(arena, d.rhs)});
  }
  out.nat_flags.reserve(cs.nat_flags.size());
  for (const NatFlag& nf : cs.nat_flags) out.nat_flags.push_back({s.apply(arena, nf.term), nf.is_nat});
  out.geqs.reserve(cs.geqs.size());
  for (const Geq& g : cs.geqs)
    out.geqs.push_back({s.apply(arena, g.lhs), s.apply(arena, g.rhs), g.offset});
  return out;
}

Clause apply_subst(TermArena& arena, const Subst& s, const Clause& c) {
  Clause out;
  out.hyps.reserve(c.hyps.size());
  for (const Fact& h : c.hyps) out.hyps.push_back(apply_subst(arena, s, h));
  out.cons = apply_subst(arena, s, c.cons);
  out.concl = apply_subst(arena, s, c.concl);
  out.exempt_data = c.exempt_data;
  return out;
}

void collect_vars(const TermArena& arena, const Fact& f, std::set<VarId>& out) {
  for (TermId t : f.args) arena.collect_vars(t, out);
}

void collect_vars(const TermArena& arena, const Clause& c, std::set<VarId>& out) {
  for (const Fact& h : c.hyps) collect_vars(arena, h, out);
  collect_vars(arena, c.concl, out);
  for (const Diseq& d : c.cons.diseqs) {
    arena.collect_vars(d.lhs, out);
    arena.collect_vars(d.rhs, out);
    for (VarId u : d.universals) out.insert(u);
  }
  for (const NatFlag& nf : c.cons.nat_flags) arena.collect_vars(nf.term, out);
  for (const Geq& g : c.cons.geqs) {
    arena.collect_vars(g.lhs, out);
    arena.collect_vars(g.rhs, out);
  }
}

Clause rename_clause(TermArena& arena, const Clause& c) {
  std::set<VarId> vars;
  collect_vars(arena, c, vars);
  Subst fresh;
  std::map<VarId, VarId> var_map;
  for (VarId v : vars) {
    VarId nv = arena.fresh_var(arena.var_hint(v));
    var_map[v] = nv;
    fresh.bind(v, arena.var(nv));
  }
  Clause out = apply_subst(arena, fresh, c);
  for (Diseq& d : out.cons.diseqs) {
    for (VarId& u : d.universals) u = var_map.at(u);
    std::sort(d.universals.begin(), d.universals.end());
  }
  return out;
}

Fact rename_fact(TermArena& arena, const Fact& f) {
  std::set<VarId> vars;
  const_cast<const TermArena&>(arena), collect_vars(arena, f, vars);
  Subst fresh;
  for (VarId v : vars) fresh.bind(v, arena.var(arena.fresh_var(arena.var_hint(v))));
  return apply_subst(arena, fresh, f);
}

std::uint32_t clause_term_depth(const TermArena& arena, const Clause& c) {
  std::uint32_t d = 0;
  auto fact_depth = [&](const Fact& f) {
    for (TermId t : f.args) d = std::max(d, arena.node(t).depth);
  };
  for (const Fact& h : c.hyps) fact_depth(h);
  fact_depth(c.concl);
  for (const Diseq& q : c.cons.diseqs) {
    d = std::max(d, arena.node(q.lhs).depth);
    d = std::max(d, arena.node(q.rhs).depth);
  }
  for (const NatFlag& nf : c.cons.nat_flags) d = std::max(d, arena.node(nf.term).depth);
  for (const Geq& g : c.cons.geqs) {
    d = std::max(d, arena.node(g.lhs).depth);
    d = std::max(d, arena.node(g.rhs).depth);
  }
  return d;
}

bool is_tautology(const Clause& c) {
  return std::find(c.hyps.begin(), c.hyps.end(), c.concl) != c.hyps.end();
}

void dedup_hyps(Clause& c) {
  std::vector<Fact> out;
  out.reserve(c.hyps.size());
  for (Fact& h : c.hyps) {
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  }
  c.hyps = std::move(out);
}

namespace {

bool facts_match(TermArena& arena, const Fact& pattern, const Fact& target,
                 std::map<VarId, TermId>& bindings) {
  if (pattern.pred != target.pred || pattern.args.size() != target.args.size()) return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match_extend(arena, pattern.args[i], target.args[i], bindings)) return false;
  }
  return true;
}

bool diseq_equivalent(TermArena& arena, const SymbolTable&, const Diseq& a, const Diseq& b);

// Injective assignment of remaining c1 hypotheses onto c2 hypotheses.
bool match_hyps(TermArena& arena, const Clause& c1, const Clause& c2, std::size_t next,
                std::vector<bool>& used, std::map<VarId, TermId>& bindings,
                const std::function<bool(const std::map<VarId, TermId>&)>& accept) {
  if (next == c1.hyps.size()) return accept(bindings);
  for (std::size_t j = 0; j < c2.hyps.size(); ++j) {
    if (used[j]) continue;
    std::map<VarId, TermId> saved = bindings;
    if (facts_match(arena, c1.hyps[next], c2.hyps[j], bindings)) {
      used[j] = true;
      if (match_hyps(arena, c1, c2, next + 1, used, bindings, accept)) return true;
      used[j] = false;
    }
    bindings = std::move(saved);
  }
  return false;
}

bool geq_implied(const std::vector<Geq>& canon, const Geq& g) {
  for (const Geq& h : canon) {
    if (h.lhs == g.lhs && h.rhs == g.rhs && h.offset >= g.offset) return true;
  }
  return false;
}

bool constraints_implied(TermArena& arena, const ConstraintSet& needed, const Clause& c2) {
  if (needed.empty()) return true;

  ConstraintResult canon2 = simplify_nat_constraints(arena, c2.cons);
  if (canon2.unsat) return true;  // c2 derives nothing, trivially implied
  ConstraintResult canon1 = simplify_nat_constraints(arena, needed);
  if (canon1.unsat) return false;

  for (const Diseq& d : needed.diseqs) {
    bool found = false;
    for (const Diseq& e : c2.cons.diseqs) {
      if (diseq_equivalent(arena, SymbolTable(), d, e)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  for (const NatFlag& nf : canon1.cons.nat_flags) {
    if (arena.is_nat(nf.term) && nf.is_nat) continue;
    bool found = false;
    for (const NatFlag& other : canon2.cons.nat_flags) {
      if (other.term == nf.term && other.is_nat == nf.is_nat) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  for (const Geq& g : canon1.cons.geqs) {
    if (!geq_implied(canon2.cons.geqs, g)) return false;
  }
  return true;
}

// Equality of disequations up to renaming of their universal variables.
bool diseq_equivalent(TermArena& arena, const SymbolTable&, const Diseq& a, const Diseq& b) {
  if (a.universals.size() != b.universals.size()) return false;
  if (a.universals.empty()) return a.lhs == b.lhs && a.rhs == b.rhs;
  // Match a's sides against b's, allowing only universal-to-universal
  // variable bindings, bijectively.
  std::map<VarId, TermId> bindings;
  std::set<VarId> a_univ(a.universals.begin(), a.universals.end());
  std::set<VarId> b_univ(b.universals.begin(), b.universals.end());
  std::function<bool(TermId, TermId)> walk = [&](TermId x, TermId y) -> bool {
    const TermNode& nx = arena.node(x);
    const TermNode& ny = arena.node(y);
    if (nx.tag == TermTag::Var && a_univ.count(nx.head)) {
      if (ny.tag != TermTag::Var || !b_univ.count(ny.head)) return false;
      auto it = bindings.find(nx.head);
      if (it != bindings.end()) return it->second == y;
      for (const auto& [v, img] : bindings)
        if (img == y) return false;  // keep the mapping injective
      bindings.emplace(nx.head, y);
      return true;
    }
    if (nx.tag != ny.tag) return false;
    if (nx.tag == TermTag::Var) return nx.head == ny.head;
    if (nx.tag == TermTag::Nat) return nx.nat == ny.nat;
    if (nx.head != ny.head || nx.args.size() != ny.args.size()) return false;
    for (std::size_t i = 0; i < nx.args.size(); ++i)
      if (!walk(nx.args[i], ny.args[i])) return false;
    return true;
  };
  return walk(a.lhs, b.lhs) && walk(a.rhs, b.rhs);
}

}  // namespace

bool subsumes(TermArena& arena, const Clause& c1, const Clause& c2) {
  if (c1.hyps.size() > c2.hyps.size()) return false;
  std::map<VarId, TermId> bindings;
  if (!facts_match(arena, c1.concl, c2.concl, bindings)) return false;
  std::vector<bool> used(c2.hyps.size(), false);
  auto accept = [&](const std::map<VarId, TermId>& b) {
    if (c1.cons.empty()) return true;
    Subst sigma;
    for (const auto& [v, img] : b) sigma.bind(v, img);
    return constraints_implied(arena, apply_subst(arena, sigma, c1.cons), c2);
  };
  return match_hyps(arena, c1, c2, 0, used, bindings, accept);
}

namespace {

bool is_data_app(const TermArena& arena, const SymbolTable& syms, TermId t) {
  const TermNode& n = arena.node(t);
  return n.tag == TermTag::App && syms[n.head].kind == SymKind::DataConstructor;
}

}  // namespace

std::vector<Clause> decompose_data(TermArena& arena, const SymbolTable& syms,
                                   const PredTable& preds, const Clause& c) {
  if (c.exempt_data) return {c};
  const PredId att = preds.att();

  Clause cur = c;
  // Hypotheses: replace att(f(M1..Mn)) by att(M1)..att(Mn), to a fixpoint.
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < cur.hyps.size(); ++i) {
      const Fact& h = cur.hyps[i];
      if (h.pred != att || h.args.size() != 1) continue;
      if (!is_data_app(arena, syms, h.args[0])) continue;
      std::vector<TermId> parts = arena.node(h.args[0]).args;
      std::vector<Fact> repl;
      repl.reserve(parts.size());
      for (TermId p : parts) repl.push_back(Fact{att, {p}});
      cur.hyps.erase(cur.hyps.begin() + static_cast<std::ptrdiff_t>(i));
      cur.hyps.insert(cur.hyps.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
      again = true;
      break;
    }
  }

  // Conclusion: att(f(M1..Mn)) splits the clause n ways, recursively.
  if (cur.concl.pred == att && cur.concl.args.size() == 1 &&
      is_data_app(arena, syms, cur.concl.args[0])) {
    std::vector<Clause> out;
    for (TermId part : arena.node(cur.concl.args[0]).args) {
      Clause piece = cur;
      piece.concl = Fact{att, {part}};
      for (Clause& sub : decompose_data(arena, syms, preds, piece)) out.push_back(std::move(sub));
    }
    return out;
  }
  return {cur};
}

}  // namespace horn
