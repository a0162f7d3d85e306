#include "hornver/print.hpp"

#include <map>
#include <set>
#include <sstream>

namespace horn {

namespace {

class NamePool {
 public:
  explicit NamePool(const TermArena& arena, bool canonical) : arena_(arena), canonical_(canonical) {}

  const std::string& name(VarId v) {
    auto it = names_.find(v);
    if (it != names_.end()) return it->second;
    std::string n;
    if (canonical_) {
      n = "v" + std::to_string(names_.size());
    } else {
      n = arena_.var_hint(v);
      if (n.empty()) n = "_x";
      while (taken_.count(n)) n += "'";
    }
    taken_.insert(n);
    return names_.emplace(v, std::move(n)).first->second;
  }

 private:
  const TermArena& arena_;
  bool canonical_;
  std::map<VarId, std::string> names_;
  std::set<std::string> taken_;
};

void print_term(std::ostream& os, const TermArena& arena, const SymbolTable& syms, TermId t,
                NamePool& pool) {
  const TermNode& n = arena.node(t);
  switch (n.tag) {
    case TermTag::Var:
      os << pool.name(n.head);
      break;
    case TermTag::Nat:
      os << n.nat;
      break;
    case TermTag::App:
      os << syms[n.head].ident;
      if (!n.args.empty()) {
        os << '(';
        for (std::size_t i = 0; i < n.args.size(); ++i) {
          if (i) os << ',';
          print_term(os, arena, syms, n.args[i], pool);
        }
        os << ')';
      }
      break;
  }
}

void print_fact(std::ostream& os, const TermArena& arena, const SymbolTable& syms,
                const PredTable& preds, const Fact& f, NamePool& pool) {
  os << preds[f.pred].ident;
  if (!f.args.empty()) {
    os << '(';
    for (std::size_t i = 0; i < f.args.size(); ++i) {
      if (i) os << ',';
      print_term(os, arena, syms, f.args[i], pool);
    }
    os << ')';
  }
}

void print_constraints(std::ostream& os, const TermArena& arena, const SymbolTable& syms,
                       const ConstraintSet& cs, NamePool& pool, bool& first) {
  auto sep = [&]() {
    if (!first) os << " && ";
    first = false;
  };
  for (const Diseq& d : cs.diseqs) {
    sep();
    if (!d.universals.empty()) {
      os << "forall ";
      for (std::size_t i = 0; i < d.universals.size(); ++i) {
        if (i) os << ',';
        os << pool.name(d.universals[i]);
      }
      os << ". ";
    }
    print_term(os, arena, syms, d.lhs, pool);
    os << " <> ";
    print_term(os, arena, syms, d.rhs, pool);
  }
  for (const NatFlag& nf : cs.nat_flags) {
    sep();
    if (!nf.is_nat) os << "not ";
    os << "is_nat(";
    print_term(os, arena, syms, nf.term, pool);
    os << ')';
  }
  for (const Geq& g : cs.geqs) {
    sep();
    print_term(os, arena, syms, g.lhs, pool);
    os << " >= ";
    print_term(os, arena, syms, g.rhs, pool);
    if (g.offset > 0) os << " + " << g.offset;
    if (g.offset < 0) os << " - " << -g.offset;
  }
}

void print_clause(std::ostream& os, const TermArena& arena, const SymbolTable& syms,
                  const PredTable& preds, const Clause& c, NamePool& pool) {
  bool first = true;
  for (const Fact& h : c.hyps) {
    if (!first) os << " && ";
    first = false;
    print_fact(os, arena, syms, preds, h, pool);
  }
  print_constraints(os, arena, syms, c.cons, pool, first);
  if (first) os << "true";
  os << " => ";
  print_fact(os, arena, syms, preds, c.concl, pool);
}

}  // namespace

std::string term_to_string(const TermArena& arena, const SymbolTable& syms, TermId t) {
  std::ostringstream os;
  NamePool pool(arena, false);
  print_term(os, arena, syms, t, pool);
  return os.str();
}

std::string fact_to_string(const TermArena& arena, const SymbolTable& syms,
                           const PredTable& preds, const Fact& f) {
  std::ostringstream os;
  NamePool pool(arena, false);
  print_fact(os, arena, syms, preds, f, pool);
  return os.str();
}

std::string clause_to_string(const TermArena& arena, const SymbolTable& syms,
                             const PredTable& preds, const Clause& c) {
  std::ostringstream os;
  NamePool pool(arena, false);
  print_clause(os, arena, syms, preds, c, pool);
  return os.str();
}

std::string canonical_clause_key(const TermArena& arena, const SymbolTable& syms,
                                 const PredTable& preds, const Clause& c) {
  std::ostringstream os;
  NamePool pool(arena, true);
  print_clause(os, arena, syms, preds, c, pool);
  return os.str();
}

std::string canonical_fact_key(const TermArena& arena, const SymbolTable& syms,
                               const PredTable& preds, const Fact& f) {
  std::ostringstream os;
  NamePool pool(arena, true);
  print_fact(os, arena, syms, preds, f, pool);
  return os.str();
}

}  // namespace horn
