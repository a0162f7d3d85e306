#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hornver/signature.hpp"
#include "hornver/term.hpp"

namespace horn {

struct Fact {
  PredId pred = 0;
  std::vector<TermId> args;
  bool operator==(const Fact&) const = default;
  auto operator<=>(const Fact&) const = default;
};

/// forall universals. lhs <> rhs
struct Diseq {
  std::vector<VarId> universals;  // sorted, unique
  TermId lhs = 0;
  TermId rhs = 0;
  bool operator==(const Diseq&) const = default;
};

/// is_nat(term) when is_nat, otherwise not is_nat(term).
struct NatFlag {
  TermId term = 0;
  bool is_nat = true;
  bool operator==(const NatFlag&) const = default;
};

/// lhs >= rhs + offset. Offsets are integers internally so that
/// subtraction folds away; the surface syntax only admits naturals.
struct Geq {
  TermId lhs = 0;
  TermId rhs = 0;
  std::int64_t offset = 0;
  bool operator==(const Geq&) const = default;
};

struct ConstraintSet {
  std::vector<Diseq> diseqs;
  std::vector<NatFlag> nat_flags;
  std::vector<Geq> geqs;
  bool empty() const { return diseqs.empty() && nat_flags.empty() && geqs.empty(); }
  bool operator==(const ConstraintSet&) const = default;
};

using ClauseId = std::uint32_t;

enum class ClauseOrigin : std::uint8_t { Initial, Resolved };

struct Provenance {
  ClauseOrigin origin = ClauseOrigin::Initial;
  std::int32_t initial_index = -1;    // when Initial: position in the initial clause list
  ClauseId solved_parent = 0;         // when Resolved
  ClauseId unsolved_parent = 0;       // when Resolved
  std::int32_t hyp_index = -1;        // when Resolved: selected hypothesis position
  std::vector<std::uint32_t> strengthened_by;  // assertion indices that fired during simplification
};

struct Clause {
  std::vector<Fact> hyps;   // order preserved: selection picks the leftmost eligible
  ConstraintSet cons;
  Fact concl;
  bool exempt_data = false;  // generator clauses of data constructors skip decomposition
};

Fact apply_subst(TermArena& arena, const Subst& s, const Fact& f);
ConstraintSet apply_subst(TermArena& arena, const Subst& s, const ConstraintSet& cs);
Clause apply_subst(TermArena& arena, const Subst& s, const Clause& c);

void collect_vars(const TermArena& arena, const Fact& f, std::set<VarId>& out);
void collect_vars(const TermArena& arena, const Clause& c, std::set<VarId>& out);

/// Copy with every variable replaced by a fresh one (same hint).
Clause rename_clause(TermArena& arena, const Clause& c);
Fact rename_fact(TermArena& arena, const Fact& f);

std::uint32_t clause_term_depth(const TermArena& arena, const Clause& c);

/// Conclusion occurs among the hypotheses.
bool is_tautology(const Clause& c);

/// Removes duplicate hypotheses, keeping first occurrences.
void dedup_hyps(Clause& c);

/// Clause subsumption: some substitution maps c1's conclusion onto c2's and
/// c1's hypotheses injectively onto a sub-multiset of c2's, with c1's
/// instantiated constraints implied by c2's. Inputs must be renamed apart.
bool subsumes(TermArena& arena, const Clause& c1, const Clause& c2);

/// Data-constructor decomposition applied to a fixpoint: hypothesis
/// att(f(M1..Mn)) becomes att(M1)..att(Mn) and a conclusion att(f(M1..Mn))
/// splits the clause n ways. Exempt clauses pass through unchanged.
std::vector<Clause> decompose_data(TermArena& arena, const SymbolTable& syms,
                                   const PredTable& preds, const Clause& c);

}  // namespace horn
