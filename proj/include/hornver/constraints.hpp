#pragma once

#include "hornver/clause.hpp"

namespace horn {

/// Outcome of constraint simplification. When `unsat` is set the owning
/// clause is removed; otherwise `cons` holds the simplified set.
struct ConstraintResult {
  bool unsat = false;
  ConstraintSet cons;
};

/// Per disequation forall ys. M <> N:
///  - no unifier of M and N: the disequation always holds and is dropped;
///  - a unifier confined to the universals: the disequation can always be
///    violated, so the set is unsatisfiable;
///  - otherwise the disequation is kept residual.
ConstraintResult simplify_disequations(TermArena& arena, const ConstraintSet& cs);

/// Difference-constraint solving over the naturals. Geq edges plus a
/// virtual zero node form a graph whose negative cycles signal
/// unsatisfiability (Bellman-Ford / all-pairs shortest paths); conflicts
/// between is_nat and not is_nat, or not is_nat on a term forced natural,
/// are also unsatisfiable. The satisfiable result is canonical: offsets are
/// tightened to their shortest-path values and implied pairs are added.
ConstraintResult simplify_nat_constraints(TermArena& arena, const ConstraintSet& cs);

/// Runs both simplifiers.
ConstraintResult simplify_constraints(TermArena& arena, const ConstraintSet& cs);

}  // namespace horn
