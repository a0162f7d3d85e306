#pragma once

#include <string>

#include "hornver/clause.hpp"

namespace horn {

std::string term_to_string(const TermArena& arena, const SymbolTable& syms, TermId t);
std::string fact_to_string(const TermArena& arena, const SymbolTable& syms,
                           const PredTable& preds, const Fact& f);
std::string clause_to_string(const TermArena& arena, const SymbolTable& syms,
                             const PredTable& preds, const Clause& c);

/// Rendering with variables renamed to v0, v1, ... in order of first
/// occurrence; equal keys mean equal clauses up to renaming.
std::string canonical_clause_key(const TermArena& arena, const SymbolTable& syms,
                                 const PredTable& preds, const Clause& c);
std::string canonical_fact_key(const TermArena& arena, const SymbolTable& syms,
                               const PredTable& preds, const Fact& f);

}  // namespace horn
