#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace horn {

using SymId = std::uint32_t;
using PredId = std::uint32_t;

enum class SymKind : std::uint8_t { Constructor, DataConstructor, Name, Destructor };

/// A declared function symbol. Names are nullary and either public or private.
struct Symbol {
  std::string ident;
  int arity = 0;
  SymKind kind = SymKind::Constructor;
  bool is_private = false;  // meaningful for names only
};

class SymbolTable {
 public:
  SymId add(Symbol s) {
    if (by_ident_.count(s.ident))
      throw std::invalid_argument("duplicate symbol: " + s.ident);
    SymId id = static_cast<SymId>(syms_.size());
    by_ident_.emplace(s.ident, id);
    syms_.push_back(std::move(s));
    return id;
  }

  std::optional<SymId> find(std::string_view ident) const {
    auto it = by_ident_.find(std::string(ident));
    if (it == by_ident_.end()) return std::nullopt;
    return it->second;
  }

  const Symbol& operator[](SymId id) const { return syms_[id]; }
  std::size_t size() const { return syms_.size(); }

 private:
  std::vector<Symbol> syms_;
  std::unordered_map<std::string, SymId> by_ident_;
};

enum class PredKind : std::uint8_t {
  Attacker,  // the built-in att/1
  Blocking,  // hypothesis-only, never selected, never a conclusion
  Event      // conclusion-event: usable as a clause conclusion only
};

struct Predicate {
  std::string ident;
  int arity = 0;
  PredKind kind = PredKind::Event;
};

/// Predicate table with the two built-ins registered up front:
/// att/1 (attacker) and event/1 (blocking).
class PredTable {
 public:
  PredTable() {
    add({"att", 1, PredKind::Attacker});
    add({"event", 1, PredKind::Blocking});
  }

  PredId add(Predicate p) {
    if (by_ident_.count(p.ident))
      throw std::invalid_argument("duplicate predicate: " + p.ident);
    PredId id = static_cast<PredId>(preds_.size());
    by_ident_.emplace(p.ident, id);
    preds_.push_back(std::move(p));
    return id;
  }

  std::optional<PredId> find(std::string_view ident) const {
    auto it = by_ident_.find(std::string(ident));
    if (it == by_ident_.end()) return std::nullopt;
    return it->second;
  }

  const Predicate& operator[](PredId id) const { return preds_[id]; }
  std::size_t size() const { return preds_.size(); }

  PredId att() const { return 0; }
  PredId event() const { return 1; }

 private:
  std::vector<Predicate> preds_;
  std::unordered_map<std::string, PredId> by_ident_;
};

}  // namespace horn
