#pragma once

// Independent reference semantics for the test suites: teams over at most
// four variables are represented as subset masks of the 2^n assignment
// values, and satisfaction is evaluated directly from the inductive
// definition on the AST, one variable position at a time. Nothing here
// shares code with the enumeration path it checks.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "teamenum/formula.hpp"
#include "teamenum/stream.hpp"
#include "teamenum/team.hpp"

namespace oracle {

inline bool naive_node_satisfies(const teamenum::Formula& f, int idx,
                                 const teamenum::Team& t) {
  using NK = teamenum::Formula::NodeKind;
  const auto& node = f.nodes()[static_cast<std::size_t>(idx)];
  switch (node.kind) {
    case NK::Var:
      for (const auto& s : t.members())
        if (!s.bit(node.var + 1)) return false;
      return true;
    case NK::NegVar:
      for (const auto& s : t.members())
        if (s.bit(node.var + 1)) return false;
      return true;
    case NK::ConstFalse:
      return t.empty();
    case NK::ConstTrue:
      return true;
    case NK::And:
      return naive_node_satisfies(f, node.lhs, t) &&
             naive_node_satisfies(f, node.rhs, t);
    case NK::Dep: {
      const auto& atom = f.dep_atoms()[static_cast<std::size_t>(node.atom)];
      const auto members = t.members();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          bool agree = true;
          for (int v : atom.determining)
            if (members[i].bit(v + 1) != members[j].bit(v + 1)) {
              agree = false;
              break;
            }
          if (!agree) continue;
          for (int v : atom.determined)
            if (members[i].bit(v + 1) != members[j].bit(v + 1)) return false;
        }
      }
      return true;
    }
  }
  return false;
}

// The satisfaction definition, applied to the original formula.
inline bool naive_satisfies(const teamenum::Formula& f,
                            const teamenum::Team& t) {
  return naive_node_satisfies(f, f.root(), t);
}

// All-pairs evaluation of the reduced atom conjunction using per-position
// loops; reference for the mask-based model check.
inline bool naive_atoms_satisfies(const teamenum::ReducedFormula& rf,
                                  const teamenum::Team& t) {
  const auto members = t.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      for (const auto& atom : rf.atoms()) {
        bool agree = true;
        for (int p : atom.determining)
          if (members[i].bit(p + 1) != members[j].bit(p + 1)) {
            agree = false;
            break;
          }
        if (!agree) continue;
        for (int p : atom.determined)
          if (members[i].bit(p + 1) != members[j].bit(p + 1)) return false;
      }
    }
  }
  return true;
}

// Subset-mask representation: bit v of the mask holds assignment value v.
inline teamenum::Team mask_to_team(std::uint32_t mask, int width) {
  teamenum::Team t(width);
  for (std::uint32_t v = 0; v < 32; ++v)
    if (mask & (std::uint32_t{1} << v))
      t.push_max(teamenum::Assignment(v, width));
  return t;
}

inline std::uint32_t team_to_mask(const teamenum::Team& t) {
  std::uint32_t mask = 0;
  for (const auto& m : t.members())
    mask |= std::uint32_t{1} << m.value();
  return mask;
}

// Sorted masks of all non-empty satisfying teams of f up to max_size,
// over the full original variable space (at most 4 variables).
inline std::vector<std::uint32_t> solution_masks(const teamenum::Formula& f,
                                                 std::uint64_t max_size = 0) {
  const int n = f.var_count();
  const std::uint32_t space = std::uint32_t{1} << n;
  const std::uint64_t bound = teamenum::clamp_max_size(n, max_size);
  std::vector<std::uint32_t> out;
  const std::uint64_t all = std::uint64_t{1} << space;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    if (static_cast<std::uint64_t>(std::popcount(mask)) > bound) continue;
    if (naive_satisfies(f, mask_to_team(static_cast<std::uint32_t>(mask), n)))
      out.push_back(static_cast<std::uint32_t>(mask));
  }
  return out;
}

struct Emission {
  teamenum::Team team;
  std::uint64_t delay;
};

inline std::vector<Emission> drain(teamenum::SolutionStream& stream) {
  std::vector<Emission> out;
  while (auto team = stream.next())
    out.push_back({std::move(*team), stream.last_delay_steps()});
  return out;
}

inline std::vector<std::uint32_t> emission_masks(
    const std::vector<Emission>& emissions) {
  std::vector<std::uint32_t> out;
  out.reserve(emissions.size());
  for (const auto& e : emissions) out.push_back(team_to_mask(e.team));
  return out;
}

// Random formulas already in reduced shape: a vars header pinning n
// variables and up to max_atoms dependence atoms over them.
inline std::string random_reduced_text(std::mt19937& rng, int max_vars = 4,
                                       int max_atoms = 4) {
  const int n = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int atoms = std::uniform_int_distribution<int>(0, max_atoms)(rng);
  std::string text = "vars: ";
  for (int v = 1; v <= n; ++v) {
    if (v > 1) text += ", ";
    text += "x" + std::to_string(v);
  }
  text += "; ";
  if (atoms == 0) {
    text += "1";
    return text;
  }
  std::uniform_int_distribution<int> coin(0, 99);
  auto join = [](const std::vector<int>& vars) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i > 0) out += ", ";
      out += "x" + std::to_string(vars[i]);
    }
    return out;
  };
  for (int a = 0; a < atoms; ++a) {
    if (a > 0) text += " & ";
    std::vector<int> determining, determined;
    for (int v = 1; v <= n; ++v)
      if (coin(rng) < 35) determining.push_back(v);
    for (int v = 1; v <= n; ++v)
      if (coin(rng) < 30) determined.push_back(v);
    if (determined.empty())
      determined.push_back(std::uniform_int_distribution<int>(1, n)(rng));
    text += "dep(" + join(determining) + "; " + join(determined) + ")";
  }
  return text;
}

// Random formulas exercising the full grammar: literals, constants and
// atoms whose variable sets overlap the forced ones.
inline std::string random_full_text(std::mt19937& rng, int max_vars = 4) {
  const int n = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int conjuncts = std::uniform_int_distribution<int>(1, 5)(rng);
  std::uniform_int_distribution<int> var(1, n);
  std::uniform_int_distribution<int> kind(0, 99);
  std::string text = "vars: ";
  for (int v = 1; v <= n; ++v) {
    if (v > 1) text += ", ";
    text += "x" + std::to_string(v);
  }
  text += "; ";
  for (int c = 0; c < conjuncts; ++c) {
    if (c > 0) text += " & ";
    const int k = kind(rng);
    if (k < 20) {
      text += "x" + std::to_string(var(rng));
    } else if (k < 35) {
      text += "!x" + std::to_string(var(rng));
    } else if (k < 40) {
      text += "1";
    } else if (k < 43) {
      text += "0";
    } else {
      text += "dep(";
      bool first = true;
      for (int v = 1; v <= n; ++v)
        if (kind(rng) < 40) {
          if (!first) text += ", ";
          text += "x" + std::to_string(v);
          first = false;
        }
      text += ";";
      first = true;
      for (int v = 1; v <= n; ++v)
        if (kind(rng) < 40) {
          text += first ? " " : ", ";
          text += "x" + std::to_string(v);
          first = false;
        }
      text += ")";
    }
  }
  return text;
}

}  // namespace oracle
