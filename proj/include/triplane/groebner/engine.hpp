#pragma once

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "triplane/core/polynomial.hpp"

namespace triplane {

struct GroebnerOptions {
  /// Maximum number of reductions (input generators plus S-pairs); 0 = unlimited.
  long long step_budget = 0;
  /// Stop after every item of sugar degree <= degree_limit has been handled.
  int degree_limit = INT_MAX;
  /// Stop once the component-0 leading terms contain a pure power of every
  /// variable (the quotient is then finite dimensional). Homogeneous input only.
  bool stop_when_artinian = false;
  /// Tail-reduce the final basis.
  bool reduce_tails = true;
};

struct GroebnerStats {
  long long steps = 0;
  long long zero_reductions = 0;
  long long pairs_created = 0;
  long long pairs_pruned = 0;
  int max_degree = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, GroebnerStats stats, std::size_t basis_size, std::size_t pending)
      : std::runtime_error(what), stats(stats), basis_size(basis_size), pending(pending) {}
  GroebnerStats stats;
  std::size_t basis_size;
  std::size_t pending;
};

/// Gröbner basis of a submodule of the graded free module ⊕_c R(-shifts[c])
/// (an ideal when every term has component 0).
struct ModuleGB {
  RingPtr ring;
  std::vector<int> shifts;
  /// Monic, sorted by increasing leading term; reduced when `complete` and
  /// tails were reduced.
  std::vector<Polynomial> elements;
  /// Indices of the input generators that were not redundant when processed
  /// in degree order (a minimal generating set for homogeneous input).
  std::vector<int> minimal_inputs;
  /// False when a degree limit or the artinian shortcut stopped the run.
  bool complete = true;
  /// For artinian stops: every variable has a pure-power leading term.
  bool artinian = false;
  GroebnerStats stats;

  int shift(std::uint32_t comp) const { return comp < shifts.size() ? shifts[comp] : 0; }
  int degree_of(const Polynomial& f) const { return f.is_zero() ? INT_MIN : f.lead().m.deg + shift(f.lead().m.comp); }
};

/// Buchberger's algorithm with the normal selection strategy (lowest sugar
/// degree first, then smallest lcm, then pair index; S-pairs precede input
/// generators of the same degree) and the Gebauer–Möller criteria. The
/// coprime-leading-term criterion is only used for ideals.
///
/// `seeds` must already be a Gröbner basis; no pairs among seeds are formed.
ModuleGB groebner(const std::vector<Polynomial>& gens, std::vector<int> shifts = {},
                  const GroebnerOptions& opts = {}, const std::vector<Polynomial>& seeds = {});

/// Full normal form of f with respect to the basis.
Polynomial normal_form(const Polynomial& f, const ModuleGB& G);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Reduces the S-polynomial of basis elements i and j (same component).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Kernel of the map R^g -> (⊕_c R(-shifts[c])) / Q sending e_j to columns[j],
/// where `quotient_gb` is a Gröbner basis of Q (empty for Q = 0). The tag
/// components of the result carry degree shift `column_degrees[j]`. Returns a
/// Gröbner basis of the kernel (position over term order on R^g).
std::vector<Polynomial> kernel_mod(const std::vector<Polynomial>& columns, const std::vector<int>& column_degrees,
                                   const std::vector<int>& shifts, const std::vector<Polynomial>& quotient_gb,
                                   const GroebnerOptions& opts = {});

/// A minimal generating subset (homogeneous input).
std::vector<Polynomial> minimalize_generators(const std::vector<Polynomial>& gens, const std::vector<int>& shifts,
                                              const GroebnerOptions& opts = {});

}  // namespace triplane
