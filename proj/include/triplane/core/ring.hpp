#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "triplane/core/field.hpp"
#include "triplane/core/monomial.hpp"

namespace triplane {

enum class MonomialOrder { GRevLex, Lex, BlockElimination };

std::string to_string(MonomialOrder o);
MonomialOrder order_from_string(std::string_view s);

/// Graded polynomial ring over a prime field with at most 16 variables.
///
/// Weights are positive integers and define the grading. Block elimination
/// compares the blocks left to right, each by weighted degree followed by
/// reverse lexicographic tie-breaking, so any monomial involving the leading
/// block beats every monomial free of it.
///
/// Free-module terms (comp > 0) are ordered position-over-term: a smaller
/// component index is greater, ties broken by the monomial order.
class Ring {
 public:
  Ring(PrimeField field, std::vector<std::string> variables,
       MonomialOrder order = MonomialOrder::GRevLex, std::vector<int> weights = {},
       std::vector<int> blocks = {});

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<int>& blocks() const { return blocks_; }
  MonomialOrder order() const { return order_; }
  bool standard_grading() const { return unit_weights_; }

  /// Index of a variable by name, -1 when absent.
  int index_of(std::string_view name) const;

  Monomial monomial(const std::vector<int>& exps, std::uint32_t comp = 0) const;
  Monomial variable(int v) const;
  std::vector<int> exponents(const Monomial& m) const;
  int weighted_degree(const Monomial& m) const;
  std::string monomial_string(const Monomial& m) const;

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return compare_exp(a, b);
  }
  int compare_exp(const Monomial& a, const Monomial& b) const {
    switch (order_) {
      case MonomialOrder::GRevLex:
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        return revlex(a.w, b.w);
      case MonomialOrder::Lex:
        return lex(a.w, b.w);
      case MonomialOrder::BlockElimination:
        return block_compare(a, b);
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Same variables, weights and field; a different order is allowed.
  bool compatible(const Ring& other) const;
  bool operator==(const Ring& other) const;

 private:
  static int revlex(const std::uint64_t* a, const std::uint64_t* b) {
    for (int k = 1; k >= 0; --k) {
      const std::uint64_t x = a[k] ^ b[k];
      if (x) {
        const int shift = (63 - std::countl_zero(x)) & ~7;
        const int ea = static_cast<int>((a[k] >> shift) & 0xff);
        const int eb = static_cast<int>((b[k] >> shift) & 0xff);
        return ea < eb ? 1 : -1;
      }
    }
    return 0;
  }
  static int lex(const std::uint64_t* a, const std::uint64_t* b) {
    for (int k = 0; k < 2; ++k) {
      const std::uint64_t x = a[k] ^ b[k];
      if (x) {
        const int shift = std::countr_zero(x) & ~7;
        const int ea = static_cast<int>((a[k] >> shift) & 0xff);
        const int eb = static_cast<int>((b[k] >> shift) & 0xff);
        return ea > eb ? 1 : -1;
      }
    }
    return 0;
  }
  int block_compare(const Monomial& a, const Monomial& b) const;

  PrimeField field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  std::vector<int> blocks_;
  MonomialOrder order_;
  bool unit_weights_ = true;
  struct BlockMask {
    std::uint64_t w[2];
    int first, last;
  };
  std::vector<BlockMask> block_masks_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t prime, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::GRevLex, std::vector<int> weights = {},
                  std::vector<int> blocks = {});

/// Variables named prefix0 .. prefix{n-1}.
std::vector<std::string> indexed_names(std::string_view prefix, int n);

/// Same ring with another monomial order.
RingPtr with_order(const RingPtr& r, MonomialOrder order, std::vector<int> blocks = {});

}  // namespace triplane
