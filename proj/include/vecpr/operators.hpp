#pragma once

#include <vector>

#include "vecpr/projectors.hpp"

namespace vecpr {

/// Fixed-point operator families. The first seven act on a pair
/// (setA, setB); the cyclic ones on an ordered set list.
enum class OperatorFamily { AP, DR, KMDR, HPR, RAAR, RRR, DRAP, CP, CDR, CRAAR };

const char* family_name(OperatorFamily f);
bool family_is_cyclic(OperatorFamily f);
bool family_uses_beta(OperatorFamily f);

/// An operator bound to its constraint sets.
///   pair:  sets = {A-side, B-side}, both with matching block counts
///   cycle: sets = ordered list of single-field sets, applied right to left
struct OperatorSpec {
  OperatorFamily family = OperatorFamily::AP;
  double beta = 1.0;
  std::vector<ConstraintSet> sets;

  static OperatorSpec pair(OperatorFamily f, ConstraintSet a, ConstraintSet b, double beta = 1.0);
  static OperatorSpec cycle(OperatorFamily f, std::vector<ConstraintSet> list, double beta = 1.0);

  /// Throws std::invalid_argument on beta out of range or set-shape mismatch.
  void validate() const;
  int expected_blocks() const { return sets.at(0).expected_blocks(); }
};

struct StepInfo {
  ProductIterate point;
  /// Distance moved by the first inner projection of the step; for pair
  /// operators this is ||P_B(x) - x||, the data-side feasibility gap.
  double pre_gap = 0;
  std::vector<PixelFlag> degenerate;
};

/// One application of the operator. Every projector appearing more than
/// once in a formula is evaluated exactly once and reused, so the
/// algebraic identities between families hold with the multi-valued
/// selections pinned.
StepInfo step_traced(const OperatorSpec& spec, const ProductIterate& x);

ProductIterate step(const OperatorSpec& spec, const ProductIterate& x);

}  // namespace vecpr
