#include "vecpr/operators.hpp"

#include <stdexcept>
#include <string>

namespace vecpr {

const char* family_name(OperatorFamily f) {
  switch (f) {
    case OperatorFamily::AP: return "AP";
    case OperatorFamily::DR: return "DR";
    case OperatorFamily::KMDR: return "KM-DR";
    case OperatorFamily::HPR: return "HPR";
    case OperatorFamily::RAAR: return "RAAR";
    case OperatorFamily::RRR: return "RRR";
    case OperatorFamily::DRAP: return "DRAP";
    case OperatorFamily::CP: return "CP";
    case OperatorFamily::CDR: return "CDR";
    case OperatorFamily::CRAAR: return "CRAAR";
  }
  return "?";
}

bool family_is_cyclic(OperatorFamily f) {
  return f == OperatorFamily::CP || f == OperatorFamily::CDR || f == OperatorFamily::CRAAR;
}

bool family_uses_beta(OperatorFamily f) {
  switch (f) {
    case OperatorFamily::KMDR:
    case OperatorFamily::HPR:
    case OperatorFamily::RAAR:
    case OperatorFamily::RRR:
    case OperatorFamily::DRAP:
    case OperatorFamily::CRAAR:
      return true;
    default:
      return false;
  }
}

OperatorSpec OperatorSpec::pair(OperatorFamily f, ConstraintSet a, ConstraintSet b, double beta) {
  OperatorSpec spec;
  spec.family = f;
  spec.beta = beta;
  spec.sets = {std::move(a), std::move(b)};
  spec.validate();
  return spec;
}

OperatorSpec OperatorSpec::cycle(OperatorFamily f, std::vector<ConstraintSet> list, double beta) {
  OperatorSpec spec;
  spec.family = f;
  spec.beta = beta;
  spec.sets = std::move(list);
  spec.validate();
  return spec;
}

void OperatorSpec::validate() const {
  if (family_is_cyclic(family)) {
    if (sets.size() < 2) throw std::invalid_argument("cyclic operator needs >= 2 sets");
    for (const auto& s : sets)
      if (s.expected_blocks() != 1)
        throw std::invalid_argument("cyclic operator sets must act on single fields");
  } else {
    if (sets.size() != 2) throw std::invalid_argument("pair operator needs exactly 2 sets");
    if (sets[0].expected_blocks() != sets[1].expected_blocks())
      throw std::invalid_argument("pair operator sets have mismatched block counts");
  }
  if (family_uses_beta(family)) {
    // DRAP admits beta = 0 (alternating projections); the relaxations do not.
    const bool ok = family == OperatorFamily::DRAP ? (beta >= 0.0 && beta <= 1.0)
                                                   : (beta > 0.0 && beta <= 1.0);
    if (!ok)
      throw std::invalid_argument(std::string(family_name(family)) + ": beta out of range");
  }
}

namespace {

// One two-set step; proj_a/proj_b already bound. Accumulates flags and
// reports the P_B gap. Shared by the pair families and the cyclic
// factors built on them.
ProductIterate two_set_step(OperatorFamily f, double beta, const ConstraintSet& set_a,
                            const ConstraintSet& set_b, const ProductIterate& x,
                            double* pre_gap, std::vector<PixelFlag>& flags) {
  ProjectionResult pb = set_b.project(x);
  flags.insert(flags.end(), pb.degenerate.begin(), pb.degenerate.end());
  const ProductIterate& b = pb.point;
  if (pre_gap) *pre_gap = distance(b, x);

  auto project_a = [&](const ProductIterate& arg) {
    ProjectionResult pa = set_a.project(arg);
    flags.insert(flags.end(), pa.degenerate.begin(), pa.degenerate.end());
    return std::move(pa.point);
  };

  switch (f) {
    case OperatorFamily::AP:
      return project_a(b);
    case OperatorFamily::DR: {
      // P_A(2 P_B - Id) - P_B + Id
      ProductIterate a = project_a(lincomb(2.0, b, -1.0, x));
      add_scaled(a, b, -1.0);
      add_scaled(a, x, 1.0);
      return a;
    }
    case OperatorFamily::KMDR: {
      // beta * T_DR + (1 - beta) * Id
      ProductIterate a = project_a(lincomb(2.0, b, -1.0, x));
      add_scaled(a, b, -1.0);
      add_scaled(a, x, 1.0);
      scale(a, beta);
      add_scaled(a, x, 1.0 - beta);
      return a;
    }
    case OperatorFamily::HPR: {
      // P_A((1+beta) P_B - Id) - beta P_B + Id
      ProductIterate a = project_a(lincomb(1.0 + beta, b, -1.0, x));
      add_scaled(a, b, -beta);
      add_scaled(a, x, 1.0);
      return a;
    }
    case OperatorFamily::RAAR: {
      // beta * T_DR + (1 - beta) * P_B
      ProductIterate a = project_a(lincomb(2.0, b, -1.0, x));
      add_scaled(a, b, -1.0);
      add_scaled(a, x, 1.0);
      scale(a, beta);
      add_scaled(a, b, 1.0 - beta);
      return a;
    }
    case OperatorFamily::RRR: {
      // beta * P_A(2 P_B - Id) - beta P_B + Id
      ProductIterate a = project_a(lincomb(2.0, b, -1.0, x));
      add_scaled(a, b, -1.0);
      scale(a, beta);
      add_scaled(a, x, 1.0);
      return a;
    }
    case OperatorFamily::DRAP: {
      // P_A((1+beta) P_B - beta Id) - beta (P_B - Id)
      ProductIterate a = project_a(lincomb(1.0 + beta, b, -beta, x));
      add_scaled(a, b, -beta);
      add_scaled(a, x, beta);
      return a;
    }
    default:
      throw std::logic_error("two_set_step: not a pair family");
  }
}

}  // namespace

StepInfo step_traced(const OperatorSpec& spec, const ProductIterate& x) {
  spec.validate();
  if (x.p() != spec.expected_blocks())
    throw std::invalid_argument("step: iterate block count does not match operator sets");

  StepInfo info;
  if (!family_is_cyclic(spec.family)) {
    info.point = two_set_step(spec.family, spec.beta, spec.sets[0], spec.sets[1], x,
                              &info.pre_gap, info.degenerate);
    return info;
  }

  const size_t q = spec.sets.size();
  ProductIterate cur = x;
  switch (spec.family) {
    case OperatorFamily::CP: {
      // P_{S_0} P_{S_1} ... P_{S_q}: rightmost applied first.
      for (size_t k = q; k-- > 0;) {
        ProjectionResult pr = spec.sets[k].project(cur);
        if (k == q - 1) info.pre_gap = distance(pr.point, cur);
        info.degenerate.insert(info.degenerate.end(), pr.degenerate.begin(), pr.degenerate.end());
        cur = std::move(pr.point);
      }
      break;
    }
    case OperatorFamily::CDR:
    case OperatorFamily::CRAAR: {
      // Factors T[S_k, S_{k+1 mod q}] for k = 0..q-1, applied from k = q-1
      // down to k = 0 (the wrap-around factor first).
      const OperatorFamily inner =
          spec.family == OperatorFamily::CDR ? OperatorFamily::DR : OperatorFamily::RAAR;
      bool first = true;
      for (size_t k = q; k-- > 0;) {
        double gap = 0;
        cur = two_set_step(inner, spec.beta, spec.sets[k], spec.sets[(k + 1) % q], cur,
                           first ? &gap : nullptr, info.degenerate);
        if (first) info.pre_gap = gap;
        first = false;
      }
      break;
    }
    default:
      break;
  }
  info.point = std::move(cur);
  return info;
}

ProductIterate step(const OperatorSpec& spec, const ProductIterate& x) {
  return step_traced(spec, x).point;
}

}  // namespace vecpr
