#include "pi1lat/homspace.hpp"

namespace pi1lat {

HomSpaceInput::HomSpaceInput(const FgAbGroup& g_hat, const FgAbGroup& h_hat,
                             const AbMap& i_star, const HypothesisFlags& flags,
                             std::optional<CocharComplex> cochar, std::optional<Int> char_p)
    : g_hat_(g_hat),
      h_hat_(h_hat),
      i_star_(i_star),
      flags_(flags),
      cochar_(std::move(cochar)),
      char_p_(std::move(char_p)) {
  if (!g_hat_.is_torsion_free())
    throw std::invalid_argument("HomSpaceInput: g_hat must be torsion-free");
  if (i_star_.src().gens() != g_hat_.gens() || i_star_.dst().gens() != h_hat_.gens())
    throw std::invalid_argument("HomSpaceInput: i_star does not match g_hat -> h_hat");
  if (flags_.h_connected && !h_hat_.is_torsion_free())
    throw std::invalid_argument("HomSpaceInput: h_connected asserted but h_hat has torsion");
  if (char_p_ && *char_p_ != 0 && !is_prime(*char_p_))
    throw std::invalid_argument("HomSpaceInput: char_p must be zero or a prime");
}

TwoTermComplex HomSpaceInput::character_complex() const {
  return TwoTermComplex(g_hat_, h_hat_, i_star_);
}

HomSpaceInput HomSpaceInput::with_char_p(const Int& p) const {
  return HomSpaceInput(g_hat_, h_hat_, i_star_, flags_, cochar_, p);
}

namespace {

void require_pi1_hypotheses(const HomSpaceInput& input) {
  if (!input.flags().pic_g_zero) throw HypothesisError("pic_g_zero");
  if (!input.flags().h_kerchar_connected) throw HypothesisError("h_kerchar_connected");
}

}  // namespace

FgAbGroup pi1_top(const HomSpaceInput& input) {
  require_pi1_hypotheses(input);
  return ext0_to_z(input.character_complex());
}

Pi1Sequence pi1_sequence(const HomSpaceInput& input) {
  require_pi1_hypotheses(input);
  const TwoTermComplex c = input.character_complex();
  const LongExactPieces pieces = long_exact_pieces(c);
  FgAbGroup pi1 = ext0_to_z(c);

  // Hom(g_hat, Z) = Z^g includes into the presentation of pi1 as the first
  // g of its g + m ambient generators.
  const Index g = c.degree0().gens();
  IntMatrix incl = IntMatrix::Zero(pi1.gens(), g);
  incl.topRows(g) = IntMatrix::Identity(g, g);
  AbMap hom_g_to_pi1(pieces.hom_c0, pi1, incl);

  bool ok = pieces.connecting_check;
  // Exactness at Hom(g_hat, Z): the composite vanishes and the kernel
  // lattice of the inclusion equals the image of the dual map.
  ok = ok && is_zero_map(compose(hom_g_to_pi1, pieces.dual));
  if (ok) {
    const KernelPair ker = kernel(hom_g_to_pi1);
    const auto image_coords =
        solve_columns<Int>(ker.inclusion.matrix(), pieces.dual.matrix());
    ok = image_coords.has_value() &&
         FgAbGroup(ker.group.gens(), *image_coords).is_trivial();
  }
  // Rank bookkeeping of the four-term sequence.
  const Index image_rank = smith_normal_form<Int>(pieces.dual.matrix()).rank();
  ok = ok && pi1.rank() == pieces.hom_c0.rank() - image_rank;
  const FgAbGroup pi0 = ext1_to_z(input.h_hat());
  const Int bound = cokernel(pieces.dual).invariants().torsion_order() *
                    pi0.invariants().torsion_order();
  ok = ok && divides(pi1.invariants().torsion_order(), bound);

  return Pi1Sequence{pieces.hom_c1, pieces.hom_c0, pieces.dual,
                     std::move(pi1), std::move(hom_g_to_pi1), pi0, ok};
}

FgAbGroup pi1_connected(const HomSpaceInput& input) {
  if (!input.flags().h_connected) throw HypothesisError("h_connected");
  return cokernel(hom_dual_map(input.i_star()));
}

FgAbGroup pi0_h(const HomSpaceInput& input) { return ext1_to_z(input.h_hat()); }

FgAbGroup pi2_top(const HomSpaceInput& input) {
  if (!input.flags().h_connected) throw HypothesisError("h_connected");
  if (!input.cochar())
    throw MissingDataError("pi2 requires cocharacter data");
  return h_minus_one(*input.cochar());
}

PipelineRun auxiliary_pipeline(const HomSpaceInput& input, std::optional<Index> q_rank) {
  require_pi1_hypotheses(input);
  const TwoTermComplex c = input.character_complex();
  const Index g = c.degree0().gens();
  const Index nh = input.h_hat().gens();
  const Index q = q_rank.value_or(nh);
  if (q < nh)
    throw std::invalid_argument("auxiliary_pipeline: q_hat rank below the generator count of h_hat");

  // g_hat + q_hat -> h_hat, (chi, v) -> i*(chi) + s(v) with s the canonical
  // generator surjection; then the kernel lattice plays the character group
  // of the torus the construction ends on.
  IntMatrix combined(nh, g + q);
  combined.leftCols(g) = c.lift();
  combined.middleCols(g, nh) = IntMatrix::Identity(nh, nh);
  combined.rightCols(q - nh).setZero();
  const AbMap to_h(FgAbGroup::free_lattice(g + q), input.h_hat(), combined);

  KernelPair ker = kernel(to_h);
  PipelineRun out;
  out.q_rank = q;
  out.w_basis = ker.inclusion.matrix();
  out.g_w = std::move(ker.group);

  // pi1(X) = pi1 of the final torus modulo the image of pi1(q_hat's torus):
  // coker of the dual of the projection onto the q_hat block.
  const IntMatrix proj = out.w_basis.bottomRows(q);
  const IntMatrix proj_t = proj.transpose();
  out.pi1_via_w = FgAbGroup(out.w_basis.cols(), proj_t);
  return out;
}

PrimeToPAbGroup pi1_etale_prime_to_p(const HomSpaceInput& input) {
  if (!input.flags().pic_g_zero) throw HypothesisError("pic_g_zero");
  if (!input.flags().h_smooth) throw HypothesisError("h_smooth");
  if (!input.flags().h_kerchar_connected) throw HypothesisError("h_kerchar_connected");
  if (!input.char_p()) throw MissingDataError("char_p is required for the prime-to-p invariant");

  const Int& p = *input.char_p();
  const PrimeToPAbGroup result = tensor_prime_to_p(pi1_top(input), p);
  if (input.flags().h_connected) {
    const PrimeToPAbGroup connected = tensor_prime_to_p(pi1_connected(input), p);
    if (!(result == connected))
      throw ConsistencyError(
          "prime-to-p routes disagree (general vs connected); this is a bug, please file a report");
  }
  return result;
}

Pi1Alg pi1_alg(const AbMap& cochar_sc_to_t, const Int& p) {
  if (!cochar_sc_to_t.src().is_torsion_free() || !cochar_sc_to_t.dst().is_torsion_free())
    throw std::invalid_argument("pi1_alg: cocharacter lattices must be torsion-free");
  FgAbGroup group = cokernel(cochar_sc_to_t);
  PrimeToPAbGroup stripped = tensor_prime_to_p(group, p);
  return Pi1Alg{std::move(group), std::move(stripped)};
}

Pi1Report compute_report(const HomSpaceInput& input, const ComputeSelection& sel) {
  Pi1Report report;
  if (sel.pi1 || sel.oracle) report.pi1 = pi1_top(input);
  if (sel.sequence) {
    report.sequence = pi1_sequence(input);
    if (!report.sequence->checks_ok)
      throw ConsistencyError(
          "exact-sequence bookkeeping failed; this is a bug, please file a report");
  }
  if (sel.pi0) report.pi0 = pi0_h(input);
  if (sel.pi2) report.pi2 = pi2_top(input);
  if (sel.p_prime) report.pi1_p_prime = pi1_etale_prime_to_p(input);

  if (sel.oracle) {
    report.oracle_run = auxiliary_pipeline(input);
    report.oracle_agreement =
        same_invariants(*report.pi1, report.oracle_run->pi1_via_w);
    if (!*report.oracle_agreement)
      throw ConsistencyError(
          "direct Ext^0 route and auxiliary pipeline disagree; this is a bug, please file a report");
  }

  if (input.cochar() && input.flags().h_connected) {
    report.cochar_consistent =
        same_invariants(cohomology_at(*input.cochar(), 0), pi1_connected(input));
  }
  return report;
}

}  // namespace pi1lat
