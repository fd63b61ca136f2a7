#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "pi1lat/complexes.hpp"

// Domain layer: assembles character/cocharacter data of a homogeneous space
// X = G/H into the invariant computations, guards the hypotheses the
// formulas require, and runs the auxiliary torsor pipeline used as an
// independent cross-check.

namespace pi1lat {

// User assertions about (G, H); none of these is decidable from lattice
// data, and the formulas are false without them, so computations refuse to
// run rather than assume.
struct HypothesisFlags {
  bool pic_g_zero = false;
  bool h_kerchar_connected = false;
  bool h_connected = false;
  bool h_smooth = false;
};

class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& flag)
      : std::runtime_error("hypothesis not asserted: " + flag), flag_(flag) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

class MissingDataError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signals disagreement between two routes that must agree;
// always a bug in this library or corrupted input, never a user mistake.
class ConsistencyError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class HomSpaceInput {
 public:
  HomSpaceInput(const FgAbGroup& g_hat, const FgAbGroup& h_hat, const AbMap& i_star,
                const HypothesisFlags& flags,
                std::optional<CocharComplex> cochar = std::nullopt,
                std::optional<Int> char_p = std::nullopt);

  const FgAbGroup& g_hat() const { return g_hat_; }
  const FgAbGroup& h_hat() const { return h_hat_; }
  const AbMap& i_star() const { return i_star_; }
  const HypothesisFlags& flags() const { return flags_; }
  const std::optional<CocharComplex>& cochar() const { return cochar_; }
  const std::optional<Int>& char_p() const { return char_p_; }

  TwoTermComplex character_complex() const;  // [g_hat -> h_hat>

  HomSpaceInput with_char_p(const Int& p) const;

 private:
  FgAbGroup g_hat_;
  FgAbGroup h_hat_;
  AbMap i_star_;
  HypothesisFlags flags_;
  std::optional<CocharComplex> cochar_;
  std::optional<Int> char_p_;
};

// pi1 of X twisted by (-1), as Ext^0 of the character complex.
// Requires pic_g_zero and h_kerchar_connected.
FgAbGroup pi1_top(const HomSpaceInput& input);

// The exact sequence Hom(h_hat,Z) -> Hom(g_hat,Z) -> pi1 -> pi0(H)(-1) -> 0
// with its two computable maps and the executed exactness checks.
struct Pi1Sequence {
  FgAbGroup hom_h;
  FgAbGroup hom_g;
  AbMap dual;           // Hom(i_star, Z)
  FgAbGroup pi1;
  AbMap hom_g_to_pi1;
  FgAbGroup pi0;
  bool checks_ok;
};
Pi1Sequence pi1_sequence(const HomSpaceInput& input);

// Connected-stabilizer shortcut: coker(Hom(h_hat,Z) -> Hom(g_hat,Z)).
// Requires h_connected (so h_hat is torsion-free).
FgAbGroup pi1_connected(const HomSpaceInput& input);

// Component group of H, twisted: the invariant-factor representative of
// Hom(torsion(h_hat), Q/Z).
FgAbGroup pi0_h(const HomSpaceInput& input);

// pi2 of X twisted by (-1): H^{-1} of the cocharacter complex.
// Requires h_connected and cochar data.
FgAbGroup pi2_top(const HomSpaceInput& input);

// Independent route to pi1 through the auxiliary torsor construction:
// a free cover q_hat of h_hat is chosen, the kernel lattice of
// g_hat + q_hat -> h_hat is computed, and pi1 is recovered as the cokernel
// of the dual of the projection restricted to that kernel.
struct PipelineRun {
  Index q_rank = 0;
  FgAbGroup g_w;         // kernel lattice, free
  IntMatrix w_basis;     // (g + q) x rank(g_w) inclusion
  FgAbGroup pi1_via_w;
};
PipelineRun auxiliary_pipeline(const HomSpaceInput& input,
                               std::optional<Index> q_rank = std::nullopt);

// Prime-to-p etale invariant: pi1_top tensored with Z_(p').
// Requires pic_g_zero, h_smooth, h_kerchar_connected and char_p present;
// when h_connected is also asserted the connected-case route is run and
// compared, and disagreement raises ConsistencyError.
PrimeToPAbGroup pi1_etale_prime_to_p(const HomSpaceInput& input);

// Algebraic fundamental group of a connected group from cocharacter data:
// coker(T_sc -> T), plus its prime-to-p image. Both lattices must be free.
struct Pi1Alg {
  FgAbGroup group;
  PrimeToPAbGroup p_prime;
};
Pi1Alg pi1_alg(const AbMap& cochar_sc_to_t, const Int& p);

struct ComputeSelection {
  bool pi1 = false;
  bool sequence = false;
  bool pi2 = false;
  bool pi0 = false;
  bool p_prime = false;
  bool oracle = false;

  bool any() const { return pi1 || sequence || pi2 || pi0 || p_prime || oracle; }
};

struct Pi1Report {
  std::optional<FgAbGroup> pi1;
  std::optional<Pi1Sequence> sequence;
  std::optional<FgAbGroup> pi0;
  std::optional<FgAbGroup> pi2;
  std::optional<PrimeToPAbGroup> pi1_p_prime;
  std::optional<bool> oracle_agreement;
  std::optional<PipelineRun> oracle_run;
  // Set when both h_connected and cochar data are supplied: H^0 of the
  // cocharacter complex must match the connected-case pi1.
  std::optional<bool> cochar_consistent;
};

// Runs the selected computations; throws HypothesisError / MissingDataError
// when a selected computation lacks its prerequisites and ConsistencyError
// when the oracle disagrees with the direct route.
Pi1Report compute_report(const HomSpaceInput& input, const ComputeSelection& sel);

}  // namespace pi1lat
