#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hk/hecke.hpp"

namespace hk {

/// Which way round a side-sensitive conjugation is taken: as_written puts
/// T^{-1} on the left (T^{-1} x T), mirrored puts it on the right.
enum class Orientation { as_written, mirrored };
std::string to_string(Orientation o);
Orientation parse_orientation(const std::string& s);

/// Derived data of a standard Levi M of a root datum.
struct ParabolicCtx {
  RootDatumPtr datum;
  LeviSet levi;
  std::vector<WeylElt> levi_weyl;  // W_M, canonical order
  std::vector<WeylElt> reps;       // ^M W, canonical order
  WeylElt w0_levi;                 // longest element of W_M
  WeylElt w0_rep;                  // longest element of ^M W
  LeviSet conj_levi;               // M' = w0_rep^{-1} M w0_rep
  Weight two_rho;                  // of the Levi

  static ParabolicCtx make(RootDatumPtr datum, const LeviSet& levi);
  /// gamma(w) = w0_rep w w0_rep^{-1}, mapping W_{M'} onto W_M.
  WeylElt conjugate(WeylElt w) const;
};

/// Identity on elements supported in W_L; throws otherwise.
HeckeElt embed(const HeckeElt& h, const LeviSet& levi);

enum class Side { left, right };

/// One piece of a decomposition over H_L: h = sum piece.coeff * T_rep
/// (left) or h = sum T_rep * piece.coeff (right), coeff in H_L.
struct LeviPiece {
  WeylElt rep;
  HeckeElt coeff;
};

/// Left: reps are ^L W.  Right: reps are the inverses of ^L W (minimal in
/// w W_L).  Pieces come in the order of ^L W; zero pieces are omitted.
std::vector<LeviPiece> decompose_over_levi(const HeckeElt& h, const LeviSet& levi, Side side);
HeckeElt reassemble(const HeckePtr& alg, const std::vector<LeviPiece>& pieces, Side side);

/// The Bernstein opposition of H_L applied to an element of H_L.
HeckeElt levi_star_b(const HeckeElt& h, const LeviSet& levi);

/// The isomorphism H_{M'} -> H_M induced by conjugation by w0_rep:
/// Theta_mu -> Theta_{w0_rep mu}, T_w -> T_{w0_rep w w0_rep^{-1}}.
HeckeElt gamma_transport(const HeckeElt& h, const ParabolicCtx& ctx);

struct LengthFormulaReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<WeylElt> failures;
};
/// l(w0_rep^{-1} w w0_rep) = l(w) for every w in W_M.
LengthFormulaReport check_length_formula(const ParabolicCtx& ctx);

/// star_b(omega) against T_{w0_rep}^{-1} gamma(levi_star_b(omega, M')) T_{w0_rep}
/// (as_written) or with the conjugator inverted (mirrored); omega in H_{M'}.
bool check_parabolic_opposition(const HeckeElt& omega, const ParabolicCtx& ctx, Orientation o);
/// The right hand side of that comparison.
HeckeElt parabolic_opposition_rhs(const HeckeElt& omega, const ParabolicCtx& ctx, Orientation o);

/// T^{-1} x T (as_written) or T x T^{-1} (mirrored) for T = T_w.
HeckeElt sandwich(const HeckeElt& x, WeylElt w, Orientation o);

}  // namespace hk
