#include "hk/parabolic.hpp"

#include <map>
#include <stdexcept>

namespace hk {

std::string to_string(Orientation o) { return o == Orientation::as_written ? "as-written" : "mirrored"; }

Orientation parse_orientation(const std::string& s) {
  if (s == "as-written" || s == "as_written") return Orientation::as_written;
  if (s == "mirrored") return Orientation::mirrored;
  throw std::invalid_argument("unknown orientation '" + s + "' (expected as-written or mirrored)");
}

ParabolicCtx ParabolicCtx::make(RootDatumPtr datum, const LeviSet& levi) {
  const RootDatum& d = *datum;
  for (int i : levi.indices())
    if (i < 0 || i >= d.num_simple()) throw std::invalid_argument("Levi index out of range: " + levi.str());
  ParabolicCtx c;
  c.levi = levi;
  c.levi_weyl = d.weyl_subgroup(levi);
  c.reps = d.min_coset_reps(levi);
  c.w0_levi = d.longest_element(levi);
  auto [conj, w0r] = d.conjugate_levi(levi);
  c.conj_levi = conj;
  c.w0_rep = w0r;
  c.two_rho = d.two_rho(levi);
  c.datum = std::move(datum);
  return c;
}

WeylElt ParabolicCtx::conjugate(WeylElt w) const {
  const RootDatum& d = *datum;
  return d.mul(d.mul(w0_rep, w), d.inverse(w0_rep));
}

HeckeElt embed(const HeckeElt& h, const LeviSet& levi) {
  if (!h.supported_in(levi)) throw std::invalid_argument("element not supported in the Levi " + levi.str());
  return h;
}

namespace {

std::vector<LeviPiece> decompose_left(const HeckeElt& h, const LeviSet& levi) {
  const HeckePtr& alg = h.algebra();
  const RootDatum& d = alg->rd();
  std::map<std::uint32_t, std::vector<HeckeTerm>> buckets;  // keyed by canonical rank of w'
  for (const auto& t : h.terms()) {
    auto [inner, rep] = d.pq_decompose(t.w, levi);
    buckets[d.canonical_rank(rep)].push_back(HeckeTerm{t.mu, inner, t.coeff});
  }
  std::vector<LeviPiece> out;
  for (auto& [rank, terms] : buckets) out.push_back(LeviPiece{d.elements()[rank], HeckeElt(alg, std::move(terms))});
  return out;
}

}  // namespace

std::vector<LeviPiece> decompose_over_levi(const HeckeElt& h, const LeviSet& levi, Side side) {
  if (side == Side::left) return decompose_left(h, levi);
  // transpose is an anti-automorphism preserving H_L, so a left
  // decomposition of the transpose gives the right decomposition of h.
  const RootDatum& d = h.rd();
  auto pieces = decompose_left(transpose(h), levi);
  for (auto& p : pieces) {
    p.rep = d.inverse(p.rep);
    p.coeff = transpose(p.coeff);
  }
  return pieces;
}

HeckeElt reassemble(const HeckePtr& alg, const std::vector<LeviPiece>& pieces, Side side) {
  HeckeElt r = alg->zero();
  for (const auto& p : pieces) r += side == Side::left ? p.coeff * alg->t(p.rep) : alg->t(p.rep) * p.coeff;
  return r;
}

HeckeElt levi_star_b(const HeckeElt& h, const LeviSet& levi) { return star_b(h, levi); }

HeckeElt gamma_transport(const HeckeElt& h, const ParabolicCtx& ctx) {
  if (!h.supported_in(ctx.conj_levi))
    throw std::invalid_argument("element not supported in the conjugate Levi " + ctx.conj_levi.str());
  const RootDatum& d = *ctx.datum;
  std::vector<HeckeTerm> terms;
  terms.reserve(h.terms().size());
  for (const auto& t : h.terms()) terms.push_back(HeckeTerm{d.act(ctx.w0_rep, t.mu), ctx.conjugate(t.w), t.coeff});
  return HeckeElt(h.algebra(), std::move(terms));
}

LengthFormulaReport check_length_formula(const ParabolicCtx& ctx) {
  const RootDatum& d = *ctx.datum;
  LengthFormulaReport r;
  const WeylElt inv = d.inverse(ctx.w0_rep);
  for (WeylElt w : ctx.levi_weyl) {
    ++r.checked;
    if (d.length(d.mul(d.mul(inv, w), ctx.w0_rep)) != d.length(w)) {
      r.pass = false;
      r.failures.push_back(w);
    }
  }
  return r;
}

HeckeElt sandwich(const HeckeElt& x, WeylElt w, Orientation o) {
  const HeckePtr& alg = x.algebra();
  return o == Orientation::as_written ? alg->t_inv(w) * x * alg->t(w) : alg->t(w) * x * alg->t_inv(w);
}

HeckeElt parabolic_opposition_rhs(const HeckeElt& omega, const ParabolicCtx& ctx, Orientation o) {
  return sandwich(gamma_transport(levi_star_b(omega, ctx.conj_levi), ctx), ctx.w0_rep, o);
}

bool check_parabolic_opposition(const HeckeElt& omega, const ParabolicCtx& ctx, Orientation o) {
  return star_b(omega) == parabolic_opposition_rhs(omega, ctx, o);
}

}  // namespace hk
