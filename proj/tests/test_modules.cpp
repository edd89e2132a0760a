#include <doctest.h>

#include "hk/modules.hpp"

using namespace hk;

namespace {

RationalFunction K(const char* s) { return RationalFunction::parse(s); }

UnramifiedCharacter chi_of(std::vector<const char*> vals) {
  std::vector<RationalFunction> out;
  for (const char* s : vals) out.push_back(K(s));
  return UnramifiedCharacter(out);
}

}  // namespace

TEST_CASE("A1 principal series matrices") {
  auto H = Hecke::create(RootDatum::preset("A1"));
  const RationalFunction z = K("3");
  auto V = principal_series(H, UnramifiedCharacter({z}), H->rd().full_levi());
  REQUIRE(V.dim() == 2);
  // basis 1(x)T_e, 1(x)T_s
  CHECK(V.t(0) == KMatrix::from_rows({{0, 1}, {K("q"), K("q-1")}}));
  // T_s Theta_1 = Theta_{-1} T_s + (q-1)(Theta_1 + Theta_0)
  CHECK(V.theta(0) == KMatrix::from_rows({{z, 0}, {K("q-1") * (z + 1), z.inverse()}}));
  CHECK(validate_module(V).pass);
}

TEST_CASE("validate_module catches non-commuting Theta") {
  auto H = Hecke::create(RootDatum::preset("GL2"));
  KMatrix a = KMatrix::from_rows({{1, 1}, {0, 1}});
  KMatrix b = KMatrix::from_rows({{1, 0}, {1, 1}});
  HModule V(H, LeviSet{}, 2, {}, {a, b});
  auto rep = validate_module(V);
  CHECK_FALSE(rep.pass);
  CHECK(rep.failure.find("(e_1,e_2)") != std::string::npos);

  HModule C(H, LeviSet{}, 1, {}, {KMatrix::from_rows({{K("2")}}), KMatrix::from_rows({{K("v")}})});
  CHECK(validate_module(C).pass);
}

TEST_CASE("induction from the torus is the principal series") {
  auto H = Hecke::create(RootDatum::preset("A2"));
  const auto chi = chi_of({"2", "5"});
  auto ctx = ParabolicCtx::make(H->datum(), LeviSet{});
  auto ind = induce(character_module(H, chi), ctx);
  auto ps = principal_series(H, chi, H->rd().full_levi());
  CHECK(ind.dim() == 6);
  CHECK(ind.t_mats() == ps.t_mats());
  CHECK(ind.theta_mats() == ps.theta_mats());
}

TEST_CASE("stage compatibility, restriction, Jacquet spectrum") {
  auto H = Hecke::create(RootDatum::preset("A2"));
  const auto chi = chi_of({"2", "5"});
  CHECK(stage_compatibility_check(H, chi, LeviSet({0})).pass);
  auto V = principal_series(H, chi, LeviSet({0}));
  CHECK(validate_module(V).pass);
  auto ctx = ParabolicCtx::make(H->datum(), LeviSet({0}));
  auto W = induce(V, ctx);
  CHECK(W.dim() == 6);
  CHECK(validate_module(W).pass);
  auto R = restrict_levi(W, LeviSet({1}));
  CHECK(validate_module(R).pass);
  CHECK_THROWS(restrict_levi(V, LeviSet({1})));

  auto A1 = Hecke::create(RootDatum::preset("A1"));
  CHECK(jacquet_spectrum_check(A1, chi_of({"3"}), Coweight{1}));
  auto GL2 = Hecke::create(RootDatum::preset("GL2"));
  CHECK(jacquet_spectrum_check(GL2, chi_of({"2", "7"}), Coweight{1, 0}));
  CHECK(jacquet_spectrum_check(GL2, chi_of({"2", "7"}), Coweight{0, 1}));
}

TEST_CASE("Reeder and Jantzen maps") {
  auto A1 = Hecke::create(RootDatum::preset("A1"));
  auto [m, rep] = reeder_check(A1, chi_of({"3"}));
  CHECK(rep.pass());
  CHECK(rep.rank == 2);
  CHECK(m.matrix.det() != RationalFunction(0));

  auto H = Hecke::create(RootDatum::preset("A2"));
  const LeviSet L({0});
  auto ctx = ParabolicCtx::make(H->datum(), L);
  auto V = principal_series(H, chi_of({"2", "5"}), L);
  auto [jm, jrep] = jantzen_check(V, ctx);
  CHECK(jrep.pass());
  CHECK(jm.verified.size() == 3);
}

TEST_CASE("twisted Jacquet action on generators") {
  auto H = Hecke::create(RootDatum::preset("A2"));
  const auto& d = H->rd();
  const LeviSet L({0});
  auto ctx = ParabolicCtx::make(H->datum(), L);
  auto V = principal_series(H, chi_of({"2", "5"}), d.full_levi());
  CHECK(jacquet_right_action(V, ctx, H->one()) == KMatrix::identity(V.dim()));
  // omega in H_{M'}, M' = {2}
  const HeckeElt omega = H->t(d.simple_reflection(1));
  const HeckeElt theta = H->theta(Coweight{1, -2});
  // right action: omega1 omega2 acts as J(omega1) J(omega2)
  CHECK(jacquet_right_action(V, ctx, omega * theta) ==
        jacquet_right_action(V, ctx, omega) * jacquet_right_action(V, ctx, theta));
  CHECK(jacquet_right_action(V, ctx, theta * omega) ==
        jacquet_right_action(V, ctx, theta) * jacquet_right_action(V, ctx, omega));
}
