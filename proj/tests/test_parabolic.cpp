#include <doctest.h>

#include "hk/parabolic.hpp"
#include "hk/sampling.hpp"

using namespace hk;

namespace {

WeylElt word(const RootDatum& d, std::vector<int> letters) {
  for (auto& x : letters) --x;
  return d.from_word(letters);
}

std::vector<LeviSet> all_levis(const RootDatum& d) {
  std::vector<LeviSet> out;
  const int n = d.num_simple();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    out.emplace_back(idx);
  }
  return out;
}

}  // namespace

TEST_CASE("A2 decomposition examples") {
  auto H = Hecke::create(RootDatum::preset("A2"));
  const auto& d = H->rd();
  const LeviSet L({0});
  const Coweight mu{2, -1};

  auto pieces = decompose_over_levi(H->basis(mu, word(d, {1, 2})), L, Side::left);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].rep == word(d, {2}));
  CHECK(pieces[0].coeff == H->basis(mu, word(d, {1})));

  pieces = decompose_over_levi(H->t(d.longest_element(d.full_levi())), L, Side::left);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].rep == word(d, {2, 1}));
  CHECK(pieces[0].coeff == H->t(word(d, {1})));

  pieces = decompose_over_levi(H->basis(mu, word(d, {1})), L, Side::left);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].rep == d.identity());
}

TEST_CASE("conjugate Levi and transport") {
  auto H = Hecke::create(RootDatum::preset("A2"));
  const auto& d = H->rd();
  auto ctx = ParabolicCtx::make(H->datum(), LeviSet({0}));
  CHECK(ctx.conj_levi == LeviSet({1}));
  CHECK(ctx.w0_rep == word(d, {2, 1}));
  CHECK(gamma_transport(H->t(word(d, {2})), ctx) == H->t(word(d, {1})));
  CHECK(gamma_transport(H->one(), ctx) == H->one());
  const Coweight mu{1, -1};
  CHECK(gamma_transport(H->theta(mu), ctx) == H->theta(d.act(ctx.w0_rep, mu)));

  CHECK(levi_star_b(H->t(word(d, {1})), LeviSet({0})) == H->t(word(d, {1})));
  CHECK(levi_star_b(H->one(), LeviSet({0})) == H->one());

  auto full = ParabolicCtx::make(H->datum(), d.full_levi());
  CHECK(full.w0_rep == d.identity());
  auto empty = ParabolicCtx::make(H->datum(), LeviSet{});
  CHECK(empty.w0_rep == d.longest_element(d.full_levi()));
}

TEST_CASE("embed rejects elements outside the Levi") {
  auto H = Hecke::create(RootDatum::preset("A2"));
  const auto& d = H->rd();
  CHECK_NOTHROW(embed(H->t(word(d, {1})), LeviSet({0})));
  CHECK_THROWS(embed(H->t(word(d, {2})), LeviSet({0})));
}

TEST_CASE("length formula and decomposition round trip, every Levi") {
  for (const char* name : {"A1", "GL2", "A2", "GL3", "B2", "G2"}) {
    auto H = Hecke::create(RootDatum::preset(name));
    const auto& d = H->rd();
    Sampler S(11);
    for (const LeviSet& L : all_levis(d)) {
      auto ctx = ParabolicCtx::make(H->datum(), L);
      CHECK(check_length_formula(ctx).pass);
      for (int k = 0; k < 10; ++k) {
        HeckeElt h = S.element(H, d.full_levi(), 3, 2);
        for (Side side : {Side::left, Side::right}) {
          auto pieces = decompose_over_levi(h, L, side);
          for (const auto& p : pieces) CHECK(p.coeff.supported_in(L));
          CHECK(reassemble(H, pieces, side) == h);
        }
      }
    }
  }
}

TEST_CASE("parabolic opposition on generators") {
  auto H = Hecke::create(RootDatum::preset("A2"));
  const auto& d = H->rd();
  auto ctx = ParabolicCtx::make(H->datum(), LeviSet({0}));
  // omega in H_{M'}, M' = {2}
  CHECK(check_parabolic_opposition(H->t(word(d, {2})), ctx, Orientation::as_written));
  CHECK(check_parabolic_opposition(H->theta(d.simple_coroots()[1]), ctx, Orientation::as_written));
  CHECK(check_parabolic_opposition(H->one(), ctx, Orientation::mirrored));
}

TEST_CASE("sandwich") {
  auto H = Hecke::create(RootDatum::preset("A1"));
  const WeylElt s = H->rd().simple_reflection(0);
  const HeckeElt x = H->theta(Coweight{1});
  CHECK(sandwich(x, s, Orientation::as_written) == H->t_inv(s) * x * H->t(s));
  CHECK(sandwich(x, s, Orientation::mirrored) == H->t(s) * x * H->t_inv(s));
  CHECK(parse_orientation(to_string(Orientation::mirrored)) == Orientation::mirrored);
}
