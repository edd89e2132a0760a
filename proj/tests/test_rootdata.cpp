#include <doctest.h>

#include <set>

#include "hk/rootdata.hpp"

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

TEST_CASE("presets and Cartan data") {
  auto gl2 = RootDatum::preset("GL2");
  CHECK(gl2->simple_roots()[0] == Weight{1, -1});
  CHECK(gl2->simple_coroots()[0] == Coweight{1, -1});
  CHECK(gl2->cartan(0, 0) == 2);
  auto a1 = RootDatum::preset("A1");
  CHECK(pairing(a1->simple_roots()[0], a1->simple_coroots()[0]) == 2);
  CHECK(pairing(a1->simple_roots()[0], Coweight{3}) == 6);
  CHECK(pairing(Weight{1, -1}, Coweight{1, 0}) == 1);
  auto g2 = RootDatum::preset("G2");
  CHECK(g2->num_positive_roots() == 6);
  CHECK(g2->weyl_order() == 12);
  CHECK(RootDatum::preset("B2")->weyl_order() == 8);
  CHECK(RootDatum::preset("GL3")->weyl_order() == 6);
  auto sum = RootDatum::preset("A1xA2");
  CHECK(sum->rank() == 3);
  CHECK(sum->weyl_order() == 12);
  CHECK(sum->components(sum->full_levi()).size() == 2);
  CHECK_THROWS_AS(RootDatum::preset("E8"), std::invalid_argument);
}

TEST_CASE("validation rejects bad data") {
  CHECK_THROWS(RootDatum::create("bad", 1, {Weight{1}}, {Coweight{1}}));
  // affine A1: not of finite type
  CHECK_THROWS(RootDatum::create("aff", 2, {Weight{2, -2}, Weight{-2, 2}}, {Coweight{1, 0}, Coweight{0, 1}}));
  CHECK_THROWS(RootDatum::create("short", 2, {Weight{1}}, {Coweight{1, 0}}));
}

TEST_CASE("witness") {
  CHECK(RootDatum::preset("GL2")->strict_dom_witness() == Coweight{1, 0});
  CHECK(RootDatum::preset("GL3")->strict_dom_witness() == Coweight{1, 0, -1});
  CHECK(RootDatum::preset("A2")->strict_dom_witness() == Coweight{1, 1});
  CHECK(RootDatum::preset("A1")->strict_dom_witness() == Coweight{1});
}

TEST_CASE("Weyl action and words") {
  auto a1 = RootDatum::preset("A1");
  WeylElt s = a1->simple_reflection(0);
  CHECK(a1->act(s, Coweight{1}) == Coweight{-1});
  CHECK(a1->act(a1->identity(), Coweight{5}) == Coweight{5});
  auto gl2 = RootDatum::preset("GL2");
  CHECK(gl2->act(gl2->simple_reflection(0), Coweight{1, 0}) == Coweight{0, 1});
  auto a2 = RootDatum::preset("A2");
  WeylElt w0 = a2->longest_element(a2->full_levi());
  CHECK(a2->reduced_word(w0) == std::vector<int>{0, 1, 0});
  CHECK(a2->length(w0) == 3);
  CHECK(a2->longest_element(LeviSet({0})) == a2->simple_reflection(0));
  CHECK(a1->longest_element(a1->full_levi()) == s);
}

TEST_CASE("Weyl group axioms, exhaustive") {
  for (const char* name : {"A1", "GL2", "A2", "GL3", "B2", "G2", "A1xA1"}) {
    auto d = RootDatum::preset(name);
    for (WeylElt w : d->elements()) {
      CHECK(d->inverse(d->inverse(w)) == w);
      CHECK(d->mul(w, d->inverse(w)) == d->identity());
      CHECK(static_cast<int>(d->reduced_word(w).size()) == d->length(w));
      CHECK(d->from_word(d->reduced_word(w)) == w);
      CHECK(d->length(d->inverse(w)) == d->length(w));
      int inversions = 0;
      for (std::size_t k = 0; k < d->num_positive_roots(); ++k) inversions += d->inverse_makes_negative(w, k);
      CHECK(inversions == d->length(w));
      for (WeylElt u : d->elements()) CHECK(d->length(d->mul(w, u)) <= d->length(w) + d->length(u));
      // the contragredient action preserves the pairing
      for (std::size_t k = 0; k < d->num_positive_roots(); ++k)
        CHECK(pairing(d->act(w, d->positive_root(k)), d->act(w, d->positive_coroot(k))) == 2);
    }
  }
}

TEST_CASE("two rho") {
  CHECK(RootDatum::preset("GL2")->two_rho(LeviSet::full(1)) == Weight{1, -1});
  auto gl3 = RootDatum::preset("GL3");
  CHECK(gl3->two_rho(gl3->full_levi()) == Weight{2, 0, -2});
  auto a2 = RootDatum::preset("A2");
  CHECK(a2->two_rho(LeviSet({0})) == a2->simple_roots()[0]);
}

TEST_CASE("dominance") {
  auto gl2 = RootDatum::preset("GL2");
  CHECK(gl2->is_dominant(Coweight{1, 0}));
  CHECK(gl2->is_dominant(Coweight{1, 1}));
  CHECK_FALSE(gl2->is_dominant(Coweight{0, 1}));
  auto [plus, minus] = gl2->dominant_decomposition(Coweight{0, 1});
  CHECK(plus == Coweight{1, 1});
  CHECK(minus == Coweight{1, 0});
  auto g2 = RootDatum::preset("G2");
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      auto [p, m] = g2->dominant_decomposition(Coweight{a, b});
      CHECK(g2->is_dominant(p));
      CHECK(g2->is_dominant(m));
      CHECK(p - m == Coweight{a, b});
    }
}

TEST_CASE("extended affine Weyl group") {
  auto a1 = RootDatum::preset("A1");
  WeylElt s = a1->simple_reflection(0);
  ExtElt x{Coweight{1}, a1->identity()};
  CHECK(a1->ext_mul(x, ExtElt{Coweight{0}, s}) == ExtElt{Coweight{1}, s});
  CHECK(a1->ext_inv(ExtElt{Coweight{1}, s}) == ExtElt{Coweight{1}, s});
  CHECK(a1->ext_length(x) == 2);
  CHECK(a1->ext_length(ExtElt{Coweight{1}, s}) == 1);
  auto gl2 = RootDatum::preset("GL2");
  ExtElt r{Coweight{1, 0}, gl2->simple_reflection(0)};
  CHECK(gl2->ext_mul(r, r) == ExtElt{Coweight{1, 1}, gl2->identity()});
  CHECK(gl2->ext_length(r) == 0);

  for (const char* name : {"A1", "GL2", "A2", "B2", "G2"}) {
    auto d = RootDatum::preset(name);
    CHECK(d->ext_length(d->ext_identity()) == 0);
    for (WeylElt w : d->elements()) {
      CHECK(d->ext_length(ExtElt{Coweight(static_cast<std::size_t>(d->rank())), w}) == d->length(w));
      for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
          Coweight mu(static_cast<std::size_t>(d->rank()));
          mu[0] = a;
          if (d->rank() > 1) mu[1] = b;
          ExtElt y{mu, w};
          CHECK(d->ext_mul(d->ext_inv(y), y) == d->ext_identity());
          CHECK(d->ext_length(d->ext_inv(y)) == d->ext_length(y));
          if (w == d->identity() && d->is_dominant(mu))
            CHECK(d->ext_length(y) == pairing(d->two_rho(d->full_levi()), mu));
        }
    }
  }
}

TEST_CASE("coset representatives and conjugate Levis") {
  auto a2 = RootDatum::preset("A2");
  LeviSet l1({0});
  auto reps = a2->min_coset_reps(l1);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == a2->identity());
  CHECK(reps[1] == word(*a2, {2}));
  CHECK(reps[2] == word(*a2, {2, 1}));
  CHECK(a2->min_coset_reps(a2->full_levi()).size() == 1);
  CHECK(a2->min_coset_reps(LeviSet()).size() == 6);

  auto [p, q] = a2->pq_decompose(word(*a2, {1, 2}), l1);
  CHECK(p == word(*a2, {1}));
  CHECK(q == word(*a2, {2}));
  auto [p0, q0] = a2->pq_decompose(word(*a2, {1, 2, 1}), l1);
  CHECK(p0 == word(*a2, {1}));
  CHECK(q0 == word(*a2, {2, 1}));

  auto [lp, w0p] = a2->conjugate_levi(l1);
  CHECK(lp == LeviSet({1}));
  CHECK(w0p == word(*a2, {2, 1}));
  auto [lf, wf] = a2->conjugate_levi(a2->full_levi());
  CHECK(lf == a2->full_levi());
  CHECK(wf == a2->identity());
  auto [le, we] = a2->conjugate_levi(LeviSet());
  CHECK(le.empty());
  CHECK(we == a2->longest_element(a2->full_levi()));
}

TEST_CASE("parabolic combinatorics, exhaustive") {
  for (const char* name : {"A2", "GL3", "B2", "G2", "A1xA1"}) {
    auto d = RootDatum::preset(name);
    const WeylElt w0 = d->longest_element(d->full_levi());
    for (const LeviSet& l : all_levis(*d)) {
      auto sub = d->weyl_subgroup(l);
      auto reps = d->min_coset_reps(l);
      CHECK(reps.size() * sub.size() == d->weyl_order());
      std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
      for (WeylElt w : d->elements()) {
        auto [a, b] = d->pq_decompose(w, l);
        CHECK(d->in_subgroup(a, l));
        CHECK(std::find(reps.begin(), reps.end(), b) != reps.end());
        CHECK(d->mul(a, b) == w);
        CHECK(d->length(w) == d->length(a) + d->length(b));
        seen.insert({a.id, b.id});
      }
      CHECK(seen.size() == d->weyl_order());

      auto [lp, w0p] = d->conjugate_levi(l);
      const WeylElt w0m = d->longest_element(l);
      CHECK(d->mul(w0m, w0p) == w0);
      CHECK(d->length(w0) == d->length(w0m) + d->length(w0p));
      CHECK(lp.size() == l.size());
      // length is preserved by conjugation into the conjugate Levi
      for (WeylElt u : sub) {
        WeylElt c = d->mul(d->mul(d->inverse(w0p), u), w0p);
        CHECK(d->length(c) == d->length(u));
        CHECK(d->in_subgroup(c, lp));
      }
      // L -> L' is an involution on the set of standard Levis
      auto [lpp, w0pp] = d->conjugate_levi(lp);
      CHECK(lpp == l);
      CHECK(w0pp == d->inverse(w0p));
    }
  }
}
