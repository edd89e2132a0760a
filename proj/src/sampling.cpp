#include "hk/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace hk {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Sampler::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(eng_());
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = eng_();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % n);
}

Coweight Sampler::coweight(int rank, int box) {
  Coweight mu(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < mu.rank(); ++i) mu[i] = static_cast<std::int32_t>(uniform(-box, box));
  return mu;
}

WeylElt Sampler::weyl(const RootDatum& d, const LeviSet& levi) {
  if (levi == d.full_levi()) return pick(d.elements());
  return pick(d.weyl_subgroup(levi));
}

Laurent Sampler::laurent() {
  std::vector<Laurent::Term> terms;
  const int n = static_cast<int>(uniform(1, 2));
  for (int k = 0; k < n; ++k) {
    std::int64_t c = 0;
    while (c == 0) c = uniform(-3, 3);
    terms.emplace_back(static_cast<int>(uniform(-2, 2)), Rational(c));
  }
  Laurent l = Laurent::from_terms(std::move(terms));
  return l.is_zero() ? Laurent(1) : l;
}

HeckeElt Sampler::element(const HeckePtr& alg, const LeviSet& levi, int max_terms, int box) {
  const RootDatum& d = alg->rd();
  const auto sub = d.weyl_subgroup(levi);
  std::vector<HeckeTerm> terms;
  const int n = static_cast<int>(uniform(1, max_terms));
  for (int k = 0; k < n; ++k) terms.push_back(HeckeTerm{coweight(d.rank(), box), pick(sub), laurent()});
  HeckeElt h(alg, std::move(terms));
  return h.is_zero() ? alg->one() : h;
}

RationalFunction Sampler::generic_value() {
  static const std::vector<Rational> values = {Rational(2),     Rational(3),     Rational(-2),   Rational(-3),
                                               Rational(1, 2),  Rational(1, 3),  Rational(-1, 2), Rational(2, 3),
                                               Rational(-3, 2), Rational(5),     Rational(-5, 3), Rational(7, 2)};
  const Rational& c = pick(values);
  return RationalFunction(Laurent::monomial(c, static_cast<int>(uniform(-1, 1))));
}

}  // namespace hk
