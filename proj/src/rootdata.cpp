#include "hk/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace hk {

namespace {

constexpr std::size_t kMaxRoots = 4096;
constexpr std::size_t kMaxWeylOrder = 2048;

// Determinant of a small integer matrix by fraction-free elimination.
std::int64_t integer_det(std::vector<std::int64_t> a, std::size_t n) {
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[r * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

// Calls f on every integer vector of the given rank and exact L1 norm.
template <class F>
void for_each_l1_sphere(std::size_t rank, int norm, F&& f) {
  std::vector<int> cur(rank, 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == rank) {
      cur[pos] = left;
      f(cur);
      if (left != 0) {
        cur[pos] = -left;
        f(cur);
      }
      return;
    }
    for (int a = -left; a <= left; ++a) {
      cur[pos] = a;
      self(self, pos + 1, left - std::abs(a));
    }
  };
  if (rank == 0) {
    if (norm == 0) f(cur);
    return;
  }
  rec(rec, 0, norm);
}

struct PresetSpec {
  std::vector<std::vector<int>> roots, coroots;
  int rank;
};

std::vector<std::vector<int>> cartan_rows(std::initializer_list<std::vector<int>> rows) { return rows; }

PresetSpec simply_connected(const std::vector<std::vector<int>>& cartan) {
  PresetSpec p;
  p.rank = static_cast<int>(cartan.size());
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    p.roots.push_back(cartan[i]);
    std::vector<int> e(cartan.size(), 0);
    e[i] = 1;
    p.coroots.push_back(e);
  }
  return p;
}

PresetSpec gl(int n) {
  PresetSpec p;
  p.rank = n;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i)] = 1;
    a[static_cast<std::size_t>(i) + 1] = -1;
    p.roots.push_back(a);
    p.coroots.push_back(a);
  }
  return p;
}

PresetSpec basic_preset(std::string_view name) {
  if (name == "A1") return PresetSpec{{{2}}, {{1}}, 1};
  if (name == "GL2") return gl(2);
  if (name == "GL3") return gl(3);
  if (name == "A2") return simply_connected(cartan_rows({{2, -1}, {-1, 2}}));
  if (name == "B2") return simply_connected(cartan_rows({{2, -2}, {-1, 2}}));
  if (name == "G2") return simply_connected(cartan_rows({{2, -1}, {-3, 2}}));
  throw std::invalid_argument("unknown root datum '" + std::string(name) + "'");
}

}  // namespace

// ---------------------------------------------------------------------------
// LeviSet

LeviSet::LeviSet(std::vector<int> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  if (!idx_.empty() && idx_.front() < 0) throw std::invalid_argument("LeviSet: negative index");
}

LeviSet LeviSet::full(int num_simple) {
  std::vector<int> all(static_cast<std::size_t>(num_simple));
  std::iota(all.begin(), all.end(), 0);
  return LeviSet(std::move(all));
}

bool LeviSet::contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

bool LeviSet::subset_of(const LeviSet& other) const {
  return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

std::string LeviSet::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < idx_.size(); ++k) s += (k ? "," : "") + std::to_string(idx_[k] + 1);
  return s + "}";
}

// ---------------------------------------------------------------------------
// construction

std::shared_ptr<const RootDatum> RootDatum::create(std::string name, int rank, std::vector<Weight> simple_roots,
                                                   std::vector<Coweight> simple_coroots) {
  if (rank < 0) throw std::invalid_argument("root datum: negative rank");
  if (simple_roots.size() != simple_coroots.size())
    throw std::invalid_argument("root datum: simple_roots and simple_coroots differ in number");
  for (const auto& a : simple_roots)
    if (a.rank() != static_cast<std::size_t>(rank)) throw std::invalid_argument("root datum: simple root of wrong length");
  for (const auto& a : simple_coroots)
    if (a.rank() != static_cast<std::size_t>(rank))
      throw std::invalid_argument("root datum: simple coroot of wrong length");

  std::shared_ptr<RootDatum> d(new RootDatum());
  d->name_ = std::move(name);
  d->rank_ = rank;
  d->simple_roots_ = std::move(simple_roots);
  d->simple_coroots_ = std::move(simple_coroots);
  d->build();
  return d;
}

std::vector<std::string> RootDatum::preset_names() { return {"A1", "GL2", "A2", "GL3", "B2", "G2"}; }

std::shared_ptr<const RootDatum> RootDatum::preset(std::string_view expr) {
  std::vector<PresetSpec> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t x = expr.find('x', start);
    std::string_view piece = expr.substr(start, x == std::string_view::npos ? std::string_view::npos : x - start);
    parts.push_back(basic_preset(piece));
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  int rank = 0;
  for (const auto& p : parts) rank += p.rank;
  std::vector<Weight> roots;
  std::vector<Coweight> coroots;
  int offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.roots.size(); ++i) {
      Weight a(static_cast<std::size_t>(rank));
      Coweight c(static_cast<std::size_t>(rank));
      for (int j = 0; j < p.rank; ++j) {
        a[static_cast<std::size_t>(offset + j)] = p.roots[i][static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(offset + j)] = p.coroots[i][static_cast<std::size_t>(j)];
      }
      roots.push_back(a);
      coroots.push_back(c);
    }
    offset += p.rank;
  }
  return create(std::string(expr), rank, std::move(roots), std::move(coroots));
}

void RootDatum::build() {
  const std::size_t n = simple_roots_.size();
  const std::size_t r = static_cast<std::size_t>(rank_);

  cartan_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cartan_[i * n + j] = static_cast<int>(pairing(simple_roots_[i], simple_coroots_[j]));
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i * n + i] != 2)
      throw std::invalid_argument("root datum: <alpha_" + std::to_string(i + 1) + ", coroot> != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan_[i * n + j] > 0) throw std::invalid_argument("root datum: positive off-diagonal Cartan entry");
      if ((cartan_[i * n + j] == 0) != (cartan_[j * n + i] == 0))
        throw std::invalid_argument("root datum: Cartan matrix zero pattern is not symmetric");
    }
  }
  {
    std::vector<std::int64_t> a(cartan_.begin(), cartan_.end());
    if (integer_det(a, n) == 0) throw std::invalid_argument("root datum: simple roots are linearly dependent");
  }

  // Roots and coroots, in simple-root / simple-coroot coordinates.
  {
    using Coords = std::vector<int>;
    std::map<Coords, Coords> seen;  // root coords -> coroot coords
    std::vector<Coords> queue;
    for (std::size_t i = 0; i < n; ++i) {
      Coords e(n, 0);
      e[i] = 1;
      seen.emplace(e, e);
      queue.push_back(e);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Coords beta = queue[head];
      const Coords cobeta = seen.at(beta);
      for (std::size_t j = 0; j < n; ++j) {
        int b = 0, c = 0;  // <beta, coroot_j>, <alpha_j, cobeta>
        for (std::size_t i = 0; i < n; ++i) {
          b += beta[i] * cartan_[i * n + j];
          c += cartan_[j * n + i] * cobeta[i];
        }
        Coords nb = beta, nc = cobeta;
        nb[j] -= b;
        nc[j] -= c;
        if (seen.emplace(nb, nc).second) {
          queue.push_back(nb);
          if (queue.size() > kMaxRoots) throw std::invalid_argument("root datum: Cartan matrix is not of finite type");
        }
      }
    }
    std::vector<std::pair<int, Coords>> pos;
    for (const auto& [beta, cobeta] : seen) {
      bool nonneg = std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; });
      bool nonpos = std::all_of(beta.begin(), beta.end(), [](int x) { return x <= 0; });
      if (!nonneg && !nonpos) throw std::invalid_argument("root datum: root with mixed signs (not finite type)");
      Coords neg(beta.size());
      for (std::size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
      if (!seen.count(neg)) throw std::invalid_argument("root datum: root system not closed under negation");
      if (nonneg) pos.emplace_back(std::accumulate(beta.begin(), beta.end(), 0), beta);
    }
    std::sort(pos.begin(), pos.end());
    for (const auto& [height, beta] : pos) {
      const Coords& cobeta = seen.at(beta);
      Weight a(r);
      Coweight c(r);
      for (std::size_t i = 0; i < n; ++i) {
        a += beta[i] * simple_roots_[i];
        c += cobeta[i] * simple_coroots_[i];
      }
      pos_roots_.push_back(a);
      pos_coroots_.push_back(c);
      pos_coords_.push_back(beta);
    }
  }

  // Strictly dominant witness: least L1 norm, then lexicographically greatest.
  {
    Coweight fallback(r);
    for (const auto& c : pos_coroots_) fallback += c;
    const int cap = static_cast<int>(fallback.l1_norm());
    bool found = false;
    for (int norm = 0; norm <= cap && !found; ++norm) {
      for_each_l1_sphere(r, norm, [&](const std::vector<int>& cand) {
        Coweight nu(cand);
        for (std::size_t i = 0; i < n; ++i)
          if (pairing(simple_roots_[i], nu) < 1) return;
        if (!found || nu > witness_) witness_ = nu;
        found = true;
      });
    }
    if (!found) witness_ = fallback;
  }

  // Finite Weyl group: breadth-first over left multiplication by simple
  // reflections; an element is determined by its image of the witness.
  {
    auto reflect_matrix = [&](std::size_t i) {
      // s_i(mu) = mu - <alpha_i, mu> coroot_i, as a matrix on column vectors
      std::vector<int> m(r * r, 0);
      for (std::size_t a = 0; a < r; ++a) m[a * r + a] = 1;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) m[a * r + b] -= simple_coroots_[i][a] * simple_roots_[i][b];
      return m;
    };
    std::vector<std::vector<int>> refl;
    for (std::size_t i = 0; i < n; ++i) refl.push_back(reflect_matrix(i));
    auto matmul = [&](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> c(r * r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
          if (a[i * r + k] == 0) continue;
          for (std::size_t j = 0; j < r; ++j) c[i * r + j] += a[i * r + k] * b[k * r + j];
        }
      return c;
    };

    std::unordered_map<Coweight, std::uint32_t> index;
    std::vector<Coweight> images;
    std::vector<int> id(r * r, 0);
    for (std::size_t a = 0; a < r; ++a) id[a * r + a] = 1;
    act_.push_back(id);
    images.push_back(witness_);
    lengths_.push_back(0);
    index.emplace(witness_, 0);
    for (std::size_t head = 0; head < act_.size(); ++head) {
      for (std::size_t i = 0; i < n; ++i) {
        Coweight img = images[head] - static_cast<std::int32_t>(pairing(simple_roots_[i], images[head])) * simple_coroots_[i];
        std::uint32_t target;
        auto it = index.find(img);
        if (it == index.end()) {
          target = static_cast<std::uint32_t>(act_.size());
          if (target >= kMaxWeylOrder) throw std::invalid_argument("root datum: Weyl group too large");
          index.emplace(img, target);
          act_.push_back(matmul(refl[i], act_[head]));
          images.push_back(img);
          lengths_.push_back(lengths_[head] + 1);
        } else {
          target = it->second;
        }
        lmul_.resize(act_.size() * n);
        lmul_[head * n + i] = target;
      }
    }
    const std::size_t order = act_.size();
    lmul_.resize(order * n);

    words_.assign(order, {});
    for (std::size_t w = 1; w < order; ++w) {  // BFS order is by length
      for (std::size_t i = 0; i < n; ++i) {
        if (pairing(simple_roots_[i], images[w]) < 0) {
          const std::uint32_t rest = lmul_[w * n + i];
          words_[w].push_back(static_cast<int>(i));
          words_[w].insert(words_[w].end(), words_[rest].begin(), words_[rest].end());
          break;
        }
      }
    }

    mul_.assign(order * order, 0);
    inv_.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        Coweight img(r);
        for (std::size_t i = 0; i < r; ++i) {
          std::int32_t s = 0;
          for (std::size_t j = 0; j < r; ++j) s += act_[a][i * r + j] * images[b][j];
          img[i] = s;
        }
        const std::uint32_t ab = index.at(img);
        mul_[a * order + b] = ab;
        if (ab == 0) inv_[a] = static_cast<std::uint32_t>(b);
      }
    }

    canon_order_.clear();
    for (std::size_t w = 0; w < order; ++w) canon_order_.push_back(WeylElt{static_cast<std::uint32_t>(w)});
    std::stable_sort(canon_order_.begin(), canon_order_.end(), [&](WeylElt x, WeylElt y) {
      if (lengths_[x.id] != lengths_[y.id]) return lengths_[x.id] < lengths_[y.id];
      return words_[x.id] < words_[y.id];
    });
    canon_rank_.assign(order, 0);
    for (std::size_t k = 0; k < order; ++k) canon_rank_[canon_order_[k].id] = static_cast<std::uint32_t>(k);

    // w^{-1} alpha < 0  iff  <alpha, w nu> < 0, nu regular dominant
    const std::size_t np = pos_roots_.size();
    neg_.assign(order * np, 0);
    for (std::size_t w = 0; w < order; ++w)
      for (std::size_t k = 0; k < np; ++k) neg_[w * np + k] = pairing(pos_roots_[k], images[w]) < 0 ? 1 : 0;
  }
}

bool RootDatum::same_as(const RootDatum& other) const {
  return this == &other || (name_ == other.name_ && rank_ == other.rank_ && simple_roots_ == other.simple_roots_ &&
                            simple_coroots_ == other.simple_coroots_);
}

// ---------------------------------------------------------------------------
// roots

std::vector<std::size_t> RootDatum::levi_positive_roots(const LeviSet& levi) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < pos_coords_.size(); ++k) {
    bool inside = true;
    for (std::size_t i = 0; i < pos_coords_[k].size(); ++i)
      if (pos_coords_[k][i] != 0 && !levi.contains(static_cast<int>(i))) inside = false;
    if (inside) out.push_back(k);
  }
  return out;
}

std::vector<LeviSet> RootDatum::components(const LeviSet& levi) const {
  std::vector<LeviSet> out;
  std::vector<int> todo = levi.indices();
  std::vector<char> done(static_cast<std::size_t>(num_simple()), 0);
  for (int start : todo) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp{start}, stack{start};
    done[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : todo) {
        if (!done[static_cast<std::size_t>(j)] && cartan(i, j) != 0) {
          done[static_cast<std::size_t>(j)] = 1;
          comp.push_back(j);
          stack.push_back(j);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

std::size_t RootDatum::highest_root(const LeviSet& component) const {
  auto roots = levi_positive_roots(component);
  if (roots.empty()) throw std::invalid_argument("highest_root: empty component");
  // positive roots are sorted by height
  return roots.back();
}

Weight RootDatum::two_rho(const LeviSet& levi) const {
  Weight s(static_cast<std::size_t>(rank_));
  for (std::size_t k : levi_positive_roots(levi)) s += pos_roots_[k];
  return s;
}

// ---------------------------------------------------------------------------
// Weyl group

WeylElt RootDatum::from_word(std::span<const int> word) const {
  WeylElt w = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= num_simple()) throw std::invalid_argument("Weyl word letter out of range");
    w = lmul(w, *it);
  }
  return w;
}

Coweight RootDatum::act(WeylElt w, const Coweight& mu) const {
  const std::size_t r = static_cast<std::size_t>(rank_);
  const auto& m = act_[w.id];
  Coweight out(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::int32_t s = 0;
    for (std::size_t j = 0; j < r; ++j) s += m[i * r + j] * mu[j];
    out[i] = s;
  }
  return out;
}

Weight RootDatum::act(WeylElt w, const Weight& chi) const {
  // contragredient: transpose of the matrix of w^{-1}
  const std::size_t r = static_cast<std::size_t>(rank_);
  const auto& m = act_[inverse(w).id];
  Weight out(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::int32_t s = 0;
    for (std::size_t j = 0; j < r; ++j) s += m[j * r + i] * chi[j];
    out[i] = s;
  }
  return out;
}

WeylElt RootDatum::reflection(std::size_t k) const {
  const Coweight img = witness_ - static_cast<std::int32_t>(pairing(pos_roots_[k], witness_)) * pos_coroots_[k];
  for (WeylElt w : canon_order_)
    if (act(w, witness_) == img) return w;
  throw std::logic_error("reflection not found in W");
}

// ---------------------------------------------------------------------------
// parabolic combinatorics

bool RootDatum::in_subgroup(WeylElt w, const LeviSet& levi) const {
  for (int i : words_[w.id])
    if (!levi.contains(i)) return false;
  return true;
}

std::vector<WeylElt> RootDatum::weyl_subgroup(const LeviSet& levi) const {
  std::vector<WeylElt> out;
  for (WeylElt w : canon_order_)
    if (in_subgroup(w, levi)) out.push_back(w);
  return out;
}

WeylElt RootDatum::longest_element(const LeviSet& levi) const {
  WeylElt best = identity();
  for (WeylElt w : canon_order_)
    if (in_subgroup(w, levi) && length(w) > length(best)) best = w;
  return best;
}

std::vector<WeylElt> RootDatum::min_coset_reps(const LeviSet& levi) const {
  std::vector<WeylElt> out;
  for (WeylElt w : canon_order_) {
    bool minimal = true;
    for (int i : levi.indices())
      if (left_descent(w, i)) minimal = false;
    if (minimal) out.push_back(w);
  }
  return out;
}

std::pair<WeylElt, WeylElt> RootDatum::pq_decompose(WeylElt w, const LeviSet& levi) const {
  WeylElt left = identity(), right = w;
  for (bool again = true; again;) {
    again = false;
    for (int i : levi.indices()) {
      if (left_descent(right, i)) {
        right = lmul(right, i);
        left = rmul(left, i);
        again = true;
        break;
      }
    }
  }
  return {left, right};
}

std::pair<LeviSet, WeylElt> RootDatum::conjugate_levi(const LeviSet& levi) const {
  const WeylElt w0 = longest_element(full_levi());
  const WeylElt w0m = longest_element(levi);
  const WeylElt w0p = mul(w0m, w0);  // w0'' is an involution
  const WeylElt winv = inverse(w0p);
  std::vector<int> image;
  for (int i : levi.indices()) {
    const Weight a = act(winv, simple_roots_[static_cast<std::size_t>(i)]);
    auto it = std::find(simple_roots_.begin(), simple_roots_.end(), a);
    if (it == simple_roots_.end())
      throw std::logic_error("conjugate_levi: w0'^{-1} does not map the Levi's simple roots to simple roots");
    image.push_back(static_cast<int>(it - simple_roots_.begin()));
  }
  return {LeviSet(std::move(image)), w0p};
}

// ---------------------------------------------------------------------------
// dominance

bool RootDatum::is_dominant(const Coweight& mu, const LeviSet& levi) const {
  for (int i : levi.indices())
    if (pairing(simple_roots_[static_cast<std::size_t>(i)], mu) < 0) return false;
  return true;
}

bool RootDatum::is_antidominant(const Coweight& mu, const LeviSet& levi) const {
  for (int i : levi.indices())
    if (pairing(simple_roots_[static_cast<std::size_t>(i)], mu) > 0) return false;
  return true;
}

std::pair<Coweight, Coweight> RootDatum::dominant_decomposition(const Coweight& mu, const LeviSet& levi) const {
  std::int64_t k = 0;
  for (int i : levi.indices()) {
    const std::int64_t a = pairing(simple_roots_[static_cast<std::size_t>(i)], mu);
    const std::int64_t b = pairing(simple_roots_[static_cast<std::size_t>(i)], witness_);
    if (a < 0) k = std::max(k, (-a + b - 1) / b);
  }
  const Coweight minus = static_cast<std::int32_t>(k) * witness_;
  return {mu + minus, minus};
}

// ---------------------------------------------------------------------------
// extended affine Weyl group

ExtElt RootDatum::ext_mul(const ExtElt& x, const ExtElt& y) const {
  return ExtElt{x.mu + act(x.w, y.mu), mul(x.w, y.w)};
}

ExtElt RootDatum::ext_inv(const ExtElt& x) const {
  const WeylElt wi = inverse(x.w);
  return ExtElt{-act(wi, x.mu), wi};
}

int RootDatum::ext_length(const ExtElt& x, const LeviSet& levi) const {
  std::int64_t len = 0;
  for (std::size_t k : levi_positive_roots(levi)) {
    const std::int64_t m = pairing(pos_roots_[k], x.mu);
    const std::int64_t t = inverse_makes_negative(x.w, k) ? m - 1 : m;
    len += t < 0 ? -t : t;
  }
  return static_cast<int>(len);
}

std::vector<ExtElt> RootDatum::affine_reflections(const LeviSet& levi) const {
  std::vector<ExtElt> out;
  for (const LeviSet& comp : components(levi)) {
    const std::size_t k = highest_root(comp);
    out.push_back(ExtElt{pos_coroots_[k], reflection(k)});
  }
  return out;
}

std::vector<ExtElt> RootDatum::ext_elements_up_to(const LeviSet& levi, int max_length, int box) const {
  const std::size_t r = static_cast<std::size_t>(rank_);
  auto key_less = [&](const ExtElt& a, const ExtElt& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    return canon_rank_[a.w.id] < canon_rank_[b.w.id];
  };
  std::vector<std::vector<ExtElt>> layers(1);
  const auto sub = weyl_subgroup(levi);
  std::vector<int> cur(r, -box);
  while (true) {
    Coweight mu(cur);
    for (WeylElt w : sub)
      if (ext_length(ExtElt{mu, w}, levi) == 0) layers[0].push_back(ExtElt{mu, w});
    std::size_t k = 0;
    while (k < r && cur[k] == box) cur[k++] = -box;
    if (k == r) break;
    ++cur[k];
  }
  std::vector<ExtElt> gens;
  for (int i : levi.indices()) gens.push_back(ExtElt{Coweight(r), simple_reflection(i)});
  for (const auto& a : affine_reflections(levi)) gens.push_back(a);
  for (int len = 1; len <= max_length; ++len) {
    std::vector<ExtElt> next;
    for (const auto& x : layers.back())
      for (const auto& g : gens) {
        ExtElt y = ext_mul(x, g);
        if (ext_length(y, levi) == len) next.push_back(y);
      }
    std::sort(next.begin(), next.end(), key_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layers.push_back(std::move(next));
  }
  std::vector<ExtElt> out;
  for (auto& layer : layers) {
    std::sort(layer.begin(), layer.end(), key_less);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace hk
