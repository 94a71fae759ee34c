#include "akform/bases.hpp"

#include <mutex>
#include <stdexcept>

#include "akform/inner_product.hpp"

namespace akform {

namespace {

void descend(int k, const Weights& w, int var, long remaining,
             std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == k + 1) {
    if (remaining == 0) out.emplace_back(exps);
    return;
  }
  const int r = w.r[var];
  for (long e = 0; e * r <= remaining; ++e) {
    exps[var] = static_cast<int>(e);
    descend(k, w, var + 1, remaining - e * r, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::optional<int> PolyBasis::index_of(const Monomial& m) const {
  const auto it = index.find(m);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<int> VFBasis::index_of(int comp, const Monomial& m) const {
  const auto it = index.find({comp, m});
  if (it == index.end()) return std::nullopt;
  return it->second;
}

VectorField VFBasis::element_field(int i) const {
  const Element& e = elements.at(i);
  VectorField v(k);
  v.set_component(e.comp, Polynomial::monomial(k, e.mono));
  return v;
}

VectorField VFBasis::combine(const QVector& coords) const {
  if (coords.size() != elements.size()) {
    throw std::invalid_argument("vf basis: coordinate length mismatch");
  }
  VectorField v(k);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    v.add_to_component(elements[i].comp,
                       Polynomial::monomial(k, elements[i].mono, coords[i]));
  }
  return v;
}

QVector VFBasis::coordinates(const VectorField& x) const {
  if (x.k() != k) throw std::invalid_argument("vf basis: mixed-k field");
  if (!x.eps_component_zero()) {
    throw std::logic_error("vf basis: field has a nonzero eps component");
  }
  QVector coords(elements.size());
  for (int i = 0; i < k; ++i) {
    for (const auto& [m, c] : x.component(i).terms()) {
      const auto idx = index_of(i, m);
      if (!idx) {
        throw std::logic_error("vf basis: field lies outside the span of H_" +
                               std::to_string(gamma));
      }
      coords[*idx] = c;
    }
  }
  return coords;
}

std::vector<int> VFBasis::good_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (elements[i].mono.eps_exponent() >= 1) out.push_back(i);
  }
  return out;
}

PolyBasis enumerate_poly_basis(int k, long delta) {
  const Weights w = weights(k);
  PolyBasis b;
  b.k = k;
  b.delta = delta;
  if (delta >= 0) {
    std::vector<int> exps(k + 1, 0);
    descend(k, w, 0, delta, exps, b.monomials);
    // bounded descent in variable order emits ascending lex already
    b.gram.reserve(b.monomials.size());
    for (int i = 0; i < b.dim(); ++i) {
      b.index.emplace(b.monomials[i], i);
      b.gram.push_back(gram_weight(b.monomials[i], w, delta));
    }
  }
  return b;
}

VFBasis enumerate_vf_basis(int k, long gamma) {
  const Weights w = weights(k);
  VFBasis b;
  b.k = k;
  b.gamma = gamma;
  for (int comp = 0; comp < k; ++comp) {
    const auto piece = poly_basis(k, gamma + w.r[comp]);
    for (int j = 0; j < piece->dim(); ++j) {
      b.index.emplace(std::make_pair(comp, piece->monomials[j]),
                      static_cast<int>(b.elements.size()));
      b.elements.push_back({comp, piece->monomials[j]});
      b.gram.push_back(piece->gram[j]);
    }
  }
  return b;
}

VFBasis enumerate_good_basis(int k, long beta) {
  if (beta < k) {
    throw std::invalid_argument(
        "good basis: beta must be >= k (quasiorder greater than k-1)");
  }
  const VFBasis full = enumerate_vf_basis(k, beta);
  VFBasis b;
  b.k = k;
  b.gamma = beta;
  for (int i = 0; i < full.dim(); ++i) {
    if (full.elements[i].mono.eps_exponent() < 1) continue;
    b.index.emplace(std::make_pair(full.elements[i].comp, full.elements[i].mono),
                    static_cast<int>(b.elements.size()));
    b.elements.push_back(full.elements[i]);
    b.gram.push_back(full.gram[i]);
  }
  return b;
}

namespace {

std::mutex cache_mutex;

// The enumeration runs outside the lock: enumerate_vf_basis itself calls
// poly_basis, so holding cache_mutex across it would self-deadlock. A lost
// race just builds the same basis twice; the first insert wins.
template <typename Value, typename Build>
std::shared_ptr<const Value> cache_lookup(
    std::map<std::pair<int, long>, std::shared_ptr<const Value>>& cache,
    int k, long degree, const Build& build) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    const auto it = cache.find({k, degree});
    if (it != cache.end()) return it->second;
  }
  auto fresh = std::make_shared<const Value>(build(k, degree));
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[{k, degree}];
  if (!slot) slot = std::move(fresh);
  return slot;
}

}  // namespace

std::shared_ptr<const PolyBasis> poly_basis(int k, long delta) {
  static std::map<std::pair<int, long>, std::shared_ptr<const PolyBasis>> cache;
  return cache_lookup(cache, k, delta, enumerate_poly_basis);
}

std::shared_ptr<const VFBasis> vf_basis(int k, long gamma) {
  static std::map<std::pair<int, long>, std::shared_ptr<const VFBasis>> cache;
  return cache_lookup(cache, k, gamma, enumerate_vf_basis);
}

}  // namespace akform
