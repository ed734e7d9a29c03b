#include "splicecert/semigroup.hpp"

#include "splicecert/error.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace splicecert {

struct NumericalSemigroup::Cache {
  std::once_flag once;
  std::vector<Integer> apery;  // of the gcd-reduced semigroup, modulus = smallest generator
};

namespace {

std::size_t modulus_to_size(const Integer& m) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, "Apery modulus must be positive");
  if (m > NumericalSemigroup::kMaxAperyModulus) {
    throw Error(ErrorCode::TooLarge, "Apery modulus " + to_string(m) + " exceeds the supported size");
  }
  return m.convert_to<std::size_t>();
}

// Upper estimate of the number of leaves visited by the enumeration.
double enumeration_cost(const std::vector<Integer>& gens, const Integer& n) {
  double cost = 1.0;
  const double target = n.convert_to<double>();
  for (std::size_t i = 1; i < gens.size(); ++i) {
    cost *= target / gens[i].convert_to<double>() + 1.0;
    if (cost > 1e18) break;
  }
  return cost;
}

bool enumerate(const std::vector<Integer>& gens, const std::vector<Integer>& prefix_gcd, std::size_t i,
               const Integer& rem) {
  if (rem == 0) return true;
  if (rem % prefix_gcd[i] != 0) return false;
  if (i == 0) return true;  // divisible by gens[0]
  const Integer& g = gens[i];
  for (Integer left = rem; left >= 0; left -= g) {
    if (enumerate(gens, prefix_gcd, i - 1, left)) return true;
  }
  return false;
}

}  // namespace

std::vector<Integer> compute_apery_set(std::span<const Integer> generators, const Integer& modulus) {
  const std::size_t m = modulus_to_size(modulus);
  std::vector<Integer> dist(m);
  std::vector<bool> reached(m, false);
  dist[0] = 0;
  reached[0] = true;

  for (const Integer& g : generators) {
    if (g <= 0) throw Error(ErrorCode::InvalidArgument, "generators must be positive");
    const std::size_t step = static_cast<std::size_t>(g % modulus);
    if (step == 0) continue;
    const std::size_t classes = std::gcd(step, m);
    const std::size_t cycle = m / classes;
    for (std::size_t start = 0; start < classes; ++start) {
      // Locate the minimum on this residue cycle, then relax once around it.
      std::size_t best = m;
      std::size_t cur = start;
      for (std::size_t k = 0; k < cycle; ++k) {
        if (reached[cur] && (best == m || dist[cur] < dist[best])) best = cur;
        cur = (cur + step) % m;
      }
      if (best == m) continue;
      cur = best;
      for (std::size_t k = 1; k < cycle; ++k) {
        const std::size_t next = (cur + step) % m;
        Integer candidate = dist[cur] + g;
        if (!reached[next] || candidate < dist[next]) {
          dist[next] = std::move(candidate);
          reached[next] = true;
        }
        cur = next;
      }
    }
  }
  if (!std::all_of(reached.begin(), reached.end(), [](bool r) { return r; })) {
    throw Error(ErrorCode::InfiniteGaps, "generators are not coprime; Apery set is unbounded");
  }
  return dist;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Integer> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (generators_.empty()) throw Error(ErrorCode::InvalidArgument, "a semigroup needs at least one generator");
  for (const Integer& g : generators_) {
    if (g <= 0) throw Error(ErrorCode::InvalidArgument, "generator " + to_string(g) + " is not positive");
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  gcd_ = 0;
  for (const Integer& g : generators_) gcd_ = splicecert::gcd(gcd_, g);
}

NumericalSemigroup::NumericalSemigroup(std::initializer_list<long long> generators)
    : NumericalSemigroup(std::vector<Integer>(generators.begin(), generators.end())) {}

const std::vector<Integer>& NumericalSemigroup::smallest_apery() const {
  std::call_once(cache_->once, [this] {
    std::vector<Integer> reduced;
    reduced.reserve(generators_.size());
    for (const Integer& g : generators_) reduced.push_back(g / gcd_);
    cache_->apery = compute_apery_set(reduced, reduced.front());
  });
  return cache_->apery;
}

bool NumericalSemigroup::contains_by_enumeration(const Integer& n) const {
  std::vector<Integer> gens;
  for (const Integer& g : generators_) {
    if (g <= n) gens.push_back(g);
  }
  if (gens.empty()) return false;
  std::vector<Integer> prefix_gcd(gens.size());
  Integer acc = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) prefix_gcd[i] = acc = splicecert::gcd(acc, gens[i]);
  return enumerate(gens, prefix_gcd, gens.size() - 1, n);
}

bool NumericalSemigroup::contains(const Integer& n) const {
  if (n < 0) return false;
  if (n == 0) return true;
  if (n % gcd_ != 0) return false;

  std::vector<Integer> relevant;
  for (const Integer& g : generators_) {
    if (g <= n) relevant.push_back(g);
  }
  if (relevant.empty()) return false;
  if (enumeration_cost(relevant, n) <= 2e5) return contains_by_enumeration(n);

  const Integer smallest = generators_.front() / gcd_;
  if (smallest <= kMaxAperyModulus) {
    const auto& apery = smallest_apery();
    const Integer reduced = n / gcd_;
    const auto residue = static_cast<std::size_t>(reduced % smallest);
    return reduced >= apery[residue];
  }
  return contains_by_enumeration(n);
}

Integer NumericalSemigroup::genus() const {
  if (gcd_ != 1) throw Error(ErrorCode::InfiniteGaps, "gcd of generators is " + to_string(gcd_) + "; infinitely many gaps");
  const auto& apery = smallest_apery();
  const Integer& m = generators_.front();
  Integer total = 0;
  for (const Integer& w : apery) total += w / m;
  return total;
}

Integer NumericalSemigroup::frobenius() const {
  if (gcd_ != 1) throw Error(ErrorCode::InfiniteGaps, "gcd of generators is " + to_string(gcd_) + "; infinitely many gaps");
  const auto& apery = smallest_apery();
  return *std::max_element(apery.begin(), apery.end()) - generators_.front();
}

std::vector<Integer> NumericalSemigroup::apery_set(const Integer& m) const {
  if (!std::binary_search(generators_.begin(), generators_.end(), m)) {
    throw Error(ErrorCode::InvalidArgument, "Apery modulus " + to_string(m) + " is not a generator");
  }
  if (gcd_ != 1) throw Error(ErrorCode::InfiniteGaps, "gcd of generators is " + to_string(gcd_) + "; infinitely many gaps");
  if (m == generators_.front()) return smallest_apery();
  return compute_apery_set(generators_, m);
}

NumericalSemigroup NumericalSemigroup::with_generator(const Integer& g) const {
  auto gens = generators_;
  gens.push_back(g);
  return NumericalSemigroup(std::move(gens));
}

}  // namespace splicecert
