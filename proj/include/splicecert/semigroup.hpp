#pragma once

#include "splicecert/integer.hpp"

#include <memory>
#include <span>
#include <vector>

namespace splicecert {

/// Sub-semigroup of the nonnegative integers generated by finitely many
/// positive integers. Generators are stored sorted and deduplicated.
///
/// Genus and Frobenius number go through the Apery set of the smallest
/// generator, computed once on first use and shared between copies.
/// Membership prefers a bounded enumeration when the query is small relative
/// to the generators and falls back to the Apery set otherwise.
class NumericalSemigroup {
 public:
  /// Throws InvalidArgument if generators is empty or has a non-positive entry.
  explicit NumericalSemigroup(std::vector<Integer> generators);
  NumericalSemigroup(std::initializer_list<long long> generators);

  const std::vector<Integer>& generators() const { return generators_; }
  const Integer& gcd() const { return gcd_; }

  bool contains(const Integer& n) const;

  /// Number of positive integers not in S. Throws InfiniteGaps if gcd > 1.
  Integer genus() const;

  /// Largest integer not in S, -1 when S is all of N. Throws InfiniteGaps if gcd > 1.
  Integer frobenius() const;

  /// Entry i is the least element of S congruent to i mod m. m must be a
  /// generator; throws InfiniteGaps if gcd > 1 and TooLarge if m exceeds
  /// kMaxAperyModulus.
  std::vector<Integer> apery_set(const Integer& m) const;

  /// S with one more generator.
  NumericalSemigroup with_generator(const Integer& g) const;

  static constexpr std::size_t kMaxAperyModulus = std::size_t{1} << 22;

 private:
  struct Cache;

  const std::vector<Integer>& smallest_apery() const;
  bool contains_by_enumeration(const Integer& n) const;

  std::vector<Integer> generators_;
  Integer gcd_;
  std::shared_ptr<Cache> cache_;
};

/// Round-robin shortest-path computation of the Apery set of <generators>
/// with respect to modulus (itself one of the generators). Requires
/// gcd(generators) = 1.
std::vector<Integer> compute_apery_set(std::span<const Integer> generators, const Integer& modulus);

}  // namespace splicecert
