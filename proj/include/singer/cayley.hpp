#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "singer/group.hpp"

namespace singer {

using Perm = std::vector<std::uint32_t>;

/// Finite group given by its multiplication table. Index 0 is the identity.
class CayleyTable {
 public:
  /// Validates the group axioms; throws DomainError otherwise.
  explicit CayleyTable(std::vector<std::vector<std::uint32_t>> mul);

  static CayleyTable cyclic(std::uint32_t n);
  static CayleyTable from_group(const GroupHandle& group);
  static CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(mul_.size()); }
  std::uint32_t identity() const noexcept { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a][b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t order_of(std::uint32_t a) const { return order_[a]; }
  std::uint32_t power(std::uint32_t a, std::int64_t k) const;
  bool is_abelian() const;
  const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return mul_; }

  /// Elements generated by `gens`, identity first, then breadth-first.
  std::vector<std::uint32_t> generated(const std::vector<std::uint32_t>& gens) const;
  /// Greedy generating set in index order.
  std::vector<std::uint32_t> generators() const;

 private:
  std::vector<std::vector<std::uint32_t>> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> order_;
};

/// A finite group together with a right action on {0..degree-1}:
/// perms[g][x] is the image of x under g, and x^(gh) = (x^g)^h.
struct PermRep {
  CayleyTable group;
  std::vector<Perm> perms;
  std::size_t degree() const { return perms.empty() ? 0 : perms.front().size(); }
};

/// Closure of permutation generators; the group table follows "apply left factor first".
PermRep permutation_group(const std::vector<Perm>& generators, std::size_t degree);

/// Extends gens[i] -> images[i] to a homomorphism a -> b, if consistent.
std::optional<std::vector<std::uint32_t>> extend_hom(const CayleyTable& a, const CayleyTable& b,
                                                     const std::vector<std::uint32_t>& gens,
                                                     const std::vector<std::uint32_t>& images);

std::optional<std::vector<std::uint32_t>> find_isomorphism(const CayleyTable& a, const CayleyTable& b);

/// All automorphisms, as element maps.
std::vector<std::vector<std::uint32_t>> automorphisms(const CayleyTable& g);

/// Every group of order n up to isomorphism (1 <= n <= 30), built as iterated
/// cyclic extensions. Exhaustive because every group of such order is solvable.
const std::vector<CayleyTable>& groups_of_order(std::uint32_t n);

}  // namespace singer
