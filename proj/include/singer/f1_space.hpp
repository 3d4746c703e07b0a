#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singer/cayley.hpp"
#include "singer/incidence.hpp"

namespace singer {

/// m+1 fibers X_0..X_m of size n; point (i, a) has index i*n + a and
/// mu_n acts on each fiber by a -> a + 1.
struct F1Space {
  unsigned m = 0;
  unsigned n = 0;
  std::size_t num_points() const noexcept { return static_cast<std::size_t>(n) * (m + 1); }
  PointIndex point(unsigned fiber, unsigned a) const { return fiber * n + a; }
};

F1Space make_f1_space(unsigned m, unsigned n, std::uint64_t cap = 10000);

/// (i, a) -> (perm[i], a + twist[i] mod n).
struct MonomialAut {
  Perm perm;
  std::vector<std::uint32_t> twist;
  friend bool operator==(const MonomialAut&, const MonomialAut&) = default;
  friend auto operator<=>(const MonomialAut&, const MonomialAut&) = default;
};

PointIndex apply(const F1Space& space, const MonomialAut& g, PointIndex p);
Perm as_permutation(const F1Space& space, const MonomialAut& g);
/// `first`, then `second`.
MonomialAut compose(const F1Space& space, const MonomialAut& first, const MonomialAut& second);
MonomialAut identity_aut(const F1Space& space);
/// The same automorphism as an element of GroupHandle::monomial(n, m), and back.
GroupElement to_element(const GroupHandle& w, const MonomialAut& g);
MonomialAut from_element(const GroupHandle& w, const GroupElement& e);

struct F1SingerGroup {
  F1Space space;
  std::vector<MonomialAut> elements;  // identity first
  PointAction action;
  SingerCertificate regularity;
  bool homomorphism = true;  // only meaningful for singer_general
  bool equivariant = true;   // point (i, a) <-> h^a t_i intertwines the actions

  std::size_t order() const noexcept { return elements.size(); }
};

/// Regularity of a point action (every ordered point pair has exactly one mover).
SingerCertificate check_regular(const PointAction& action);

/// Generators of a few permutation groups on {0..m}: cycle, dihedral, alt,
/// full, and the fixed-degree aliases s3 (m=2), a4 and s4-full (m=3).
std::vector<Perm> named_permutation_group(std::string_view name, unsigned m);

/// S (sharply transitive on the fibers) times the diagonal twist (1, ..., 1).
F1SingerGroup singer_first(unsigned m, unsigned n, const std::vector<Perm>& s_generators);

/// A transitive action of an abstract group on m+1 fibers whose point
/// stabiliser is cyclic of order n. The action need not be faithful.
/// `stabilizer_generator` picks h; by default the least element of order n fixing fiber 0.
F1SingerGroup singer_general(unsigned m, unsigned n, const PermRep& s,
                             std::optional<std::uint32_t> stabilizer_generator = std::nullopt);

/// Action of R on the right cosets of <z>, ordered by least element.
PermRep coset_action(const CayleyTable& r, std::uint32_t z);

struct EmbeddingCertificate {
  unsigned i = 0, j = 0;
  std::size_t source_order = 0, target_order = 0;
  bool homomorphism = false;
  bool injective = false;
  bool closed = false;
  bool equivariant = false;
  std::vector<std::uint32_t> element_map;
  std::vector<PointIndex> point_map;
  bool passed() const noexcept { return homomorphism && injective && closed && equivariant; }
};

/// S(i) -> S(j) for i | j: diagonal twist nu_i -> nu_j^(j/i), points (f, a) -> (f, a*j/i).
EmbeddingCertificate embed_singer(unsigned m, unsigned i, unsigned j, const std::vector<Perm>& s_generators);

struct DirectLimitReport {
  std::vector<unsigned> chain;
  std::vector<std::size_t> orders;
  bool embeddings_certified = true;
  bool coherent = true;
};

DirectLimitReport direct_limit_demo(unsigned m, const std::vector<unsigned>& chain, const std::vector<Perm>& s_generators);

struct RegularCase {
  unsigned n = 0, m = 0;
  std::size_t pairs = 0;      // (group, stabiliser generator) pairs examined
  std::size_t confirmed = 0;  // reproduced by singer_general up to conjugacy in C_n wr S_{m+1}
  std::vector<std::string> counterexamples;
  std::optional<std::size_t> brute_force_subgroups;  // all regular subgroups of the monomial group
  std::optional<bool> brute_force_covered;           // each is conjugate to a realisation
};

struct RegularCrossCheck {
  std::vector<RegularCase> cases;
  bool confirmed() const;
};

/// For every n(m+1) <= max_points: each group R of that order and each z in R
/// of order n gives a regular subgroup of C_n wr S_{m+1}; singer_general must
/// reproduce it up to monomial conjugacy. Where the monomial group has at most
/// `brute_force_limit` elements, all of its regular subgroups are also
/// enumerated directly and compared with the realisations.
RegularCrossCheck cross_check_regular_subgroups(unsigned max_points = 24, std::size_t brute_force_limit = 4000);

}  // namespace singer
