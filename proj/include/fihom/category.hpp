#pragma once

// The skeletal category FI_G: objects 0,1,2,..., morphisms m -> n are
// injections [m] -> [n] decorated with a G-coloring of the domain.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fihom {

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A finite group given by its Cayley table. Elements are 0..order-1.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial()) {}
  /// Throws ContractViolation if the table is not a group.
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int order);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverses_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverses_;
};

/// A morphism m -> n. `injection[i]` is the 1-based image of point i+1,
/// `colors[i]` the group element attached to point i+1.
struct FiGMorphism {
  int source = 0;
  int target = 0;
  std::vector<int> injection;
  std::vector<int> colors;

  bool operator==(const FiGMorphism&) const = default;
  auto operator<=>(const FiGMorphism&) const = default;

  static FiGMorphism identity(int n);
  /// The standard inclusion [n] -> [n+1], i -> i, trivial colors.
  static FiGMorphism standard_inclusion(int n);
  /// i -> i + a from [n] to [n+a], trivial colors.
  static FiGMorphism translation(int n, int a);

  bool is_invertible() const { return source == target; }
  std::string to_string() const;
};

/// Checks the morphism invariants against `group`; throws ContractViolation.
void check_morphism(const FiGMorphism& alpha, const FiniteGroup& group);

/// beta ∘ alpha. Colors compose as h(i) = beta.colors[alpha(i)] · alpha.colors[i].
FiGMorphism compose(const FiniteGroup& group, const FiGMorphism& beta, const FiGMorphism& alpha);

/// |C(m,n)| = binom(n,m) · m! · |G|^m; 0 when m > n.
std::int64_t hom_set_size(int m, int n, int group_order);

/// All of C(m,n), lexicographic on (injection, colors).
std::vector<FiGMorphism> hom_set(int m, int n, const FiniteGroup& group);

/// Position of alpha in hom_set(alpha.source, alpha.target, group).
std::int64_t hom_rank(const FiGMorphism& alpha, int group_order);
FiGMorphism hom_unrank(std::int64_t rank, int m, int n, int group_order);

/// The invertible tau with alpha = tau ∘ ι_{n-1} ∘ ... ∘ ι_m. tau agrees with
/// alpha on [m] and sends m+1..n onto the complement of the image in
/// increasing order with trivial colors.
FiGMorphism canonical_factor(const FiniteGroup& group, const FiGMorphism& alpha);

/// Generators of G_n as used by module data: adjacent transpositions
/// s_1..s_{n-1} (index i-1), followed by color insertions c_g on point 1
/// for each g in G (index n-1+g). Degree 0 has no generators.
int generator_count(int n, int group_order);
FiGMorphism generator_morphism(int n, int index, int group_order);

/// A word in the generators of G_n, listed in application order
/// (the first entry acts first).
using Word = std::vector<int>;

/// Decomposes an invertible morphism of degree n into a word.
Word wreath_word(const FiniteGroup& group, const FiGMorphism& tau);

/// Word for the color insertion of g at point j (1-based).
Word color_word(int n, int j, int g);

/// Binomial coefficient (exact for the small arguments used here).
std::int64_t binomial(int n, int k);

/// The k-subsets of {1..n} in lexicographic order, and the rank of a subset.
std::vector<std::vector<int>> subsets(int n, int k);
std::int64_t subset_rank(const std::vector<int>& subset, int n);

}  // namespace fihom
