#ifndef QG_QUASIGROUP_HPP
#define QG_QUASIGROUP_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qg/perm.hpp"

namespace qg {

// An element of S3 acting on argument/result positions {1,2,3} of the
// ternary relation x1*x2 = x3.  Stored 0-based: map_[i] is the image of
// position i+1, minus one.
class Parastrophy {
public:
  constexpr Parastrophy() : map_{0, 1, 2} {}
  constexpr explicit Parastrophy(std::array<unsigned, 3> zero_based_map) : map_(zero_based_map) {}

  static const Parastrophy e, s12, s13, s23, s123, s132;
  static const std::array<Parastrophy, 6>& all();
  static Parastrophy parse(std::string_view name);  // "e","12","13","23","123","132"

  // Image of 1-based position i under the underlying S3 element.
  unsigned apply(unsigned i) const { return map_[i - 1] + 1; }

  Parastrophy inverse() const;
  std::string name() const;

  bool operator==(const Parastrophy&) const = default;
  auto operator<=>(const Parastrophy&) const = default;

private:
  std::array<unsigned, 3> map_;
};

// compose(s, t): first t, then s (left record, matching perm composition).
Parastrophy compose(const Parastrophy& s, const Parastrophy& t);

enum class TranslationKind { left, right, middle };

struct LocalMaps {
  std::vector<unsigned> e;  // x * e(x) = x
  std::vector<unsigned> f;  // f(x) * x = x
  std::vector<unsigned> s;  // s(x) = x * x ; total map, not necessarily bijective
  bool left_loop = false;   // f constant
  bool right_loop = false;  // e constant
  bool unipotent = false;   // s constant
  bool idempotent = false;  // e = f = s = identity
};

// A finite quasigroup as an n x n Latin square over {0..n-1}; entry (x,y)
// is the product x*y.  Left and right division tables are precomputed.
class Quasigroup {
public:
  // Throws RowNotPermutation / ColumnNotPermutation with the offending index.
  static Quasigroup validate(unsigned n, const std::vector<std::vector<unsigned>>& grid);
  static Quasigroup cyclic(unsigned n);  // Z_n addition table

  unsigned order() const { return n_; }
  unsigned at(unsigned x, unsigned y) const { return table_[x * n_ + y]; }
  unsigned ldiv(unsigned x, unsigned y) const { return ldiv_[x * n_ + y]; }  // x \ y
  unsigned rdiv(unsigned y, unsigned x) const { return rdiv_[y * n_ + x]; }  // y / x

  Perm translation(TranslationKind kind, unsigned a) const;
  Perm left_translation(unsigned a) const;    // x -> a*x
  Perm right_translation(unsigned a) const;   // x -> x*a
  Perm middle_translation(unsigned a) const;  // the P_a with x * P_a(x) = a

  LocalMaps local_maps() const;
  std::optional<unsigned> left_identity() const;
  std::optional<unsigned> right_identity() const;
  std::optional<unsigned> identity() const;
  bool is_loop() const { return identity().has_value(); }
  bool is_commutative() const;
  bool is_associative() const;

  Quasigroup parastrophe(const Parastrophy& sigma) const;

  std::vector<std::vector<unsigned>> rows() const;

  bool operator==(const Quasigroup&) const = default;

private:
  Quasigroup() = default;
  unsigned n_ = 0;
  std::vector<unsigned> table_, ldiv_, rdiv_;
};

// Mann's tau-property of a set of m permutations of an m-set: every quotient
// p_i p_j^{-1} (i != j) is fixed point free.  Throws SizeMismatch when the
// set size differs from the degree.
bool tau_property(const std::vector<Perm>& perms);

// Oracle form: the set acts simply transitively (exactly one p with p(x)=y).
bool simply_transitive(const std::vector<Perm>& perms);

}  // namespace qg

#endif
