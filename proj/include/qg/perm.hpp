#ifndef QG_PERM_HPP
#define QG_PERM_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qg {

// A bijection of {0..n-1}, stored as its image list: perm[x] is the image of x.
// Composition uses the left record throughout: (p*q)(x) = p(q(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(unsigned degree);                 // identity
  explicit Perm(std::vector<unsigned> images);    // throws Error unless bijective

  static Perm identity(unsigned degree) { return Perm(degree); }
  static Perm from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles);

  // Accepts cycle notation "(0 1)(2 4)" or an image list "1,0,4,5,2,3".
  static Perm parse(unsigned degree, std::string_view text);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned x) const { return images_[x]; }
  const std::vector<unsigned>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  bool fixed_point_free() const;
  unsigned order() const;
  std::vector<std::vector<unsigned>> cycles() const;  // nontrivial cycles only

  std::string to_string() const;     // canonical: image list "1,0,4,5,2,3"
  std::string cycle_string() const;  // "(0 1)(2 4)" or "()" for the identity

  auto operator<=>(const Perm&) const = default;

private:
  std::vector<unsigned> images_;
};

// (p*q)(x) = p(q(x)); throws DegreeMismatch.
Perm compose(const Perm& p, const Perm& q);
Perm operator*(const Perm& p, const Perm& q);

// p^k for any integer k (negative powers via the inverse).
Perm power(const Perm& p, long k);

std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace qg

#endif
