#include "qg/autotopy.hpp"

#include <algorithm>
#include <numeric>

#include "qg/error.hpp"

namespace qg {

bool is_autotopy(const Quasigroup& q, const Isotopy& t) {
  if (t.degree() != q.order())
    throw DegreeMismatch(q.order(), t.degree());
  unsigned n = q.order();
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      if (q.at(t.alpha[x], t.beta[y]) != t.gamma[q.at(x, y)])
        return false;
  return true;
}

AutotopyGroup::AutotopyGroup(unsigned degree, std::vector<Isotopy> elements)
    : degree_(degree), elements_(std::move(elements)) {
  for (const Isotopy& t : elements_)
    if (t.degree() != degree_)
      throw DegreeMismatch(degree_, t.degree());
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool AutotopyGroup::contains(const Isotopy& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

bool AutotopyGroup::is_group() const {
  if (elements_.empty()) return false;
  if (!contains(Isotopy::identity(degree_))) return false;
  for (const Isotopy& t : elements_) {
    if (!contains(t.inverse())) return false;
    for (const Isotopy& s : elements_)
      if (!contains(then(t, s))) return false;
  }
  return true;
}

GroupFingerprint AutotopyGroup::fingerprint() const {
  GroupFingerprint fp;
  fp.order = order();
  fp.abelian = true;
  for (std::size_t i = 0; i < elements_.size() && fp.abelian; ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j)
      if (then(elements_[i], elements_[j]) != then(elements_[j], elements_[i])) {
        fp.abelian = false;
        break;
      }
  for (const Isotopy& t : elements_) {
    unsigned ord = std::lcm(t.alpha.order(), std::lcm(t.beta.order(), t.gamma.order()));
    ++fp.element_orders[ord];
  }
  return fp;
}

PermGroup AutotopyGroup::component(unsigned position) const {
  std::vector<Perm> ps;
  ps.reserve(elements_.size());
  for (const Isotopy& t : elements_)
    ps.push_back(t.component(position));
  return PermGroup(degree_, std::move(ps));
}

namespace {

// Propagation search over a loop with identity e: every autotopy is
// (R_{b1}^-1 gamma, L_a^-1 gamma, gamma) with a = alpha(e), b1 = beta(e)
// and gamma(e) = a*b1.  Seeding (a, gamma(e)) pins b1 = a \ gamma(e); the
// equation gamma(x*y) = R_{b1}^-1 gamma(x) * L_a^-1 gamma(y) then forces
// gamma on the closure of the assigned points under multiplication.  When
// the closure stalls before covering Q, the smallest unassigned point
// branches over all unused images.
class LoopAutotopySearch {
public:
  LoopAutotopySearch(const Quasigroup& loop, unsigned e) : q_(loop), n_(loop.order()), e_(e) {}

  std::vector<Isotopy> run() {
    std::vector<Isotopy> found;
    for (unsigned a = 0; a < n_; ++a) {
      for (unsigned s = 0; s < n_; ++s) {
        unsigned b1 = q_.ldiv(a, s);
        rb1_inv_ = q_.right_translation(b1).inverse();
        la_inv_ = q_.left_translation(a).inverse();
        gamma_.assign(n_, kUnset);
        used_.assign(n_, false);
        assigned_.clear();
        if (assign(e_, s))
          dfs(found);
      }
    }
    return found;
  }

private:
  static constexpr unsigned kUnset = ~0u;

  bool assign(unsigned x, unsigned v) {
    if (gamma_[x] != kUnset) return gamma_[x] == v;
    if (used_[v]) return false;
    gamma_[x] = v;
    used_[v] = true;
    assigned_.push_back(x);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (assigned_.size() > mark) {
      unsigned x = assigned_.back();
      assigned_.pop_back();
      used_[gamma_[x]] = false;
      gamma_[x] = kUnset;
    }
  }

  // Forces gamma over products of assigned points; false on conflict.  The
  // outer loop extends as assignments land, so one call reaches a fixpoint.
  bool propagate() {
    for (std::size_t i = 0; i < assigned_.size(); ++i) {
      unsigned x = assigned_[i];
      for (std::size_t j = 0; j <= i; ++j) {
        unsigned y = assigned_[j];
        if (!assign(q_.at(x, y), q_.at(rb1_inv_[gamma_[x]], la_inv_[gamma_[y]])))
          return false;
        if (!assign(q_.at(y, x), q_.at(rb1_inv_[gamma_[y]], la_inv_[gamma_[x]])))
          return false;
      }
    }
    return true;
  }

  void dfs(std::vector<Isotopy>& found) {
    std::size_t mark = assigned_.size();
    if (!propagate()) {
      undo_to(mark);
      return;
    }
    unsigned x0 = kUnset;
    for (unsigned x = 0; x < n_; ++x)
      if (gamma_[x] == kUnset) {
        x0 = x;
        break;
      }
    if (x0 == kUnset) {
      emit(found);
      undo_to(mark);
      return;
    }
    for (unsigned v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::size_t inner = assigned_.size();
      if (assign(x0, v))
        dfs(found);
      undo_to(inner);
    }
    undo_to(mark);
  }

  void emit(std::vector<Isotopy>& found) {
    Perm gamma(gamma_);
    Isotopy t(compose(rb1_inv_, gamma), compose(la_inv_, gamma), gamma);
    if (is_autotopy(q_, t))
      found.push_back(std::move(t));
  }

  const Quasigroup& q_;
  unsigned n_, e_;
  Perm rb1_inv_, la_inv_;
  std::vector<unsigned> gamma_;
  std::vector<bool> used_;
  std::vector<unsigned> assigned_;
};

// Reduces q to an LP-isotope loop; returns the isotopy used.
Isotopy loop_reduction(const Quasigroup& q, Quasigroup& loop, unsigned& e) {
  Isotopy t = lp_isotopy(q, LpKind::loop, 0, 0);
  loop = apply_isotopy(q, t);
  e = q.at(0, 0);
  return t;
}

AutotopyGroup conjugate_back(const Quasigroup& q, const Isotopy& t,
                             const std::vector<Isotopy>& loop_avt) {
  // Avt(q) = t Avt(loop) t^-1 since loop = q t.
  std::vector<Isotopy> out;
  out.reserve(loop_avt.size());
  for (const Isotopy& s : loop_avt)
    out.push_back(then(then(t, s), t.inverse()));
  AutotopyGroup g(q.order(), std::move(out));
  for (const Isotopy& s : g.elements())
    if (!is_autotopy(q, s))
      throw Error("conjugated element is not an autotopy");
  return g;
}

}  // namespace

AutotopyGroup autotopy_group(const Quasigroup& q, unsigned max_n) {
  if (q.order() > max_n)
    throw SearchBoundExceeded(q.order(), max_n);
  Quasigroup loop = q;
  unsigned e = 0;
  Isotopy t = loop_reduction(q, loop, e);
  std::vector<Isotopy> loop_avt = LoopAutotopySearch(loop, e).run();
  return conjugate_back(q, t, loop_avt);
}

AutotopyGroup autotopy_group_plain(const Quasigroup& q, unsigned max_n) {
  if (q.order() > max_n)
    throw SearchBoundExceeded(q.order(), max_n);
  Quasigroup loop = q;
  unsigned e = 0;
  Isotopy t = loop_reduction(q, loop, e);
  unsigned n = q.order();

  std::vector<Isotopy> loop_avt;
  std::vector<unsigned> img(n);
  for (unsigned x = 0; x < n; ++x) img[x] = x;
  // Every loop autotopy is (R_{beta(e)}^-1 gamma, L_{alpha(e)}^-1 gamma, gamma):
  // enumerate all gamma and all alpha(e).
  do {
    Perm gamma(img);
    for (unsigned a = 0; a < n; ++a) {
      Perm beta = compose(loop.left_translation(a).inverse(), gamma);
      Perm alpha = compose(loop.right_translation(beta[e]).inverse(), gamma);
      Isotopy cand(std::move(alpha), std::move(beta), gamma);
      if (is_autotopy(loop, cand))
        loop_avt.push_back(std::move(cand));
    }
  } while (std::next_permutation(img.begin(), img.end()));

  return conjugate_back(q, t, loop_avt);
}

PermGroup automorphism_group(const Quasigroup& q, unsigned max_n) {
  AutotopyGroup avt = autotopy_group(q, max_n);
  std::vector<Perm> autos;
  for (const Isotopy& t : avt.elements())
    if (t.alpha == t.beta && t.beta == t.gamma)
      autos.push_back(t.alpha);
  return PermGroup(q.order(), std::move(autos));
}

std::optional<Isotopy> third_from_two(const Quasigroup& q, unsigned position,
                                      const Perm& p1, const Perm& p2) {
  if (position < 1 || position > 3)
    throw Error("position must be 1, 2 or 3");
  if (p1.degree() != q.order() || p2.degree() != q.order())
    throw DegreeMismatch(q.order(), p1.degree());
  unsigned n = q.order();

  auto finish = [&](Isotopy cand) -> std::optional<Isotopy> {
    if (is_autotopy(q, cand)) return cand;
    return std::nullopt;
  };

  if (position == 3) {
    // gamma(x*y) = alpha(x) * beta(y); total since every z is a product.
    const Perm& alpha = p1;
    const Perm& beta = p2;
    std::vector<unsigned> img(n, n);
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y) {
        unsigned z = q.at(x, y), v = q.at(alpha[x], beta[y]);
        if (img[z] == n)
          img[z] = v;
        else if (img[z] != v)
          return std::nullopt;
      }
    std::vector<bool> used(n, false);
    for (unsigned v : img) {
      if (used[v]) return std::nullopt;
      used[v] = true;
    }
    return finish(Isotopy(alpha, beta, Perm(std::move(img))));
  }

  if (position == 1) {
    // alpha(x) = gamma(x*y0) / beta(y0) for any fixed y0, then verify.
    const Perm& beta = p1;
    const Perm& gamma = p2;
    std::vector<unsigned> img(n);
    for (unsigned x = 0; x < n; ++x)
      img[x] = q.rdiv(gamma[q.at(x, 0)], beta[0]);
    std::vector<bool> used(n, false);
    for (unsigned v : img) {
      if (used[v]) return std::nullopt;
      used[v] = true;
    }
    return finish(Isotopy(Perm(std::move(img)), beta, gamma));
  }

  // position == 2: beta(y) = alpha(x0) \ gamma(x0*y).
  const Perm& alpha = p1;
  const Perm& gamma = p2;
  std::vector<unsigned> img(n);
  for (unsigned y = 0; y < n; ++y)
    img[y] = q.ldiv(alpha[0], gamma[q.at(0, y)]);
  std::vector<bool> used(n, false);
  for (unsigned v : img) {
    if (used[v]) return std::nullopt;
    used[v] = true;
  }
  return finish(Isotopy(alpha, Perm(std::move(img)), gamma));
}

std::optional<Isotopy> leakh_extend(const Quasigroup& q, unsigned i, const Perm& p,
                                    unsigned j, unsigned a, unsigned b, unsigned max_n) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
    throw Error("leakh_extend needs distinct positions in 1..3");
  if (a >= q.order() || b >= q.order())
    throw Error("leakh_extend element out of range");
  AutotopyGroup avt = autotopy_group(q, max_n);
  std::optional<Isotopy> hit;
  for (const Isotopy& t : avt.elements()) {
    if (t.component(i) != p || t.component(j)[a] != b) continue;
    if (hit)
      throw Error("two distinct completions share a component and an image; uniqueness violated");
    hit = t;
  }
  return hit;
}

AutotopyGroup conjugate_group(const AutotopyGroup& avt, const Isotopy& t) {
  if (avt.degree() != t.degree())
    throw DegreeMismatch(avt.degree(), t.degree());
  std::vector<Isotopy> out;
  out.reserve(avt.order());
  for (const Isotopy& s : avt.elements())
    out.push_back(conjugate(t, s));
  return AutotopyGroup(avt.degree(), std::move(out));
}

}  // namespace qg
