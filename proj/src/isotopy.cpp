#include "qg/isotopy.hpp"

#include "qg/error.hpp"

namespace qg {

Isotopy::Isotopy(Perm a, Perm b, Perm c)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
  if (alpha.degree() != beta.degree())
    throw DegreeMismatch(alpha.degree(), beta.degree());
  if (alpha.degree() != gamma.degree())
    throw DegreeMismatch(alpha.degree(), gamma.degree());
}

Isotopy Isotopy::identity(unsigned degree) {
  Perm e = Perm::identity(degree);
  return Isotopy(e, e, e);
}

bool Isotopy::is_identity() const {
  return alpha.is_identity() && beta.is_identity() && gamma.is_identity();
}

Isotopy Isotopy::inverse() const {
  return Isotopy(alpha.inverse(), beta.inverse(), gamma.inverse());
}

const Perm& Isotopy::component(unsigned i) const {
  switch (i) {
    case 1: return alpha;
    case 2: return beta;
    case 3: return gamma;
    default: throw Error("isotopy component index must be 1, 2 or 3");
  }
}

std::string Isotopy::to_string() const {
  return "(" + alpha.cycle_string() + ", " + beta.cycle_string() + ", " +
         gamma.cycle_string() + ")";
}

Isotopy then(const Isotopy& t, const Isotopy& s) {
  return Isotopy(compose(t.alpha, s.alpha), compose(t.beta, s.beta),
                 compose(t.gamma, s.gamma));
}

Isotopy conjugate(const Isotopy& t, const Isotopy& s) {
  return then(then(t.inverse(), s), t);
}

Quasigroup apply_isotopy(const Quasigroup& q, const Isotopy& t) {
  if (t.degree() != q.order())
    throw DegreeMismatch(q.order(), t.degree());
  unsigned n = q.order();
  Perm gamma_inv = t.gamma.inverse();
  std::vector<std::vector<unsigned>> grid(n, std::vector<unsigned>(n));
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      grid[x][y] = gamma_inv[q.at(t.alpha[x], t.beta[y])];
  return Quasigroup::validate(n, grid);
}

Isostrophy Isostrophy::identity(unsigned degree) {
  return Isostrophy(Parastrophy::e, Isotopy::identity(degree));
}

std::string Isostrophy::to_string() const {
  return "((" + sigma.name() + "), " + t.to_string() + ")";
}

Quasigroup apply_isostrophy(const Quasigroup& q, const Isostrophy& s) {
  return apply_isotopy(q.parastrophe(s.sigma), s.t);
}

Isostrophy compose_isostrophy(const Isostrophy& s1, const Isostrophy& s2) {
  if (s1.degree() != s2.degree())
    throw DegreeMismatch(s1.degree(), s2.degree());
  const Parastrophy& tau = s2.sigma;
  // Component i of the result is alpha_{tau(i)} after beta_i, so that the
  // pair collapses to a single parastrophe-then-isotopy step.
  Isotopy u(compose(s1.t.component(tau.apply(1)), s2.t.alpha),
            compose(s1.t.component(tau.apply(2)), s2.t.beta),
            compose(s1.t.component(tau.apply(3)), s2.t.gamma));
  return Isostrophy(compose(s1.sigma, tau), std::move(u));
}

Isostrophy invert_isostrophy(const Isostrophy& s) {
  Parastrophy inv = s.sigma.inverse();
  Isotopy v(s.t.component(inv.apply(1)).inverse(),
            s.t.component(inv.apply(2)).inverse(),
            s.t.component(inv.apply(3)).inverse());
  return Isostrophy(inv, std::move(v));
}

Isotopy lp_isotopy(const Quasigroup& q, LpKind kind, unsigned a, unsigned b) {
  if (a >= q.order() || b >= q.order())
    throw Error("lp isotopy index out of range");
  Perm e = Perm::identity(q.order());
  switch (kind) {
    case LpKind::loop:
      return Isotopy(q.right_translation(a).inverse(), q.left_translation(b).inverse(), e);
    case LpKind::unipotent_right:
      return Isotopy(e, q.middle_translation(a), q.right_translation(b));
    default:
      return Isotopy(q.middle_translation(a).inverse(), e, q.left_translation(b));
  }
}

Quasigroup lp_isotope(const Quasigroup& q, LpKind kind, unsigned a, unsigned b) {
  Quasigroup out = apply_isotopy(q, lp_isotopy(q, kind, a, b));
  LocalMaps lm = out.local_maps();
  switch (kind) {
    case LpKind::loop:
      if (!out.identity() || *out.identity() != q.at(b, a))
        throw Error("LP isotope is not a loop with identity b*a");
      break;
    case LpKind::unipotent_right:
      if (!lm.unipotent || !out.right_identity())
        throw Error("isotope is not a unipotent right loop");
      break;
    default:
      if (!lm.unipotent || !out.left_identity())
        throw Error("isotope is not a unipotent left loop");
      break;
  }
  return out;
}

namespace {

void check_eq(TransportCheck& tc, const std::string& label, const Perm& lhs, const Perm& rhs) {
  if (lhs != rhs) tc.failed.push_back(label);
}

// Scans for an index a with p equal to the given translation family member.
template <typename F>
std::optional<unsigned> match_index(unsigned n, const Perm& p, F&& family) {
  for (unsigned a = 0; a < n; ++a)
    if (family(a) == p) return a;
  return std::nullopt;
}

}  // namespace

TransportCheck transport_check(const Quasigroup& q, const Isotopy& t) {
  if (t.degree() != q.order())
    throw DegreeMismatch(q.order(), t.degree());
  unsigned n = q.order();
  Quasigroup iso = apply_isotopy(q, t);
  TransportCheck tc;

  bool a_id = t.alpha.is_identity(), b_id = t.beta.is_identity(), c_id = t.gamma.is_identity();

  if (a_id && b_id && c_id) {
    tc.lemma = "trivial";
    return tc;
  }

  if (!a_id && b_id && c_id) {
    tc.lemma = "one-component alpha";
    for (unsigned x = 0; x < n; ++x) {
      check_eq(tc, "L", iso.left_translation(x), q.left_translation(t.alpha[x]));
      check_eq(tc, "R", iso.right_translation(x), compose(q.right_translation(x), t.alpha));
      check_eq(tc, "P", iso.middle_translation(x), compose(q.middle_translation(x), t.alpha));
    }
    return tc;
  }
  if (a_id && !b_id && c_id) {
    tc.lemma = "one-component beta";
    for (unsigned x = 0; x < n; ++x) {
      check_eq(tc, "L", iso.left_translation(x), compose(q.left_translation(x), t.beta));
      check_eq(tc, "R", iso.right_translation(x), q.right_translation(t.beta[x]));
      check_eq(tc, "P", iso.middle_translation(x).inverse(),
               compose(q.middle_translation(x).inverse(), t.beta));
    }
    return tc;
  }
  if (a_id && b_id && !c_id) {
    tc.lemma = "one-component gamma";
    Perm gi = t.gamma.inverse();
    for (unsigned x = 0; x < n; ++x) {
      check_eq(tc, "L", iso.left_translation(x), compose(gi, q.left_translation(x)));
      check_eq(tc, "R", iso.right_translation(x), compose(gi, q.right_translation(x)));
      check_eq(tc, "P", iso.middle_translation(x), q.middle_translation(t.gamma[x]));
    }
    return tc;
  }

  // LP shapes (loop translation transport).
  if (c_id) {
    auto a = match_index(n, t.alpha, [&](unsigned i) { return q.right_translation(i).inverse(); });
    auto b = match_index(n, t.beta, [&](unsigned i) { return q.left_translation(i).inverse(); });
    if (a && b) {
      tc.lemma = "LP loop";
      const Perm& Ra_inv = t.alpha;
      const Perm& Lb_inv = t.beta;
      Perm Lb = q.left_translation(*b);
      for (unsigned z = 0; z < n; ++z) {
        check_eq(tc, "L", iso.left_translation(z),
                 compose(q.left_translation(Ra_inv[z]), Lb_inv));
        check_eq(tc, "R", iso.right_translation(z),
                 compose(q.right_translation(Lb_inv[z]), Ra_inv));
        check_eq(tc, "P", iso.middle_translation(z),
                 compose(Lb, compose(q.middle_translation(z), Ra_inv)));
      }
      return tc;
    }
  }
  if (a_id) {
    auto a = match_index(n, t.beta, [&](unsigned i) { return q.middle_translation(i); });
    auto b = match_index(n, t.gamma, [&](unsigned i) { return q.right_translation(i); });
    if (a && b) {
      tc.lemma = "LP unipotent right";
      Perm Rb_inv = t.gamma.inverse(), Pa = t.beta, Pa_inv = t.beta.inverse();
      Perm Rb = t.gamma;
      for (unsigned z = 0; z < n; ++z) {
        check_eq(tc, "L", iso.left_translation(z),
                 compose(Rb_inv, compose(q.left_translation(z), Pa)));
        check_eq(tc, "R", iso.right_translation(z),
                 compose(Rb_inv, q.right_translation(Pa[z])));
        check_eq(tc, "P", iso.middle_translation(z),
                 compose(Pa_inv, q.middle_translation(Rb[z])));
      }
      return tc;
    }
  }
  if (b_id) {
    auto a = match_index(n, t.alpha, [&](unsigned i) { return q.middle_translation(i).inverse(); });
    auto b = match_index(n, t.gamma, [&](unsigned i) { return q.left_translation(i); });
    if (a && b) {
      tc.lemma = "LP unipotent left";
      Perm Lb_inv = t.gamma.inverse(), Pa_inv = t.alpha;
      for (unsigned z = 0; z < n; ++z) {
        check_eq(tc, "L", iso.left_translation(z),
                 compose(Lb_inv, q.left_translation(Pa_inv[z])));
        check_eq(tc, "R", iso.right_translation(z),
                 compose(Lb_inv, compose(q.right_translation(z), Pa_inv)));
        check_eq(tc, "P", iso.middle_translation(z),
                 compose(q.middle_translation(q.at(*b, z)), Pa_inv));
      }
      return tc;
    }
  }

  throw UnsupportedShape("isotopy matches neither a one-component nor an LP shape");
}

}  // namespace qg
