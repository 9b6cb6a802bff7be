#include "qg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qg/error.hpp"

namespace qg {

Perm::Perm(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error("image list is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(unsigned degree, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      unsigned from = cyc[i];
      unsigned to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree)
        throw Error("cycle entry out of range");
      if (img[from] != from)
        throw Error("cycles are not disjoint");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse(unsigned degree, std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  std::size_t first = 0;
  while (first < text.size() && is_space(text[first])) ++first;
  if (first == text.size())
    throw ParseError("empty permutation");

  if (text[first] == '(') {
    std::vector<std::vector<unsigned>> cycles;
    std::size_t i = first;
    while (i < text.size()) {
      if (is_space(text[i])) { ++i; continue; }
      if (text[i] != '(')
        throw ParseError("expected '(' in cycle notation");
      ++i;
      std::vector<unsigned> cyc;
      while (i < text.size() && text[i] != ')') {
        if (is_space(text[i]) || text[i] == ',') { ++i; continue; }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("unexpected character in cycle");
        unsigned v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<unsigned>(text[i] - '0');
          ++i;
        }
        cyc.push_back(v);
      }
      if (i == text.size())
        throw ParseError("unterminated cycle");
      ++i;  // ')'
      if (!cyc.empty())
        cycles.push_back(std::move(cyc));
    }
    return from_cycles(degree, cycles);
  }

  std::vector<unsigned> img;
  std::string token;
  std::string buf(text);
  std::replace(buf.begin(), buf.end(), ',', ' ');
  std::istringstream in(buf);
  long v;
  while (in >> v) {
    if (v < 0)
      throw ParseError("negative entry in image list");
    img.push_back(static_cast<unsigned>(v));
  }
  if (!in.eof())
    throw ParseError("unexpected character in image list");
  if (img.size() != degree)
    throw ParseError("image list has wrong length");
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned x = 0; x < images_.size(); ++x)
    inv[images_[x]] = x;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (unsigned x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Perm::fixed_point_free() const {
  if (images_.empty()) return false;
  for (unsigned x = 0; x < images_.size(); ++x)
    if (images_[x] == x) return false;
  return true;
}

unsigned Perm::order() const {
  unsigned ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    unsigned len = 0, y = x;
    do {
      seen[y] = true;
      y = images_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) {
      seen[x] = true;
      continue;
    }
    std::vector<unsigned> cyc;
    unsigned y = x;
    do {
      seen[y] = true;
      cyc.push_back(y);
      y = images_[y];
    } while (y != x);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::to_string() const {
  std::string s;
  for (unsigned x = 0; x < images_.size(); ++x) {
    if (x) s += ',';
    s += std::to_string(images_[x]);
  }
  return s;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& cyc : cs) {
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cyc[i]);
    }
    s += ')';
  }
  return s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch(p.degree(), q.degree());
  std::vector<unsigned> img(p.degree());
  for (unsigned x = 0; x < p.degree(); ++x)
    img[x] = p[q[x]];
  return Perm(std::move(img));
}

Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

Perm power(const Perm& p, long k) {
  Perm base = k < 0 ? p.inverse() : p;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Perm acc = Perm::identity(p.degree());
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_string(); }

}  // namespace qg
