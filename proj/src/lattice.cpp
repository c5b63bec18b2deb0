#include "rcb/lattice.hpp"

#include <algorithm>
#include <map>

#include "rcb/error.hpp"

namespace rcb::lattice {

PicVector::PicVector(std::vector<long> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2 || coords_.size() > 9) throw Error("Unsupported", "between 1 and 8 blown-up points");
}

PicVector PicVector::line(std::size_t n) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  return PicVector(std::move(c));
}

PicVector PicVector::exceptional(std::size_t n, std::size_t i) {
  std::vector<long> c(n + 1, 0);
  c.at(i) = 1;
  return PicVector(std::move(c));
}

PicVector PicVector::canonical(std::size_t n) {
  std::vector<long> c(n + 1, 1);
  c[0] = -3;
  return PicVector(std::move(c));
}

namespace {

void check_basis(const PicVector& u, const PicVector& v) {
  if (u.points() != v.points()) throw Error("BasisMismatch", "classes live in different lattices");
}

}  // namespace

PicVector PicVector::operator+(const PicVector& o) const {
  check_basis(*this, o);
  std::vector<long> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return PicVector(std::move(c));
}

PicVector PicVector::operator-() const { return -1 * *this; }

PicVector PicVector::operator-(const PicVector& o) const { return *this + (-o); }

PicVector operator*(long s, const PicVector& v) {
  std::vector<long> c(v.coords_);
  for (auto& x : c) x *= s;
  return PicVector(std::move(c));
}

std::string to_string(const PicVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v.coords()[i]);
  }
  return out + "]";
}

long intersect(const PicVector& u, const PicVector& v) {
  check_basis(u, v);
  long acc = u.coords()[0] * v.coords()[0];
  for (std::size_t i = 1; i < u.coords().size(); ++i) acc -= u.coords()[i] * v.coords()[i];
  return acc;
}

namespace {

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, n)), true);
  if (k > n) return out;
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i + 1);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

std::vector<PicVector> exceptional_classes(std::size_t n) {
  if (n < 1 || n > 7) throw Error("Unsupported", "exceptional classes are listed for 1 <= n <= 7");
  std::vector<PicVector> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(PicVector::exceptional(n, i));
  for (const auto& s : subsets(n, 2)) {
    std::vector<long> c(n + 1, 0);
    c[0] = 1;
    for (auto i : s) c[i] = -1;
    out.emplace_back(std::move(c));
  }
  for (const auto& s : subsets(n, 5)) {
    std::vector<long> c(n + 1, 0);
    c[0] = 2;
    for (auto i : s) c[i] = -1;
    out.emplace_back(std::move(c));
  }
  if (n == 7) {
    for (std::size_t dbl = 1; dbl <= 7; ++dbl) {
      std::vector<long> c(n + 1, -1);
      c[0] = 3;
      c[dbl] = -2;
      out.emplace_back(std::move(c));
    }
  }
  return out;
}

std::string class_name_deg4(const PicVector& v) {
  if (v.points() != 5) throw Error("BasisMismatch", "degree 4 names need five points");
  const auto& c = v.coords();
  if (c[0] == 0) {
    for (std::size_t i = 1; i <= 5; ++i)
      if (v == PicVector::exceptional(5, i)) return "E" + std::to_string(i);
  } else if (c[0] == 1) {
    std::string idx;
    for (std::size_t i = 1; i <= 5; ++i)
      if (c[i] == -1) idx += std::to_string(i);
    if (idx.size() == 2 && intersect(v, v) == -1) return "L" + idx;
  } else if (v == PicVector({2, -1, -1, -1, -1, -1})) {
    return "Gamma";
  }
  throw Error("UnknownClass", "class " + to_string(v) + " has no degree 4 name");
}

PicVector conic_fiber_partner(std::size_t n, const PicVector& f1) {
  if (n != 5 && n != 7) throw Error("Unsupported", "two conic fibrations need five or seven points");
  if (f1.points() != n) throw Error("BasisMismatch", "fibre class has the wrong basis length");
  const PicVector k = PicVector::canonical(n);
  if (intersect(f1, f1) != 0 || intersect(f1, k) != -2) {
    throw Error("NotAFiberClass", "class " + to_string(f1) + " does not satisfy f^2 = 0, f.K = -2");
  }
  const long k2 = intersect(k, k);
  const long c = 4 / k2;
  PicVector f2 = -(c * k) - f1;
  if (intersect(f2, f2) != 0 || intersect(f2, k) != -2) {
    throw Error("NotAFiberClass", "partner " + to_string(f2) + " fails the fibre conditions");
  }
  return f2;
}

PicVector geiser_reflection(const PicVector& d) {
  if (d.points() != 7) throw Error("BasisMismatch", "the reflection acts on the seven-point lattice");
  const PicVector k = PicVector::canonical(7);
  return intersect(d, k) * k - d;
}

PicVector ClassPerm::apply(const PicVector& v) const {
  const auto it = std::find(classes.begin(), classes.end(), v);
  if (it == classes.end()) throw Error("UnknownClass", "class " + to_string(v) + " not in the permuted list");
  return classes[image[static_cast<std::size_t>(it - classes.begin())]];
}

ClassPerm deg4_perm_from_cycles(const std::vector<std::pair<std::string, std::string>>& swaps) {
  ClassPerm p;
  p.classes = exceptional_classes(5);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < p.classes.size(); ++i) index[class_name_deg4(p.classes[i])] = i;
  p.image.resize(p.classes.size());
  for (std::size_t i = 0; i < p.image.size(); ++i) p.image[i] = i;
  auto lookup = [&](const std::string& name) {
    const auto it = index.find(name);
    if (it == index.end()) throw Error("UnknownClass", "no degree 4 class named '" + name + "'");
    return it->second;
  };
  for (const auto& [a, b] : swaps) {
    const std::size_t i = lookup(a), j = lookup(b);
    p.image[i] = j;
    p.image[j] = i;
  }
  return p;
}

ClassPerm deg4_sigma() {
  return deg4_perm_from_cycles({{"E2", "L12"}, {"E3", "L13"}, {"E4", "L14"}, {"E5", "L15"},
                                {"E1", "Gamma"}, {"L23", "L45"}, {"L24", "L35"}, {"L25", "L34"}});
}

ClassPerm deg4_alpha() {
  return deg4_perm_from_cycles({{"L23", "E4"}, {"L24", "E3"}, {"L34", "E2"}, {"L12", "L25"},
                                {"L13", "L35"}, {"L14", "L45"}, {"Gamma", "L15"}, {"E1", "E5"}});
}

bool perm_preserves_form(const ClassPerm& p) {
  const std::size_t n = p.classes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (intersect(p.classes[p.image[i]], p.classes[p.image[j]]) != intersect(p.classes[i], p.classes[j]))
        return false;
  return true;
}

bool perms_commute(const ClassPerm& p, const ClassPerm& q) {
  if (p.classes != q.classes) return false;
  for (std::size_t i = 0; i < p.image.size(); ++i)
    if (p.image[q.image[i]] != q.image[p.image[i]]) return false;
  return true;
}

bool is_involution(const ClassPerm& p) {
  for (std::size_t i = 0; i < p.image.size(); ++i)
    if (p.image[p.image[i]] != i) return false;
  return true;
}

bool is_fixed_point_free(const ClassPerm& p) {
  for (std::size_t i = 0; i < p.image.size(); ++i)
    if (p.image[i] == i) return false;
  return true;
}

FibreCount singular_fibre_count(std::size_t n) {
  if (n < 1 || n > 8) throw Error("Unsupported", "between 1 and 8 blown-up points");
  const long k2 = 9 - static_cast<long>(n);
  const long count = std::max(0L, 8 - k2);
  return {count, "K^2 = 9 - " + std::to_string(n) + " = " + std::to_string(k2) + ", 2r = 8 - K^2 = " +
                     std::to_string(count)};
}

}  // namespace rcb::lattice
