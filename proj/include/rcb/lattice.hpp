#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rcb::lattice {

/// Class d e0 + m1 e1 + ... + mn en in the Picard lattice of the plane
/// blown up in n points, with e0^2 = 1, ei^2 = -1.
class PicVector {
 public:
  explicit PicVector(std::vector<long> coords);
  static PicVector line(std::size_t n);
  static PicVector exceptional(std::size_t n, std::size_t i);
  /// K = -3 e0 + e1 + ... + en
  static PicVector canonical(std::size_t n);

  std::size_t points() const { return coords_.size() - 1; }
  const std::vector<long>& coords() const { return coords_; }
  long degree() const { return coords_[0]; }

  PicVector operator+(const PicVector& o) const;
  PicVector operator-(const PicVector& o) const;
  PicVector operator-() const;
  friend PicVector operator*(long s, const PicVector& v);

  friend bool operator==(const PicVector&, const PicVector&) = default;
  friend auto operator<=>(const PicVector&, const PicVector&) = default;

 private:
  std::vector<long> coords_;
};

std::string to_string(const PicVector& v);

/// Throws BasisMismatch when the point counts differ.
long intersect(const PicVector& u, const PicVector& v);

/// The (-1)-classes: the ei, the lines e0 - ei - ej, the conics through five
/// points and the cubics through seven points double at one of them, in
/// that order. Valid for 1 <= n <= 7.
std::vector<PicVector> exceptional_classes(std::size_t n);

/// Names used for the degree 4 surface: E1..E5, L12..L45, Gamma.
std::string class_name_deg4(const PicVector& v);

/// f2 = -c K - f1 with c = 4 / K^2; only n = 5 (c = 1) and n = 7 (c = 2).
PicVector conic_fiber_partner(std::size_t n, const PicVector& f1);

/// D -> (D.K) K - D on the degree 2 lattice (n = 7).
PicVector geiser_reflection(const PicVector& d);

/// A permutation of an indexed class list: classes[i] -> classes[image[i]].
struct ClassPerm {
  std::vector<PicVector> classes;
  std::vector<std::size_t> image;

  PicVector apply(const PicVector& v) const;
};

/// Builds a permutation of the 16 degree 4 classes from transpositions
/// given by class names.
ClassPerm deg4_perm_from_cycles(const std::vector<std::pair<std::string, std::string>>& swaps);
/// Action of the real structure exchanging the components of the four
/// singular fibres.
ClassPerm deg4_sigma();
/// Action of the automorphism lifted from the quadratic involution
/// (x : y : z) -> (ayz : bxz : cxy).
ClassPerm deg4_alpha();

bool perm_preserves_form(const ClassPerm& p);
bool perms_commute(const ClassPerm& p, const ClassPerm& q);
bool is_involution(const ClassPerm& p);
bool is_fixed_point_free(const ClassPerm& p);

struct FibreCount {
  long count;
  std::string derivation;
};

/// Singular fibres of a minimal conic bundle on the plane blown up in n
/// points: 8 - K^2 = n - 1.
FibreCount singular_fibre_count(std::size_t n);

}  // namespace rcb::lattice
