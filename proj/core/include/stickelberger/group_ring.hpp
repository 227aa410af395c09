// Dense elements of the rational group ring Q[G_m], G_m = (Z/mZ)^*, with the
// Galois action, conjugation sum, and the restriction / corestriction maps
// between group rings of nested moduli.
#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace stk {

// Per-modulus unit tables, cached and immutable (safe to share across
// threads).  For m == 1 the unit set is {0}: gcd(0, 1) == 1, and the single
// basis element is the empty product, so Q[G_1] == Q.
struct UnitTable {
  long m = 0;
  std::vector<long> units;     // ascending residues coprime to m
  std::vector<int> index_of;   // residue -> position in `units`, -1 otherwise
  std::vector<int> inverse;    // position of units[i]^{-1}

  long phi() const { return static_cast<long>(units.size()); }
  int position(long residue) const;  // reduces mod m; -1 if not a unit
};

std::shared_ptr<const UnitTable> unit_table(long m);

// Element of Q[G_m], coefficients indexed by the units in ascending order.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(long m);  // zero element

  long modulus() const { return table_ ? table_->m : 0; }
  long phi() const { return table_ ? table_->phi() : 0; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  // Coefficient of sigma_s; s is reduced mod m and must be a unit.
  const mpq_class& coeff(long s) const;
  void set_coeff(long s, const mpq_class& value);

  // The coefficient sum; for modulus 1 this is the whole element.
  mpq_class coefficient_sum() const;
  // Largest denominator across coefficients (1 for integral elements).
  mpz_class common_denominator() const;
  bool is_zero() const;

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement& operator*=(const mpq_class& scalar);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(GroupRingElement a, const mpq_class& s) { return a *= s; }
  friend GroupRingElement operator*(const mpq_class& s, GroupRingElement a) { return a *= s; }
  GroupRingElement operator-() const;
  bool operator==(const GroupRingElement& rhs) const;
  bool operator!=(const GroupRingElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;  // e.g. "(4/5)s1 + (2/5)s2"

 private:
  std::shared_ptr<const UnitTable> table_;
  std::vector<mpq_class> coeffs_;
  friend GroupRingElement sigma_apply(long s, const GroupRingElement& x);
};

GroupRingElement zero_element(long m);
GroupRingElement norm_element(long m);          // N_m = sum over all sigma
GroupRingElement half_norm_element(long m);     // N_m / 2

// Left multiplication by sigma_s (s a unit mod m): permutes coefficients.
GroupRingElement sigma_apply(long s, const GroupRingElement& x);

// x + sigma_{-1} x.
GroupRingElement conj_sum(const GroupRingElement& x);

// Ring homomorphism Q[G_m] -> Q[G_d] for d | m, sigma_s -> sigma_{s mod d}.
// For d == 1 the image is the coefficient sum sitting in Q[G_1] == Q.
GroupRingElement restriction(const GroupRingElement& x, long d);

// Additive map Q[G_d] -> Q[G_m] for d | m: sigma_tau -> sum of the units of
// Z/mZ lying over tau.  Satisfies restriction(corestriction(x)) ==
// (phi(m)/phi(d)) * x.
GroupRingElement corestriction(const GroupRingElement& x, long m);

}  // namespace stk
