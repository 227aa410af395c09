// Stickelberger elements of Q[G_m], the index sets M_m / M'_m, the short
// integral representatives alpha_m(b), and the named generating sets of the
// Stickelberger ideal and its ambient module.
#pragma once

#include <string>
#include <vector>

#include "stickelberger/conductor.hpp"
#include "stickelberger/exact_linalg.hpp"
#include "stickelberger/group_ring.hpp"

namespace stk {

// theta(m, a) = sum over units s mod m of <-a*s/m> sigma_s^{-1}; zero when
// m | a, and theta(m, a) depends only on a mod m.  Defined for any modulus
// m >= 1 (the maps between levels need non-conductor moduli too).
GroupRingElement theta(long m, long a);

// omega(m, a) = theta(m, a) - N_m/2 for m not dividing a, else zero.
GroupRingElement omega(long m, long a);

enum class IndexSetKind { X, M, MPrime };

// The index sets over (0, m): X_m (divisibility-or-coprimality filter), the
// omega-basis index set M_m, and the theta-basis index set M'_m.  Ascending.
std::vector<long> index_set(const Conductor& c, IndexSetKind kind);

// Per-factor divisibility data of 0 < b < m: r = product of the q_i dividing
// b, J / Jprime the (0-based) factor indices with q_i | b resp. q_i not | b.
struct FactorSupport {
  long b = 0;
  long r = 1;
  std::vector<int> J;
  std::vector<int> Jprime;
};
FactorSupport factor_support(const Conductor& c, long b);

// An integral group ring element with {0,1} coefficients.
struct ShortElement {
  long m = 0;
  std::vector<long> support;  // ascending unit residues carrying coefficient 1
  GroupRingElement to_group_ring() const;
  bool operator==(const ShortElement& o) const { return m == o.m && support == o.support; }
};

// The three-term theta decomposition alpha = theta(x1)+theta(x2)+theta(x3)-N,
// chosen by the factor support of b.  kind 1: several q_i do not divide b;
// kind 2: exactly one, with b = (m/q_j) c, c > 1; kind 3: b = m/q_j.
struct AlphaDecomposition {
  int kind = 0;
  long x1 = 0, x2 = 0, x3 = 0;
};
AlphaDecomposition alpha_decomposition(const Conductor& c, long b);

// alpha(c, b) for 0 < b < m: the short representative of theta(m, b) modulo
// the even part; always integral with exactly phi(m)/2 unit coefficients.
ShortElement alpha(const Conductor& c, long b);

// Named generating sets (rows of a basis, trailing norm element last).
enum class BasisLabel { Omega, Theta, AlmostShort, AlphaHalf, Short };
std::string to_string(BasisLabel label);

struct NamedBasis {
  BasisLabel label = BasisLabel::Theta;
  long m = 0;
  std::vector<GroupRingElement> elements;
  std::vector<long> tags;  // generating index per element (0 for norm rows)
};

// The three bases of the augmented Stickelberger module: Omega
// ({omega(a) : a in M} + N/2), Theta ({theta(a) : a in M'} + N/2) and
// AlmostShort ({alpha(b) : b in M' less the m/q_i} + {theta(m/q_i)} + N/2).
NamedBasis sprime_basis(const Conductor& c, BasisLabel label);

// {alpha(a) : a in M'} + N: a basis of the Stickelberger ideal itself.
NamedBasis short_basis(const Conductor& c);

// Dispatcher over all five labels (AlphaHalf = {alpha(a) : a in M'} + N/2).
NamedBasis basis_for(const Conductor& c, BasisLabel label);

// Rows = coefficient vectors over the units in ascending order.
RatMatrix basis_matrix(const NamedBasis& basis);

// Exact coordinates of x in the given basis; throws std::domain_error if x
// lies outside the Q-span.
std::vector<mpq_class> expand_in_basis(const GroupRingElement& x, const NamedBasis& basis);

// det T with to == T * from (see exact_linalg overload); signed.
mpq_class transition_determinant(const NamedBasis& from, const NamedBasis& to);

}  // namespace stk
