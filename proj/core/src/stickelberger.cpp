#include "stickelberger/stickelberger.hpp"

#include <algorithm>
#include <stdexcept>

namespace stk {

GroupRingElement theta(long m, long a) {
  if (m < 1) throw std::invalid_argument("theta: modulus must be >= 1");
  GroupRingElement out(m);
  a = mod_reduce(a, m);
  if (a == 0) return out;
  auto tab = unit_table(m);
  for (size_t i = 0; i < tab->units.size(); ++i) {
    long r = mod_reduce(-mul_mod(a, tab->units[i], m), m);
    mpq_class frac(r, m);
    frac.canonicalize();
    out.set_coeff(tab->units[tab->inverse[i]], frac);
  }
  return out;
}

GroupRingElement omega(long m, long a) {
  if (mod_reduce(a, m) == 0) return GroupRingElement(m);
  return theta(m, a) - half_norm_element(m);
}

namespace {

bool in_set_X(const Conductor& c, long a) {
  long g = gcd_ll(a, c.m);
  return gcd_ll(a, c.m / g) == 1;
}

bool in_set_M(const Conductor& c, long a) {
  if (!in_set_X(c, a)) return false;
  long g = gcd_ll(a, c.m);
  // No factor avoiding a may see a == -gcd(a, m).
  for (int i = 0; i < c.t; ++i) {
    long q = c.factors[i];
    if (a % q != 0 && mod_reduce(a, q) == mod_reduce(-g, q)) return false;
  }
  if (c.m % a == 0) {
    int misses = 0;
    for (int i = 0; i < c.t; ++i)
      if (a % c.factors[i] != 0) ++misses;
    return misses % 2 == 1;
  }
  // a does not divide m: fractional-part test at the top disagreeing factor.
  int k = -1;
  for (int i = 0; i < c.t; ++i)
    if (mod_reduce(a, c.factors[i]) != mod_reduce(g, c.factors[i])) k = i;
  // a != g guarantees some factor disagrees (CRT).
  long denom = g * c.factors[k];
  return 2 * (a % denom) < denom;
}

}  // namespace

std::vector<long> index_set(const Conductor& c, IndexSetKind kind) {
  std::vector<long> out;
  switch (kind) {
    case IndexSetKind::X:
      for (long a = 1; a < c.m; ++a)
        if (in_set_X(c, a)) out.push_back(a);
      break;
    case IndexSetKind::M:
      for (long a = 1; a < c.m; ++a)
        if (in_set_M(c, a)) out.push_back(a);
      break;
    case IndexSetKind::MPrime: {
      for (long a = 1; a < c.m; ++a) {
        if (!in_set_M(c, a)) continue;
        bool drop = false;
        for (int i = 0; i < c.t && !drop; ++i)
          if (a % (c.m / c.factors[i]) == 0) drop = true;
        if (!drop) out.push_back(a);
      }
      for (int i = 0; i < c.t; ++i) {
        long q = c.factors[i];
        long phi_q = q - q / c.primes[i];
        for (long b = 1; b <= phi_q / 2; ++b) out.push_back(c.m / q * b);
      }
      std::sort(out.begin(), out.end());
      break;
    }
  }
  return out;
}

FactorSupport factor_support(const Conductor& c, long b) {
  if (b <= 0 || b >= c.m)
    throw std::invalid_argument("factor_support: need 0 < b < m");
  FactorSupport fs;
  fs.b = b;
  for (int i = 0; i < c.t; ++i) {
    if (b % c.factors[i] == 0) {
      fs.J.push_back(i);
      fs.r *= c.factors[i];
    } else {
      fs.Jprime.push_back(i);
    }
  }
  return fs;
}

AlphaDecomposition alpha_decomposition(const Conductor& c, long b) {
  FactorSupport fs = factor_support(c, b);
  AlphaDecomposition d;
  if (fs.Jprime.size() > 1) {
    d.kind = 1;
    long u = c.factors[fs.Jprime.front()];
    long v = c.m / (u * fs.r);
    auto [x, y] = bezout_pair(u, v);
    d.x1 = b;
    d.x2 = mul_mod(mul_mod(b, u, c.m), x, c.m);
    d.x3 = mul_mod(mul_mod(b, v, c.m), y, c.m);
  } else {
    int j = fs.Jprime.front();
    long qj = c.factors[j];
    long cval = b / (c.m / qj);  // r == m/q_j here
    if (cval > 1) {
      d.kind = 2;
      d.x1 = c.m - b;
      d.x2 = b - c.m / qj;
      d.x3 = c.m / qj;
    } else {
      d.kind = 3;
      long phi_q = qj - qj / c.primes[j];
      d.x1 = c.m / qj * (phi_q / 2);
      d.x2 = d.x1;
      d.x3 = c.m / c.primes[j];
    }
  }
  return d;
}

GroupRingElement ShortElement::to_group_ring() const {
  GroupRingElement out(m);
  for (long s : support) out.set_coeff(s, 1);
  return out;
}

ShortElement alpha(const Conductor& c, long b) {
  AlphaDecomposition d = alpha_decomposition(c, b);
  GroupRingElement x = theta(c.m, d.x1) + theta(c.m, d.x2) + theta(c.m, d.x3) -
                       norm_element(c.m);
  ShortElement out;
  out.m = c.m;
  auto tab = unit_table(c.m);
  const auto& coeffs = x.coefficients();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 1)
      out.support.push_back(tab->units[i]);
    else if (coeffs[i] != 0)
      throw std::logic_error("alpha: representative is not short at m=" +
                             std::to_string(c.m) + ", b=" + std::to_string(b));
  }
  return out;
}

std::string to_string(BasisLabel label) {
  switch (label) {
    case BasisLabel::Omega: return "omega";
    case BasisLabel::Theta: return "theta";
    case BasisLabel::AlmostShort: return "almost_short";
    case BasisLabel::AlphaHalf: return "alpha_half";
    case BasisLabel::Short: return "short";
  }
  return "?";
}

NamedBasis basis_for(const Conductor& c, BasisLabel label) {
  NamedBasis basis;
  basis.label = label;
  basis.m = c.m;
  switch (label) {
    case BasisLabel::Omega:
      for (long a : index_set(c, IndexSetKind::M)) {
        basis.elements.push_back(omega(c.m, a));
        basis.tags.push_back(a);
      }
      break;
    case BasisLabel::Theta:
      for (long a : index_set(c, IndexSetKind::MPrime)) {
        basis.elements.push_back(theta(c.m, a));
        basis.tags.push_back(a);
      }
      break;
    case BasisLabel::AlmostShort: {
      std::vector<long> skip;
      for (int i = 0; i < c.t; ++i) skip.push_back(c.m / c.factors[i]);
      for (long b : index_set(c, IndexSetKind::MPrime)) {
        if (std::find(skip.begin(), skip.end(), b) != skip.end()) continue;
        basis.elements.push_back(alpha(c, b).to_group_ring());
        basis.tags.push_back(b);
      }
      for (int i = 0; i < c.t; ++i) {
        basis.elements.push_back(theta(c.m, c.m / c.factors[i]));
        basis.tags.push_back(c.m / c.factors[i]);
      }
      break;
    }
    case BasisLabel::AlphaHalf:
    case BasisLabel::Short:
      for (long b : index_set(c, IndexSetKind::MPrime)) {
        basis.elements.push_back(alpha(c, b).to_group_ring());
        basis.tags.push_back(b);
      }
      break;
  }
  basis.elements.push_back(label == BasisLabel::Short ? norm_element(c.m)
                                                      : half_norm_element(c.m));
  basis.tags.push_back(0);
  return basis;
}

NamedBasis sprime_basis(const Conductor& c, BasisLabel label) {
  if (label != BasisLabel::Omega && label != BasisLabel::Theta &&
      label != BasisLabel::AlmostShort)
    throw std::invalid_argument("sprime_basis: label " + to_string(label) +
                                " is not an augmented-module basis");
  return basis_for(c, label);
}

NamedBasis short_basis(const Conductor& c) { return basis_for(c, BasisLabel::Short); }

RatMatrix basis_matrix(const NamedBasis& basis) {
  long k = static_cast<long>(basis.elements.size());
  long n = k > 0 ? basis.elements.front().phi() : 0;
  RatMatrix out(k, n);
  for (long i = 0; i < k; ++i) {
    const auto& coeffs = basis.elements[i].coefficients();
    for (long j = 0; j < n; ++j) out.at(i, j) = coeffs[j];
  }
  return out;
}

std::vector<mpq_class> expand_in_basis(const GroupRingElement& x, const NamedBasis& basis) {
  if (basis.elements.empty() || x.modulus() != basis.m)
    throw std::invalid_argument("expand_in_basis: modulus mismatch");
  RatMatrix bm = basis_matrix(basis);
  long k = bm.rows, n = bm.cols;

  mpz_class scale = denominator_lcm(bm);
  for (const auto& q : x.coefficients()) {
    mpz_class d = q.get_den(), g;
    mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    scale = scale / g * d;
  }
  IntMatrix bi = scale_to_integer(bm, scale);
  std::vector<mpz_class> xi(n);
  for (long j = 0; j < n; ++j) {
    mpq_class v = x.coefficients()[j] * mpq_class(scale);
    xi[j] = v.get_num();
  }

  // Pivot columns from an HNF of the basis matrix (unimodular row ops keep
  // the row space, pivots give independent columns).
  std::vector<long> cols;
  IntMatrix h = hnf(bi);
  if (h.rows != k) throw std::domain_error("expand_in_basis: basis rows are dependent");
  for (long i = 0; i < h.rows; ++i) {
    long p = 0;
    while (p < h.cols && h.at(i, p) == 0) ++p;
    cols.push_back(p);
  }

  IntMatrix a2t(k, k), rhs(k, 1);
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < k; ++j) a2t.at(i, j) = bi.at(j, cols[i]);
    rhs.at(i, 0) = xi[cols[i]];
  }
  auto [d, y] = solve_scaled(a2t, rhs);  // sum_j y_j/d * basis_j matches x on pivot columns
  for (long j = 0; j < n; ++j) {
    mpz_class acc = 0;
    for (long l = 0; l < k; ++l)
      mpz_addmul(acc.get_mpz_t(), y.at(l, 0).get_mpz_t(), bi.at(l, j).get_mpz_t());
    if (acc != d * xi[j])
      throw std::domain_error("expand_in_basis: element lies outside the basis span");
  }
  std::vector<mpq_class> out(k);
  for (long l = 0; l < k; ++l) {
    out[l] = mpq_class(y.at(l, 0)) / mpq_class(d);
    out[l].canonicalize();
  }
  return out;
}

mpq_class transition_determinant(const NamedBasis& from, const NamedBasis& to) {
  if (from.m != to.m)
    throw std::invalid_argument("transition_determinant: bases live at different conductors");
  return transition_determinant(basis_matrix(from), basis_matrix(to));
}

}  // namespace stk
