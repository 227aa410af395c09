#include "stickelberger/jacobi.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stickelberger/exact_linalg.hpp"

namespace stk {

namespace {

void decode(long pack, long ell, long f, long* out) {
  for (long i = 0; i < f; ++i) {
    out[i] = pack % ell;
    pack /= ell;
  }
}

long encode(const long* d, long ell, long f) {
  long pack = 0;
  for (long i = f; i-- > 0;) pack = pack * ell + d[i];
  return pack;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long pack_add(long a, long b, long ell, long f) {
  long da[64], db[64];
  decode(a, ell, f, da);
  decode(b, ell, f, db);
  for (long i = 0; i < f; ++i) da[i] = (da[i] + db[i]) % ell;
  return encode(da, ell, f);
}

long pack_sub(long a, long b, long ell, long f) {
  long da[64], db[64];
  decode(a, ell, f, da);
  decode(b, ell, f, db);
  for (long i = 0; i < f; ++i) da[i] = (da[i] - db[i] + ell) % ell;
  return encode(da, ell, f);
}

}  // namespace

long ResidueField::mul(long a, long b) const {
  if (f == 1) return mul_mod(a, b, ell);
  long da[64], db[64];
  decode(a, ell, f, da);
  decode(b, ell, f, db);
  long buf[128] = {0};
  for (long i = 0; i < f; ++i) {
    if (da[i] == 0) continue;
    for (long j = 0; j < f; ++j) buf[i + j] += da[i] * db[j];
  }
  for (long k = 2 * f - 2; k >= f; --k) {
    long carry = buf[k] % ell;
    if (carry == 0) continue;
    const std::vector<long>& row = red_rows_[k - f];
    for (long i = 0; i < f; ++i) buf[i] += carry * row[i];
  }
  long out[64];
  for (long i = 0; i < f; ++i) out[i] = buf[i] % ell;
  return encode(out, ell, f);
}

long ResidueField::mul_by_gamma(long a) const {
  if (f == 1) return mul_mod(a, gamma_pack, ell);
  long d[64] = {0};
  decode(a, ell, f, d);
  long carry = d[f - 1];
  for (long i = f - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  if (carry != 0) {
    const std::vector<long>& row = red_rows_[0];
    for (long i = 0; i < f; ++i) d[i] = (d[i] + carry * row[i]) % ell;
  }
  return encode(d, ell, f);
}

long ResidueField::pow_pack(long a, long e) const {
  long base = a, acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long ResidueField::eval(const std::vector<mpz_class>& coeffs,
                        long point) const {
  long val = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    val = mul(val, point);
    long c = static_cast<long>(
        mpz_fdiv_ui(coeffs[i].get_mpz_t(), static_cast<unsigned long>(ell)));
    long d[64];
    decode(val, ell, f, d);
    d[0] = (d[0] + c) % ell;
    val = encode(d, ell, f);
  }
  return val;
}

long ResidueField::chi_exponent(long pack) const {
  if (pack <= 0 || pack >= q)
    throw std::out_of_range("chi_exponent: not a nonzero field element");
  return static_cast<long>(chi_k[pack]);
}

ResidueField residue_field(long m, long ell, long max_q) {
  if (m < 2) throw std::invalid_argument("residue_field: m < 2");
  if (!is_prime_small(ell))
    throw std::invalid_argument("residue_field: ell is not prime");
  if (m % ell == 0)
    throw std::invalid_argument("residue_field: ell divides m (ramified)");
  ResidueField F;
  F.m = m;
  F.ell = ell;
  F.f = multiplicative_order(ell, m);
  long q = 1;
  for (long i = 0; i < F.f; ++i) {
    q *= ell;
    if (q > max_q)
      throw std::domain_error("residue_field: ell^f exceeds the size cap");
  }
  F.q = q;
  const long f = F.f;

  // Arithmetic modulus h: smallest (by packed coefficients) monic degree-f
  // polynomial whose root y generates F^*; the order certificate also proves
  // irreducibility.
  std::vector<long> qm1_primes = prime_factors(q - 1);
  if (f == 1) {
    for (long g = 2; g < ell; ++g) {
      bool ok = true;
      for (long r : qm1_primes)
        if (pow_mod(g, (ell - 1) / r, ell) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        F.gamma_pack = g;
        F.field_poly = {mod_reduce(-g, ell), 1};
        break;
      }
    }
    if (F.gamma_pack == 0)
      throw std::logic_error("residue_field: no primitive root found");
  } else {
    for (long cpack = 1; cpack < q; ++cpack) {
      if (cpack % ell == 0) continue;  // constant term must be nonzero
      long c[64];
      decode(cpack, ell, f, c);
      F.field_poly.assign(c, c + f);
      F.field_poly.push_back(1);
      F.red_rows_.assign(1, std::vector<long>(f));
      for (long i = 0; i < f; ++i) F.red_rows_[0][i] = (ell - c[i]) % ell;
      for (long k = 1; k <= f - 2; ++k) {
        std::vector<long> next(f, 0);
        const std::vector<long>& prev = F.red_rows_.back();
        long carry = prev[f - 1];
        for (long i = 1; i < f; ++i) next[i] = prev[i - 1];
        for (long i = 0; i < f; ++i)
          next[i] = (next[i] + carry * F.red_rows_[0][i]) % ell;
        F.red_rows_.push_back(std::move(next));
      }
      F.gamma_pack = ell;  // the class of y
      bool ok = F.pow_pack(F.gamma_pack, q - 1) == 1;
      for (std::size_t ri = 0; ok && ri < qm1_primes.size(); ++ri)
        if (F.pow_pack(F.gamma_pack, (q - 1) / qm1_primes[ri]) == 1) ok = false;
      if (ok) break;
      F.red_rows_.clear();
      F.field_poly.clear();
      F.gamma_pack = 0;
    }
    if (F.gamma_pack == 0)
      throw std::logic_error("residue_field: no primitive polynomial found");
  }

  // Roots of Phi_m live in F: zeta0 generates the group of m-th roots.
  const long zeta0 = F.pow_pack(F.gamma_pack, (q - 1) / m);

  // One candidate factor of Phi_m mod ell per Frobenius orbit {j ell^i}.
  struct Candidate {
    std::vector<long> g;
    long j0 = 0;
  };
  std::vector<Candidate> cands;
  std::vector<char> seen(m, 0);
  for (long j = 1; j < m; ++j) {
    if (gcd_ll(j, m) != 1 || seen[j]) continue;
    Candidate cand;
    cand.j0 = j;
    std::vector<long> poly = {1};  // monic product of (x - root)
    long e = j;
    for (long i = 0; i < f; ++i) {
      seen[e] = 1;
      long root = F.pow_pack(zeta0, e);
      std::vector<long> next(poly.size() + 1, 0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = pack_add(next[k + 1], poly[k], ell, f);
        next[k] = pack_sub(next[k], F.mul(root, poly[k]), ell, f);
      }
      poly = std::move(next);
      e = mod_reduce(e * ell, m);
    }
    if (e != cand.j0)
      throw std::logic_error("residue_field: Frobenius orbit did not close");
    cand.g.resize(poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (poly[k] >= ell)
        throw std::logic_error("residue_field: factor not over the prime field");
      cand.g[k] = poly[k];
    }
    cands.push_back(std::move(cand));
  }
  if (cands.size() != static_cast<std::size_t>(euler_phi(m) / f))
    throw std::logic_error("residue_field: wrong number of factors");

  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (f == 1) {
      long ri = (ell - cands[i].g[0]) % ell;
      long rb = (ell - cands[best].g[0]) % ell;
      if (ri < rb) best = i;
    } else if (cands[i].g < cands[best].g) {
      best = i;
    }
  }
  F.defining_poly = cands[best].g;
  F.eta_exponent = cands[best].j0;
  F.eta_pack = F.pow_pack(zeta0, F.eta_exponent);
  const long s = inv_mod(F.eta_exponent, m);

  // chi_k by walking u = gamma^d once around F^*.
  F.chi_k.assign(q, static_cast<std::uint32_t>(m));
  long u = 1;
  for (long d = 0; d < q - 1; ++d) {
    F.chi_k[u] = static_cast<std::uint32_t>(mul_mod(mod_reduce(d, m), s, m));
    u = F.mul_by_gamma(u);
  }
  if (u != 1)
    throw std::logic_error("residue_field: generator order is not q - 1");

  // Histogram of (k(w), k(1-w)) over w outside {0, 1}.
  F.pair_counts.assign(m, std::vector<long>(m, 0));
  long dw[64], d1[64];
  for (long wp = 2; wp < q; ++wp) {
    decode(wp, ell, f, dw);
    d1[0] = (1 - dw[0] + ell) % ell;
    for (long i = 1; i < f; ++i) d1[i] = (ell - dw[i]) % ell;
    long op = encode(d1, ell, f);
    F.pair_counts[F.chi_k[wp]][F.chi_k[op]] += 1;
  }
  return F;
}

CyclotomicInteger jacobi_sum(const ResidueField& F, long b, long c) {
  const long m = F.m;
  b = mod_reduce(b, m);
  c = mod_reduce(c, m);
  if (b == 0 || c == 0 || (b + c) % m == 0)
    throw std::invalid_argument("jacobi_sum: degenerate character pair");
  std::vector<mpz_class> sums(m, mpz_class(0));
  for (long k1 = 0; k1 < m; ++k1)
    for (long k2 = 0; k2 < m; ++k2) {
      long cnt = F.pair_counts[k1][k2];
      if (cnt != 0) sums[(b * k1 + c * k2) % m] -= cnt;
    }
  std::vector<std::pair<mpz_class, long>> terms;
  for (long e = 0; e < m; ++e)
    if (sums[e] != 0) terms.emplace_back(sums[e], e);
  return CyclotomicInteger::from_exponents(cyclotomic_context(m), terms);
}

JacobiGenerator generator_for_alpha(const ResidueField& F, long b) {
  Conductor c = parse_conductor(F.m);
  AlphaDecomposition d = alpha_decomposition(c, b);
  JacobiGenerator out;
  out.b = b;
  out.kind = d.kind;
  if (d.kind == 3) {
    out.arg1 = d.x1;
    out.arg2 = d.x2;
  } else {
    out.arg1 = d.x2;
    out.arg2 = d.x3;
  }
  out.value = jacobi_sum(F, out.arg1, out.arg2);
  return out;
}

namespace {

// Row-HNF basis of the Z-lattice spanned by x * zeta^i for the given x.
IntMatrix principal_lattice(const CyclotomicInteger& x) {
  const long phi = x.context()->phi();
  IntMatrix rows(phi, phi);
  CyclotomicInteger cur = x;
  CyclotomicInteger zeta = CyclotomicInteger::from_exponents(
      x.context(), {{mpz_class(1), 1}});
  for (long i = 0; i < phi; ++i) {
    for (long j = 0; j < phi; ++j) rows.at(i, j) = cur.coeff(j);
    if (i + 1 < phi) cur = cur * zeta;
  }
  IntMatrix h = hnf(rows);
  if (h.rows != phi)
    throw std::logic_error("principal ideal lattice is not full rank");
  return h;
}

// lattice * (ell, g2) for a full-rank row-HNF lattice.
IntMatrix ideal_mul_two_gen(const IntMatrix& lat, long ell,
                            const CyclotomicInteger& g2) {
  const long phi = lat.cols;
  IntMatrix rows(2 * phi, phi);
  for (long i = 0; i < phi; ++i) {
    std::vector<std::pair<mpz_class, long>> terms;
    for (long j = 0; j < phi; ++j) {
      rows.at(i, j) = lat.at(i, j) * ell;
      if (lat.at(i, j) != 0) terms.emplace_back(lat.at(i, j), j);
    }
    CyclotomicInteger ri =
        CyclotomicInteger::from_exponents(g2.context(), terms);
    CyclotomicInteger prod = ri * g2;
    for (long j = 0; j < phi; ++j) rows.at(phi + i, j) = prod.coeff(j);
  }
  IntMatrix h = hnf(rows);
  if (h.rows != phi)
    throw std::logic_error("ideal product lattice is not full rank");
  return h;
}

}  // namespace

JacobiVerification verify_generator(const ResidueField& F, long b) {
  Conductor c = parse_conductor(F.m);
  ShortElement a = alpha(c, b);
  JacobiGenerator gen = generator_for_alpha(F, b);
  auto ctx = gen.value.context();

  JacobiVerification v;
  for (long sidx = 1; sidx < F.m; ++sidx) {
    if (gcd_ll(sidx, F.m) != 1) continue;
    long point = F.pow_pack(F.eta_pack, inv_mod(sidx, F.m));
    if (F.eval(gen.value.coeffs(), point) == 0) v.zero_set.push_back(sidx);
  }
  // J vanishes at sigma_s^{-1}(L) exactly when the <ell>-orbit of s meets
  // the support (valuations add up within a Frobenius orbit).
  for (long sidx = 1; sidx < F.m; ++sidx) {
    if (gcd_ll(sidx, F.m) != 1) continue;
    long e = sidx;
    bool hit = false;
    do {
      hit = std::binary_search(a.support.begin(), a.support.end(), e);
      e = mod_reduce(e * F.ell, F.m);
    } while (!hit && e != sidx);
    if (hit) v.predicted_zero_set.push_back(sidx);
  }
  v.zero_set_ok = (v.zero_set == v.predicted_zero_set);

  v.norm_abs = abs(gen.value.norm());
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(F.ell),
                static_cast<unsigned long>(F.f * (c.phi / 2)));
  v.norm_ok = (v.norm_abs == expected);

  // Exact ideal equality (J) = L^alpha = prod_{s in supp} sigma_s(L) with
  // L = (ell, g(zeta)), so sigma_s(L) = (ell, g-hat(zeta^s)) and also
  // sigma_s(L) = ker(zeta -> eta^{s^{-1}}), matching the zero set above.
  IntMatrix lat = IntMatrix::identity(ctx->phi());
  for (long s : a.support) {
    std::vector<std::pair<mpz_class, long>> terms;
    for (std::size_t k = 0; k < F.defining_poly.size(); ++k)
      if (F.defining_poly[k] != 0)
        terms.emplace_back(mpz_class(F.defining_poly[k]),
                           mod_reduce(static_cast<long>(k) * s, F.m));
    CyclotomicInteger gs = CyclotomicInteger::from_exponents(ctx, terms);
    lat = ideal_mul_two_gen(lat, F.ell, gs);
  }
  v.ideal_ok = (principal_lattice(gen.value) == lat);
  return v;
}

namespace {

// Cyclic convolution in Z[x]/(x^n - 1).
std::vector<mpz_class> cyclic_mul(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b) {
  const std::size_t n = a.size();
  std::vector<mpz_class> out(n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) out[(i + j) % n] += a[i] * b[j];
  }
  return out;
}

bool zero_mod_cyclotomic(std::vector<mpz_class> v, long n) {
  std::vector<mpz_class> phi = cyclotomic_polynomial(n);
  // Long division by the monic phi; only the remainder matters.
  for (std::size_t k = v.size(); k-- >= phi.size();) {
    mpz_class lead = v[k];
    if (lead == 0) continue;
    for (std::size_t j = 0; j < phi.size(); ++j)
      v[k - (phi.size() - 1) + j] -= lead * phi[j];
    if (v[k] != 0)
      throw std::logic_error("division by cyclotomic polynomial failed");
  }
  for (const mpz_class& x : v)
    if (x != 0) return false;
  return true;
}

void require_small(const ResidueField& F) {
  if (F.m * F.ell > 200)
    throw std::domain_error("gauss sums are only tabulated for m*ell <= 200");
}

}  // namespace

std::vector<mpz_class> gauss_sum_vector(const ResidueField& F, long b) {
  require_small(F);
  const long m = F.m, ell = F.ell, f = F.f, n = m * ell;
  b = mod_reduce(b, m);
  if (b == 0) throw std::invalid_argument("gauss_sum_vector: trivial character");

  // Traces of the basis powers y^j, by linearity.
  std::vector<long> tr(f, 0);
  for (long j = 0; j < f; ++j) {
    long basis = 1;
    for (long i = 0; i < j; ++i) basis *= ell;  // pack of y^j
    long acc = 0;
    long e = 1;
    for (long i = 0; i < f; ++i) {
      acc = pack_add(acc, F.pow_pack(basis, e), ell, f);
      e *= ell;
    }
    long d[64];
    decode(acc, ell, f, d);
    for (long i = 1; i < f; ++i)
      if (d[i] != 0) throw std::logic_error("trace left the prime field");
    tr[j] = d[0];
  }

  std::vector<mpz_class> vec(n, mpz_class(0));
  long u = 1;
  long du[64];
  for (long d = 0; d < F.q - 1; ++d) {
    long k = static_cast<long>(F.chi_k[u]);
    decode(u, ell, f, du);
    long t = 0;
    for (long j = 0; j < f; ++j) t = (t + du[j] * tr[j]) % ell;
    vec[(ell * ((b * k) % m) + m * t) % n] += 1;
    u = F.mul_by_gamma(u);
  }
  return vec;
}

bool gauss_jacobi_identity(const ResidueField& F, long b, long c) {
  require_small(F);
  const long m = F.m, n = F.m * F.ell;
  b = mod_reduce(b, m);
  c = mod_reduce(c, m);
  std::vector<mpz_class> g1 = gauss_sum_vector(F, b);
  std::vector<mpz_class> g2 = gauss_sum_vector(F, c);
  std::vector<mpz_class> g3 = gauss_sum_vector(F, (b + c) % m);
  CyclotomicInteger J = jacobi_sum(F, b, c);

  std::vector<mpz_class> jv(n, mpz_class(0));
  const std::vector<mpz_class>& jc = J.coeffs();
  for (std::size_t i = 0; i < jc.size(); ++i) jv[F.ell * i] += jc[i];

  std::vector<mpz_class> lhs = cyclic_mul(g1, g2);
  std::vector<mpz_class> rhs = cyclic_mul(jv, g3);
  for (long i = 0; i < n; ++i) lhs[i] += rhs[i];
  return zero_mod_cyclotomic(std::move(lhs), n);
}

bool gauss_norm_identity(const ResidueField& F, long b) {
  require_small(F);
  const long m = F.m, n = F.m * F.ell;
  b = mod_reduce(b, m);
  if (b == 0) throw std::invalid_argument("gauss_norm_identity: trivial character");
  std::vector<mpz_class> g1 = gauss_sum_vector(F, b);
  std::vector<mpz_class> g2 = gauss_sum_vector(F, m - b);
  std::vector<mpz_class> lhs = cyclic_mul(g1, g2);
  long k_minus1 = static_cast<long>(F.chi_k[F.ell - 1]);  // -1 is the constant ell-1
  lhs[(F.ell * ((b * k_minus1) % m)) % n] -= F.q;
  return zero_mod_cyclotomic(std::move(lhs), n);
}

SmallPrimeSelection small_unramified_primes(long m, std::size_t count,
                                            long ell_bound, long max_q) {
  SmallPrimeSelection sel;
  for (long ell = 2; ell < ell_bound && sel.chosen.size() < count; ++ell) {
    if (!is_prime_small(ell) || m % ell == 0) continue;
    long f = multiplicative_order(ell, m);
    long q = 1;
    bool fits = true;
    for (long i = 0; i < f; ++i) {
      q *= ell;
      if (q > max_q) {
        fits = false;
        break;
      }
    }
    if (fits)
      sel.chosen.push_back(ell);
    else
      sel.skipped.push_back(ell);
  }
  return sel;
}

}  // namespace stk
