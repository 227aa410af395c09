#include "stickelberger/dirichlet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace stk {

namespace {

long smallest_prime_factor(long q) {
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return d;
  return q;
}

// Prime powers of m, ascending by prime (m >= 1, 2 || m allowed here).
std::vector<long> prime_power_split(long m) {
  std::vector<long> out;
  long rest = m;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    long q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    out.push_back(q);
  }
  if (rest > 1) out.push_back(rest);
  std::sort(out.begin(), out.end(), [](long x, long y) {
    return smallest_prime_factor(x) < smallest_prime_factor(y);
  });
  return out;
}

long crt_combine(const std::vector<long>& residues,
                 const std::vector<long>& moduli) {
  long u = 0, n = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    // u' = u (mod n), u' = residues[i] (mod moduli[i]).
    long diff = mod_reduce(residues[i] - u, moduli[i]);
    long step = mul_mod(diff, inv_mod(n, moduli[i]), moduli[i]);
    u += n * step;
    n *= moduli[i];
  }
  return mod_reduce(u, n);
}

long primitive_root(long q) {
  const long phi = euler_phi(q);
  for (long g = 2; g < q; ++g) {
    if (gcd_ll(g, q) != 1) continue;
    if (multiplicative_order(g, q) == phi) return g;
  }
  throw std::logic_error("no primitive root found");
}

std::map<long, std::shared_ptr<const UnitGroupStructure>> g_group_cache;
std::mutex g_group_mutex;

std::shared_ptr<const UnitGroupStructure> build_unit_group(long m) {
  auto G = std::make_shared<UnitGroupStructure>();
  G->m = m;
  G->prime_powers = prime_power_split(m);

  for (std::size_t qi = 0; qi < G->prime_powers.size(); ++qi) {
    const long q = G->prime_powers[qi];
    const long p = smallest_prime_factor(q);
    std::vector<long> local_gens, local_orders;
    if (p != 2) {
      local_gens.push_back(primitive_root(q));
      local_orders.push_back(euler_phi(q));
    } else if (q == 4) {
      local_gens.push_back(3);
      local_orders.push_back(2);
    } else if (q >= 8) {
      local_gens.push_back(q - 1);  // -1
      local_orders.push_back(2);
      local_gens.push_back(5);
      local_orders.push_back(q / 4);
    }
    // q == 2 contributes nothing.
    for (std::size_t k = 0; k < local_gens.size(); ++k) {
      std::vector<long> residues, moduli;
      for (long qq : G->prime_powers) {
        residues.push_back(qq == q ? mod_reduce(local_gens[k], qq) : 1);
        moduli.push_back(qq);
      }
      G->gens.push_back(crt_combine(residues, moduli));
      G->orders.push_back(local_orders[k]);
      G->factor_q.push_back(qi);
    }
  }

  G->lambda = 1;
  for (long d : G->orders) G->lambda = std::lcm(G->lambda, d);

  G->dlog_pack.assign(std::max<long>(m, 1), -1);
  std::vector<std::pair<long, long>> cur = {{mod_reduce(1, m), 0}};
  long stride = 1;
  for (std::size_t i = 0; i < G->gens.size(); ++i) {
    std::vector<std::pair<long, long>> next;
    next.reserve(cur.size() * G->orders[i]);
    long gp = mod_reduce(1, m);
    for (long x = 0; x < G->orders[i]; ++x) {
      for (const auto& [u, pk] : cur)
        next.emplace_back(mul_mod(u, gp, m), pk + x * stride);
      gp = mul_mod(gp, G->gens[i], m);
    }
    stride *= G->orders[i];
    cur = std::move(next);
  }
  for (const auto& [u, pk] : cur) {
    if (G->dlog_pack[u] != -1)
      throw std::logic_error("unit group generators are not independent");
    G->dlog_pack[u] = pk;
  }
  return G;
}

}  // namespace

bool UnitGroupStructure::is_unit(long u) const {
  u = mod_reduce(u, m);
  return dlog_pack[u] != -1;
}

std::vector<long> UnitGroupStructure::exps_of(long u) const {
  u = mod_reduce(u, m);
  long pk = dlog_pack[u];
  if (pk == -1) throw std::invalid_argument("exps_of: not a unit");
  std::vector<long> x(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    x[i] = pk % orders[i];
    pk /= orders[i];
  }
  return x;
}

std::shared_ptr<const UnitGroupStructure> unit_group(long m) {
  if (m < 1) throw std::invalid_argument("unit_group: modulus < 1");
  std::lock_guard<std::mutex> lock(g_group_mutex);
  auto it = g_group_cache.find(m);
  if (it != g_group_cache.end()) return it->second;
  auto G = build_unit_group(m);
  g_group_cache.emplace(m, G);
  return G;
}

long DirichletCharacter::value_exponent(long a) const {
  std::vector<long> x = G->exps_of(a);
  long e = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    long num = exps[i] * order;  // d_i | exps[i] * order
    if (num % G->orders[i] != 0)
      throw std::logic_error("character order does not clear denominator");
    e = mod_reduce(e + x[i] * (num / G->orders[i]), order);
  }
  return e;
}

long DirichletCharacter::primitive_value_exponent(long a) const {
  const long f = conductor;
  if (f == 1) return 0;
  if (gcd_ll(mod_reduce(a, f), f) != 1)
    throw std::invalid_argument("primitive_value_exponent: a not coprime to f");
  if (f == G->m) return value_exponent(a);
  std::vector<long> residues, moduli;
  for (long q : G->prime_powers) {
    const long p = smallest_prime_factor(q);
    residues.push_back(f % p == 0 ? mod_reduce(a, q) : 1);
    moduli.push_back(q);
  }
  return value_exponent(crt_combine(residues, moduli));
}

std::vector<DirichletCharacter> all_characters(long m) {
  auto G = unit_group(m);
  const std::size_t r = G->orders.size();
  std::vector<DirichletCharacter> out;

  std::vector<long> exps(r, 0);
  while (true) {
    DirichletCharacter chi;
    chi.G = G;
    chi.exps = exps;
    chi.order = 1;
    for (std::size_t i = 0; i < r; ++i)
      chi.order = std::lcm(chi.order,
                           G->orders[i] / gcd_ll(G->orders[i], exps[i]));

    // Conductor: product of local conductors, one per prime power.
    chi.conductor = 1;
    for (std::size_t qi = 0; qi < G->prime_powers.size(); ++qi) {
      const long q = G->prime_powers[qi];
      const long p = smallest_prime_factor(q);
      if (p != 2) {
        std::size_t i = 0;
        while (G->factor_q[i] != qi) ++i;
        long n_loc = G->orders[i] / gcd_ll(G->orders[i], exps[i]);
        if (n_loc == 1) continue;
        long cond = p;
        while (n_loc % p == 0) {
          n_loc /= p;
          cond *= p;
        }
        chi.conductor *= cond;
      } else if (q == 4) {
        std::size_t i = 0;
        while (G->factor_q[i] != qi) ++i;
        if (exps[i] == 1) chi.conductor *= 4;
      } else if (q >= 8) {
        std::size_t i = 0;
        while (G->factor_q[i] != qi) ++i;  // -1 factor, then 5 factor
        const long eps = exps[i];
        const long k5 = exps[i + 1];
        if (k5 != 0) {
          long v = 0, k = k5;
          while (k % 2 == 0) {
            k /= 2;
            ++v;
          }
          long cond = q;
          for (long s = 0; s < v; ++s) cond /= 2;
          chi.conductor *= cond;
        } else if (eps == 1) {
          chi.conductor *= 4;
        }
      }
    }

    chi.odd = (m > 2) && (chi.order % 2 == 0) &&
              chi.value_exponent(m - 1) == chi.order / 2;
    out.push_back(std::move(chi));

    std::size_t i = 0;
    while (i < r && ++exps[i] == G->orders[i]) exps[i++] = 0;
    if (i == r) break;
  }
  return out;
}

std::vector<DirichletCharacter> odd_characters(long m) {
  std::vector<DirichletCharacter> out;
  for (auto& chi : all_characters(m))
    if (chi.odd) out.push_back(std::move(chi));
  return out;
}

std::vector<std::vector<std::size_t>> character_orbits(
    const std::vector<DirichletCharacter>& chars) {
  std::map<std::vector<long>, std::vector<std::size_t>> groups;
  for (std::size_t idx = 0; idx < chars.size(); ++idx) {
    const DirichletCharacter& chi = chars[idx];
    const long n = chi.order;
    std::vector<long> key = chi.exps;
    for (long k = 2; k < n; ++k) {
      if (gcd_ll(k, n) != 1) continue;
      std::vector<long> cand(chi.exps.size());
      for (std::size_t i = 0; i < cand.size(); ++i)
        cand[i] = mod_reduce(k * chi.exps[i], chi.G->orders[i]);
      if (cand < key) key = std::move(cand);
    }
    groups[std::move(key)].push_back(idx);
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& [key, idxs] : groups) out.push_back(std::move(idxs));
  return out;
}

CyclotomicInteger b1_numerator(const DirichletCharacter& chi) {
  const long f = chi.conductor;
  if (f < 3)
    throw std::invalid_argument("b1_numerator needs a nontrivial character");
  const long n = chi.order;
  std::vector<mpz_class> sums(n, mpz_class(0));
  for (long a = 1; a < f; ++a)
    if (gcd_ll(a, f) == 1) sums[chi.primitive_value_exponent(a)] += a;
  std::vector<std::pair<mpz_class, long>> terms;
  for (long e = 0; e < n; ++e)
    if (sums[e] != 0) terms.emplace_back(sums[e], e);
  return CyclotomicInteger::from_exponents(cyclotomic_context(n), terms);
}

mpz_class h_minus_analytic(const Conductor& c) {
  std::vector<DirichletCharacter> odd = odd_characters(c.m);
  std::vector<std::vector<std::size_t>> orbits = character_orbits(odd);

  std::size_t covered = 0;
  mpq_class prod = 1;
  for (const auto& orbit : orbits) {
    std::size_t rep = orbit[0];
    for (std::size_t idx : orbit)
      if (odd[idx].exps < odd[rep].exps) rep = idx;
    const DirichletCharacter& chi = odd[rep];
    const long phin = euler_phi(chi.order);
    if (static_cast<long>(orbit.size()) != phin)
      throw std::logic_error("character orbit has unexpected size");
    for (std::size_t idx : orbit)
      if (odd[idx].conductor != chi.conductor || odd[idx].order != chi.order)
        throw std::logic_error("character orbit is not Galois-stable");
    covered += orbit.size();

    mpz_class norm = b1_numerator(chi).norm();
    mpz_class denom;
    mpz_class base = 2 * mpz_class(chi.conductor);
    mpz_pow_ui(denom.get_mpz_t(), base.get_mpz_t(), phin);
    mpq_class term(norm, denom);
    term.canonicalize();
    if (phin % 2 == 1) term = -term;
    prod *= term;
  }
  if (covered != odd.size())
    throw std::logic_error("orbits do not partition the odd characters");

  mpq_class total = prod * (c.t == 1 ? 1 : 2) * c.w;
  total.canonicalize();
  if (total.get_den() != 1 || total <= 0)
    throw std::logic_error("analytic class number is not a positive integer");
  return total.get_num();
}

}  // namespace stk
