#include "stickelberger/group_ring.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "stickelberger/conductor.hpp"

namespace stk {

namespace {
std::mutex g_unit_mutex;
std::map<long, std::shared_ptr<const UnitTable>> g_unit_cache;
}  // namespace

int UnitTable::position(long residue) const {
  residue = mod_reduce(residue, m);
  return index_of[residue];
}

std::shared_ptr<const UnitTable> unit_table(long m) {
  if (m < 1) throw std::invalid_argument("unit_table: modulus must be >= 1");
  std::lock_guard<std::mutex> lock(g_unit_mutex);
  auto it = g_unit_cache.find(m);
  if (it != g_unit_cache.end()) return it->second;

  auto tab = std::make_shared<UnitTable>();
  tab->m = m;
  tab->index_of.assign(m, -1);
  for (long s = 0; s < m; ++s) {
    if (gcd_ll(s, m) == 1) {
      tab->index_of[s] = static_cast<int>(tab->units.size());
      tab->units.push_back(s);
    }
  }
  tab->inverse.resize(tab->units.size());
  for (size_t i = 0; i < tab->units.size(); ++i) {
    long inv = (m == 1) ? 0 : inv_mod(tab->units[i], m);
    tab->inverse[i] = tab->index_of[inv];
  }
  g_unit_cache.emplace(m, tab);
  return tab;
}

GroupRingElement::GroupRingElement(long m)
    : table_(unit_table(m)), coeffs_(table_->phi()) {}

const mpq_class& GroupRingElement::coeff(long s) const {
  int pos = table_->position(s);
  if (pos < 0)
    throw std::invalid_argument("coeff: " + std::to_string(s) +
                                " is not a unit mod " + std::to_string(modulus()));
  return coeffs_[pos];
}

void GroupRingElement::set_coeff(long s, const mpq_class& value) {
  int pos = table_->position(s);
  if (pos < 0)
    throw std::invalid_argument("set_coeff: " + std::to_string(s) +
                                " is not a unit mod " + std::to_string(modulus()));
  coeffs_[pos] = value;
}

mpq_class GroupRingElement::coefficient_sum() const {
  mpq_class sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

mpz_class GroupRingElement::common_denominator() const {
  mpz_class den = 1;
  for (const auto& c : coeffs_) {
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  return den;
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

namespace {
void require_same_modulus(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("group ring elements have different moduli");
}
}  // namespace

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  require_same_modulus(*this, rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  require_same_modulus(*this, rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const mpq_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool GroupRingElement::operator==(const GroupRingElement& rhs) const {
  return modulus() == rhs.modulus() && coeffs_ == rhs.coeffs_;
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[i].get_str() << ")s" << table_->units[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GroupRingElement zero_element(long m) { return GroupRingElement(m); }

GroupRingElement norm_element(long m) {
  GroupRingElement out(m);
  for (long u : unit_table(m)->units) out.set_coeff(u, 1);
  return out;
}

GroupRingElement half_norm_element(long m) {
  GroupRingElement out = norm_element(m);
  out *= mpq_class(1, 2);
  return out;
}

GroupRingElement sigma_apply(long s, const GroupRingElement& x) {
  long m = x.modulus();
  auto tab = unit_table(m);
  int spos = tab->position(s);
  if (spos < 0)
    throw std::invalid_argument("sigma_apply: " + std::to_string(s) +
                                " is not a unit mod " + std::to_string(m));
  GroupRingElement out(m);
  for (size_t i = 0; i < tab->units.size(); ++i) {
    long target = mul_mod(tab->units[spos], tab->units[i], m);
    out.coeffs_[tab->index_of[target]] = x.coeffs_[i];
  }
  return out;
}

GroupRingElement conj_sum(const GroupRingElement& x) {
  long m = x.modulus();
  long minus_one = (m == 1) ? 0 : m - 1;
  return x + sigma_apply(minus_one, x);
}

GroupRingElement restriction(const GroupRingElement& x, long d) {
  long m = x.modulus();
  if (d < 1 || m % d != 0)
    throw std::invalid_argument("restriction: target modulus must divide " +
                                std::to_string(m));
  auto tab = unit_table(m);
  GroupRingElement out(d);
  for (size_t i = 0; i < tab->units.size(); ++i) {
    long target = tab->units[i] % d;  // a unit mod m stays a unit mod d
    out.set_coeff(target, out.coeff(target) + x.coefficients()[i]);
  }
  return out;
}

GroupRingElement corestriction(const GroupRingElement& x, long m) {
  long d = x.modulus();
  if (m < d || m % d != 0)
    throw std::invalid_argument("corestriction: source modulus must divide " +
                                std::to_string(m));
  auto tab = unit_table(m);
  GroupRingElement out(m);
  for (size_t i = 0; i < tab->units.size(); ++i) {
    long down = tab->units[i] % d;
    out.set_coeff(tab->units[i], x.coeff(down));
  }
  return out;
}

}  // namespace stk
