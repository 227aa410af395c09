// stick: command-line front end for the Stickelberger-ideal library.
//
// Subcommands: basis, verify, hminus, bound, jacobi, bench.
// Exit codes: 0 success, 1 computational check failed, 2 usage error.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stickelberger/class_number.hpp"
#include "stickelberger/conductor.hpp"
#include "stickelberger/dirichlet.hpp"
#include "stickelberger/exact_linalg.hpp"
#include "stickelberger/group_ring.hpp"
#include "stickelberger/jacobi.hpp"
#include "stickelberger/stickelberger.hpp"

using json = nlohmann::ordered_json;
using namespace stk;

namespace {

// Integers stay JSON numbers while they fit in int64, and become decimal
// strings beyond that (no floats anywhere in the JSON output).
json json_int(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json json_rational(const mpq_class& q) {
  json out;
  out["num"] = json_int(mpq_class(q).get_num());
  out["den"] = json_int(mpq_class(q).get_den());
  return out;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << j.dump(2) << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string factorization_string(const Conductor& c) {
  std::string s;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    if (i) s += '*';
    s += std::to_string(c.factors[i]);
  }
  return s;
}

long env_threads() {
  const char* v = std::getenv("STICK_THREADS");
  if (v == nullptr) return 1;
  long n = std::atol(v);
  return n >= 1 ? n : 1;
}

int run_basis(long m, const std::string& format, const std::string& out_path) {
  Conductor c = parse_conductor(m);
  NamedBasis basis = short_basis(c);
  std::vector<long> mprime = index_set(c, IndexSetKind::MPrime);

  if (format == "text") {
    std::ostringstream os;
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      const GroupRingElement& e = basis.elements[i];
      long tag = basis.tags[i];
      os << (tag == 0 ? std::string("N") : "b=" + std::to_string(tag)) << ": {";
      bool first = true;
      const UnitTable& tab = *unit_table(m);
      for (long u : tab.units) {
        if (e.coeff(u) == 0) continue;
        if (!first) os << ",";
        os << u;
        first = false;
      }
      os << "}\n";
    }
    if (out_path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot open output file: " + out_path);
      f << os.str();
    }
    return 0;
  }

  json j;
  j["m"] = c.m;
  j["factors"] = c.factors;
  j["phi"] = c.phi;
  j["w"] = c.w;
  j["a"] = c.a;
  j["M_prime"] = mprime;
  j["includes_norm"] = true;
  j["elements"] = json::array();
  for (long b : mprime) {
    ShortElement e = alpha(c, b);
    json row;
    row["b"] = b;
    row["support"] = e.support;
    j["elements"].push_back(row);
  }
  {
    json row;
    row["b"] = 0;  // the norm element
    row["support"] = unit_table(m)->units;
    j["elements"].push_back(row);
  }
  emit(j, out_path);
  return 0;
}

struct CheckLine {
  std::string name;
  bool ok;
};

int run_verify(long m, bool deep) {
  Conductor c = parse_conductor(m);
  std::vector<CheckLine> checks;
  auto add = [&](const std::string& name, bool ok) {
    checks.push_back({name, ok});
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
  };

  std::vector<long> M = index_set(c, IndexSetKind::M);
  std::vector<long> MP = index_set(c, IndexSetKind::MPrime);
  add("|M| == phi/2", static_cast<long>(M.size()) == c.phi / 2);
  add("|M'| == phi/2", static_cast<long>(MP.size()) == c.phi / 2);

  bool alpha_ok = true, conj_ok = true;
  GroupRingElement N = norm_element(m);
  for (long b : MP) {
    ShortElement e = alpha(c, b);
    alpha_ok = alpha_ok &&
               static_cast<long>(e.support.size()) == c.phi / 2;
    conj_ok = conj_ok && conj_sum(e.to_group_ring()) == N;
  }
  add("alpha(b) has phi/2 unit coefficients", alpha_ok);
  add("(1 + sigma_{-1}) alpha(b) == N", conj_ok);

  NamedBasis theta_b = basis_for(c, BasisLabel::Theta);
  mpq_class d_short =
      transition_determinant(theta_b, basis_for(c, BasisLabel::Short));
  mpq_class d_half =
      transition_determinant(theta_b, basis_for(c, BasisLabel::AlphaHalf));
  mpq_class d_almost =
      transition_determinant(theta_b, basis_for(c, BasisLabel::AlmostShort));
  add("|det theta->short| == w", abs(d_short) == c.w);
  add("|det theta->alpha_half| == m or m/2",
      abs(d_half) == (c.m % 2 == 1 ? c.m : c.m / 2));
  add("|det theta->almost_short| == 1", abs(d_almost) == 1);

  ClassNumberReport det_rep = h_minus_det(c);
  mpz_class h_an = h_minus_analytic(c);
  add("h_det == h_analytic", det_rep.h == h_an);
  add("h <= upper bound", bound_at_least(upper_bound(c), mpq_class(det_rep.h)));

  if (deep) {
    bool theta_sym = true;
    for (long x = 1; x < m; ++x) {
      if (x % m == 0) continue;
      GroupRingElement s = theta(m, x);
      s += theta(m, m - x);
      theta_sym = theta_sym && s == N;
    }
    add("theta(a) + theta(-a) == N for all a", theta_sym);

    bool cor_ok = true;
    for (long d = 2; d < m; ++d) {
      if (m % d != 0 || !is_valid_conductor(d)) continue;
      for (long b : index_set(parse_conductor(d), IndexSetKind::MPrime)) {
        GroupRingElement lifted = corestriction(theta(d, b), m);
        cor_ok = cor_ok && lifted == theta(m, b * (m / d));
      }
    }
    add("cor(theta_d(b)) == theta_m(b m/d) for d | m", cor_ok);

    auto sel = small_unramified_primes(m, 1, 100);
    if (!sel.chosen.empty()) {
      ResidueField F = residue_field(m, sel.chosen[0]);
      bool jac_ok = true;
      for (long b : MP) jac_ok = jac_ok && verify_generator(F, b).ok();
      add("Jacobi generators verified (ell=" + std::to_string(sel.chosen[0]) +
              ")",
          jac_ok);
    }
  }

  for (const CheckLine& cl : checks)
    if (!cl.ok) return 1;
  return 0;
}

int run_hminus(long m, const std::string& method) {
  Conductor c = parse_conductor(m);
  json j;
  j["m"] = c.m;
  j["phi"] = c.phi;
  j["method"] = method;
  mpz_class hd, ha;
  bool have_d = false, have_a = false;
  if (method == "det" || method == "both") {
    ClassNumberReport rep = h_minus_det(c);
    hd = rep.h;
    have_d = true;
    j["n"] = rep.n;
    j["det_abs"] = json_int(rep.det_abs);
    j["index"] = json_int(rep.index);
    j["h_det"] = json_int(rep.h);
  }
  if (method == "analytic" || method == "both") {
    ha = h_minus_analytic(c);
    have_a = true;
    j["h_analytic"] = json_int(ha);
  }
  if (have_d && have_a) {
    j["agree"] = (hd == ha);
    j["h"] = json_int(hd);
  } else {
    j["h"] = json_int(have_d ? hd : ha);
  }
  emit(j, "");
  if (have_d && have_a && hd != ha) return 1;
  return 0;
}

int run_bound(long m) {
  Conductor c = parse_conductor(m);
  BoundValue b = upper_bound(c);
  json j;
  j["m"] = c.m;
  j["phi"] = c.phi;
  j["exact"] = json_rational(b.scale);
  j["exact"]["radicand"] = b.radicand;
  j["decimal"] = b.decimal(50);
  if (m % 4 == 0 && is_prime_small(m / 4) && m / 4 > 2) {
    BoundValue lb = louboutin_bound_4p(m / 4);
    j["louboutin"] = json_rational(lb.scale);
    j["louboutin"]["radicand"] = lb.radicand;
    j["louboutin_decimal"] = lb.decimal(50);
  }
  emit(j, "");
  return 0;
}

int run_jacobi(long m, long ell, long b_opt, bool verify) {
  Conductor c = parse_conductor(m);
  if (b_opt < 0 || b_opt >= m)
    throw std::invalid_argument("--b must lie in (0, m)");
  ResidueField F = residue_field(m, ell);
  std::vector<long> bs;
  if (b_opt > 0)
    bs.push_back(b_opt);
  else
    bs = index_set(c, IndexSetKind::MPrime);

  json j;
  j["m"] = m;
  j["ell"] = ell;
  j["f"] = F.f;
  j["q"] = F.q;
  j["defining_poly"] = F.defining_poly;
  j["eta_exponent"] = F.eta_exponent;
  if (F.f == 1) j["eta"] = (ell - F.defining_poly[0]) % ell;
  j["generators"] = json::array();

  bool all_ok = true;
  for (long b : bs) {
    JacobiGenerator g = generator_for_alpha(F, b);
    json row;
    row["b"] = b;
    row["kind"] = g.kind;
    row["args"] = {g.arg1, g.arg2};
    row["coeffs"] = json::array();
    for (const mpz_class& z : g.value.coeffs())
      row["coeffs"].push_back(json_int(z));
    if (verify) {
      JacobiVerification v = verify_generator(F, b);
      row["ideal_ok"] = v.ideal_ok;
      row["zero_set_ok"] = v.zero_set_ok;
      row["norm_ok"] = v.norm_ok;
      row["zero_set"] = v.zero_set;
      row["norm_abs"] = json_int(v.norm_abs);
      all_ok = all_ok && v.ok();
    }
    j["generators"].push_back(row);
  }
  emit(j, "");
  return all_ok ? 0 : 1;
}

int run_bench(long min_m, long max_m, const std::string& csv_path) {
  std::vector<long> ms = valid_conductors_up_to(max_m);
  ms.erase(std::remove_if(ms.begin(), ms.end(),
                          [&](long m) { return m < min_m; }),
           ms.end());

  struct Row {
    long m = 0;
    std::string factorization;
    long phi = 0;
    double t_analytic = 0;
    double t_det = 0;
  };
  std::vector<Row> rows(ms.size());

  std::atomic<std::size_t> next{0};
  std::atomic<long> mismatch{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= ms.size()) break;
      Conductor c = parse_conductor(ms[i]);
      Row& r = rows[i];
      r.m = c.m;
      r.factorization = factorization_string(c);
      r.phi = c.phi;
      auto t0 = std::chrono::steady_clock::now();
      mpz_class ha = h_minus_analytic(c);
      r.t_analytic = seconds_since(t0);
      t0 = std::chrono::steady_clock::now();
      ClassNumberReport rep = h_minus_det(c);
      r.t_det = seconds_since(t0);
      if (rep.h != ha) mismatch.store(c.m);
    }
  };

  long nthreads = std::min<long>(env_threads(), static_cast<long>(ms.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (long i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (long bad = mismatch.load(); bad != 0)
    throw std::logic_error("class number mismatch at m = " +
                           std::to_string(bad));

  std::ostringstream os;
  os << "m,factorization,phi,time_analytic_s,time_det_s\r\n";
  char buf[64];
  for (const Row& r : rows) {
    os << r.m << "," << r.factorization << "," << r.phi << ",";
    std::snprintf(buf, sizeof buf, "%.6f", r.t_analytic);
    os << buf << ",";
    std::snprintf(buf, sizeof buf, "%.6f", r.t_det);
    os << buf << "\r\n";
  }
  if (csv_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + csv_path);
    f << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stickelberger ideal bases, relative class numbers, and "
               "Jacobi-sum generators for cyclotomic fields"};
  app.require_subcommand(1);

  long m = 0, ell = 0, b_opt = 0, min_m = 3, max_m = 50;
  std::string format = "json", out_path, method = "both", csv_path;
  bool deep = false, do_verify = false;

  CLI::App* basis = app.add_subcommand("basis", "Short basis of the ideal");
  basis->add_option("m", m, "conductor")->required();
  basis->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  basis->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "Run structural checks");
  verify->add_option("m", m, "conductor")->required();
  verify->add_flag("--deep", deep, "also check identities and Jacobi sums");

  CLI::App* hminus = app.add_subcommand("hminus", "Relative class number");
  hminus->add_option("m", m, "conductor")->required();
  hminus->add_option("--method", method, "det, analytic, or both")
      ->check(CLI::IsMember({"det", "analytic", "both"}));

  CLI::App* bound = app.add_subcommand("bound", "Upper bound for h^-");
  bound->add_option("m", m, "conductor")->required();

  CLI::App* jacobi = app.add_subcommand("jacobi", "Jacobi-sum generators");
  jacobi->add_option("m", m, "conductor")->required();
  jacobi->add_option("ell", ell, "unramified prime")->required();
  jacobi->add_option("--b", b_opt, "single index b (default: all of M')");
  jacobi->add_flag("--verify", do_verify, "verify the ideal factorization");

  CLI::App* bench = app.add_subcommand("bench", "Time both class-number routes");
  bench->add_option("--min", min_m, "smallest conductor")->required();
  bench->add_option("--max", max_m, "largest conductor")->required();
  bench->add_option("--csv", csv_path, "write CSV to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (basis->parsed()) return run_basis(m, format, out_path);
    if (verify->parsed()) return run_verify(m, deep);
    if (hminus->parsed()) return run_hminus(m, method);
    if (bound->parsed()) return run_bound(m);
    if (jacobi->parsed()) return run_jacobi(m, ell, b_opt, do_verify);
    if (bench->parsed()) return run_bench(min_m, max_m, csv_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
