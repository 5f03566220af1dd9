#include "behrend/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "behrend/groebner.hpp"
#include "behrend/ideal.hpp"

namespace behrend {

namespace {

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(out);
  return out;
}

// quotient and remainder of a by b (b nonzero)
std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly q(a.size() - b.size() + 1, 0);
  const std::uint64_t inv = inverse(b.back(), p);
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    std::uint64_t c = mulmod(a[static_cast<std::size_t>(k) + b.size() - 1], inv, p);
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = a[static_cast<std::size_t>(k) + j];
      slot = (slot + p - mulmod(c, b[j], p)) % p;
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly monic(ModPoly a, std::uint64_t p) {
  trim(a);
  if (a.empty()) return a;
  std::uint64_t inv = inverse(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ModPoly derivative(const ModPoly& a, std::uint64_t p) {
  ModPoly out;
  for (std::size_t k = 1; k < a.size(); ++k) out.push_back(mulmod(a[k], k % p, p));
  trim(out);
  return out;
}

ModPoly power_mod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p) {
  ModPoly r{1};
  base = divmod(base, m, p).second;
  while (e) {
    if (e & 1) r = divmod(mul(r, base, p), m, p).second;
    base = divmod(mul(base, base, p), m, p).second;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Integer coefficients (low to high) of a univariate polynomial in `var`.
std::vector<mpz_class> integer_coefficients(const Polynomial& f, std::size_t var) {
  auto cs = f.coefficients_in(var);
  mpz_class den = 1;
  for (const auto& c : cs) {
    if (!c.is_zero() && !c.is_constant()) throw std::invalid_argument("polynomial is not univariate");
    if (!c.is_zero()) den = lcm(den, c.leading_coeff().get_den());
  }
  std::vector<mpz_class> out;
  for (const auto& c : cs) {
    if (c.is_zero()) {
      out.emplace_back(0);
    } else {
      mpq_class v = c.leading_coeff() * den;
      out.push_back(v.get_num());
    }
  }
  return out;
}

mpq_class evaluate(const std::vector<mpz_class>& a, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpq_class> roots_impl(const Polynomial& f, std::size_t var, bool& complete) {
  complete = true;
  auto a = integer_coefficients(f, var);
  std::vector<mpq_class> roots;
  std::size_t shift = 0;
  while (shift < a.size() && a[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
  if (a.size() <= 1) return roots;
  const mpz_class bound("1000000000000");
  if (abs(a.front()) > bound || abs(a.back()) > bound) {
    complete = false;
    return roots;
  }
  for (const auto& pnum : divisors(a.front())) {
    for (const auto& qden : divisors(a.back())) {
      for (int sign : {1, -1}) {
        mpq_class x(pnum * sign, qden);
        x.canonicalize();
        if (evaluate(a, x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<int> factor_degrees_mod_p(std::vector<std::uint64_t> f, std::uint64_t p) {
  f = monic(std::move(f), p);
  std::vector<int> degrees;
  ModPoly x{0, 1};
  ModPoly h = x;
  for (int i = 1; deg(f) >= 2 * i; ++i) {
    h = power_mod(h, p, f, p);
    ModPoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    ModPoly g = gcd(f, diff, p);
    if (deg(g) > 0) {
      for (int k = 0; k < deg(g) / i; ++k) degrees.push_back(i);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (deg(f) > 0) degrees.push_back(deg(f));
  return degrees;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  std::vector<Polynomial> d{b};
  Division q = divide(a, d, a.order());
  if (!q.remainder.is_zero()) return std::nullopt;
  return q.quotients[0];
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1, a.order());
  auto sa = a.support(), sb = b.support();
  std::vector<std::size_t> all;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
  if (all.size() <= 1) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
      std::vector<Polynomial> d{y};
      Polynomial r = divide(x, d, x.order()).remainder;
      x = std::move(y);
      y = std::move(r);
    }
    return x.monic();
  }
  Ideal both = intersect(Ideal(a.ring(), {a}), Ideal(a.ring(), {b}));
  const auto& gb = both.groebner();
  if (gb.size() != 1) throw std::logic_error("intersection of principal ideals is not principal");
  auto g = exact_divide(a * b, gb.elements()[0]);
  if (!g) throw std::logic_error("lcm does not divide the product");
  return g->monic().with_order(a.order());
}

std::vector<mpq_class> rational_roots(const Polynomial& f, std::size_t var) {
  bool complete = true;
  return roots_impl(f, var, complete);
}

std::optional<Polynomial> find_factor(const Polynomial& f) {
  if (f.is_zero() || f.total_degree() <= 1) return std::nullopt;
  const auto& ring = f.ring();
  const std::size_t n = ring->size();
  for (std::size_t v = 0; v < n; ++v) {
    int low = f.terms().front().mono[v];
    for (const auto& t : f.terms()) low = std::min(low, t.mono[v]);
    if (low > 0) return Polynomial::variable(ring, v, f.order());
  }
  auto supp = f.support();
  if (supp.size() == 1) {
    auto roots = rational_roots(f, supp[0]);
    if (!roots.empty())
      return Polynomial::variable(ring, supp[0], f.order()) - Polynomial::constant(ring, roots.front(), f.order());
    return std::nullopt;
  }
  if (f.is_homogeneous() && supp.size() == 2) {
    const std::size_t u = supp[0], w = supp[1];
    Polynomial g = f.substitute(w, Polynomial::constant(ring, 1));
    auto roots = rational_roots(g, u);
    if (!roots.empty())
      return Polynomial::variable(ring, u, f.order()) -
             Polynomial::constant(ring, roots.front()) * Polynomial::variable(ring, w, f.order());
  }
  for (std::size_t v : supp) {
    auto cs = f.coefficients_in(v);
    bool unit_coefficient = std::any_of(cs.begin(), cs.end(), [](const Polynomial& c) { return c.is_constant() && !c.is_zero(); });
    if (unit_coefficient) continue;
    Polynomial c(ring, f.order());
    for (const auto& ci : cs)
      if (!ci.is_zero()) c = poly_gcd(c, ci);
    if (!c.is_constant()) return c;
  }
  if (ring->characteristic() == 0) {
    for (std::size_t v : supp) {
      if (f.degree_in(v) < 2) continue;
      Polynomial d = poly_gcd(f, f.derivative(v));
      if (!d.is_constant()) return d;
    }
  }
  return std::nullopt;
}

Irreducibility univariate_irreducibility(const Polynomial& f, std::size_t var) {
  const int d = f.degree_in(var);
  if (d <= 0) return Irreducibility::Unknown;
  if (d == 1) return Irreducibility::Irreducible;
  if (f.ring()->characteristic() != 0) return Irreducibility::Unknown;
  bool complete = true;
  auto roots = roots_impl(f, var, complete);
  if (!roots.empty()) return Irreducibility::Reducible;
  if (complete && d <= 3) return Irreducibility::Irreducible;
  auto a = integer_coefficients(f, var);
  std::vector<bool> possible(static_cast<std::size_t>(d) + 1, true);
  int tried = 0;
  for (std::uint64_t p = 1009; tried < 40 && p < 200000; p += 2) {
    if (!is_prime(p)) continue;
    mpz_class pz(static_cast<unsigned long>(p));
    if (a.back() % pz == 0) continue;
    ModPoly fp;
    for (const auto& c : a) {
      mpz_class r = c % pz;
      if (r < 0) r += pz;
      fp.push_back(r.get_ui());
    }
    trim(fp);
    if (deg(gcd(fp, derivative(fp, p), p)) > 0) continue;
    ++tried;
    std::vector<bool> sums(static_cast<std::size_t>(d) + 1, false);
    sums[0] = true;
    for (int k : factor_degrees_mod_p(fp, p))
      for (int s = d; s >= k; --s)
        if (sums[static_cast<std::size_t>(s - k)]) sums[static_cast<std::size_t>(s)] = true;
    bool only_trivial = true;
    for (int s = 1; s < d; ++s) {
      possible[static_cast<std::size_t>(s)] = possible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
      if (possible[static_cast<std::size_t>(s)]) only_trivial = false;
    }
    if (only_trivial) return Irreducibility::Irreducible;
  }
  return Irreducibility::Unknown;
}

Irreducibility irreducibility(const Polynomial& f, int attempts) {
  if (f.is_zero() || f.is_constant()) return Irreducibility::Unknown;
  const int d = f.total_degree();
  if (d == 1) return Irreducibility::Irreducible;
  auto supp = f.support();
  if (supp.size() == 1) return univariate_irreducibility(f, supp[0]);
  if (f.ring()->characteristic() != 0) return Irreducibility::Unknown;
  const Polynomial top = f.homogeneous_part(d);
  auto line_ring = make_ring({"t"});
  const auto t = Polynomial::variable(line_ring, 0);
  std::mt19937_64 rng(std::hash<std::string>{}(f.to_string()));
  std::uniform_int_distribution<int> coef(-4, 4);
  const std::size_t n = f.ring()->size();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Point a(n, 0), b(n, 0);
    for (std::size_t v : supp) {
      a[v] = coef(rng);
      b[v] = coef(rng);
    }
    if (top.evaluate(a) == 0) continue;
    std::vector<Polynomial> lines;
    for (std::size_t v = 0; v < n; ++v)
      lines.push_back(Polynomial::constant(line_ring, a[v]) * t + Polynomial::constant(line_ring, b[v]));
    Polynomial u(line_ring);
    for (const auto& term : f.terms()) {
      Polynomial m = Polynomial::constant(line_ring, term.coeff);
      for (std::size_t v : supp)
        if (term.mono[v] > 0) m *= lines[v].pow(static_cast<unsigned>(term.mono[v]));
      u += m;
    }
    if (univariate_irreducibility(u, 0) == Irreducibility::Irreducible) return Irreducibility::Irreducible;
  }
  return Irreducibility::Unknown;
}

}  // namespace behrend
