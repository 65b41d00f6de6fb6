#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>

#include "quadff/error.hpp"
#include "quadff/zeta.hpp"

namespace quadff {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;  // ascending
using Real = long double;
using Complex = std::complex<Real>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rem(RPoly a, const RPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RPoly quotient(RPoly a, const RPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  RPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
  }
  return q;
}

RPoly gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// gcd(L, L') has degree 0 modulo a large prime, so L is square-free over Q.
bool squarefree_mod_prime(std::span<const std::int64_t> a) {
  constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  using Vec = std::vector<std::uint64_t>;
  auto reduce = [&](std::int64_t v) {
    const __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  };
  auto mulmod = [&](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, b = mulmod(b, b)) {
      if (e & 1) r = mulmod(r, b);
    }
    return r;
  };
  auto trim = [](Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  Vec f, d;
  for (auto v : a) f.push_back(reduce(v));
  trim(f);
  if (f.size() != a.size()) return false;  // leading coefficient vanishes mod p
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p));
  trim(d);
  while (!d.empty()) {
    const std::uint64_t inv = powmod(d.back(), p - 2);
    while (f.size() >= d.size()) {
      const std::uint64_t c = mulmod(f.back(), inv);
      const std::size_t shift = f.size() - d.size();
      for (std::size_t i = 0; i < d.size(); ++i) f[shift + i] = (f[shift + i] + p - mulmod(c, d[i])) % p;
      f.pop_back();
      trim(f);
    }
    std::swap(f, d);
  }
  return f.size() == 1;
}

// L / gcd(L, L'): same roots, all simple.
RPoly squarefree_part(const RPoly& L) {
  RPoly d;
  for (std::size_t i = 1; i < L.size(); ++i) d.push_back(L[i] * static_cast<int>(i));
  trim(d);
  if (d.empty()) return L;
  const RPoly g = gcd(L, d);
  if (g.size() <= 1) return L;
  return quotient(L, g);
}

Complex horner(const std::vector<Real>& c, Complex z, Complex* deriv) {
  Complex v = 0, dv = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dv = dv * z + v;
    v = v * z + *it;
  }
  *deriv = dv;
  return v;
}

std::vector<Complex> roots(const RPoly& p) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<Real> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<Real>(p[i] / p.back());
  if (n == 0) return {};
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> companion =
      Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i];
  Eigen::EigenSolver<decltype(companion)> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error(Errc::root_finder_nonconvergence, "eigenvalue solver failed");
  std::vector<Complex> out;
  Real scale = 0;
  for (Real v : c) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < n; ++i) {
    Complex z = solver.eigenvalues()[i];
    for (int it = 0; it < 50; ++it) {
      Complex d;
      const Complex v = horner(c, z, &d);
      if (std::abs(d) == 0) break;
      const Complex step = v / d;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<Real>(1, std::abs(z))) break;
    }
    Complex d;
    const Complex v = horner(c, z, &d);
    const Real bound = 1e-9L * scale * std::max<Real>(1, std::pow(std::abs(z), static_cast<Real>(n)));
    if (!std::isfinite(std::abs(z)) || std::abs(v) > bound) {
      throw Error(Errc::root_finder_nonconvergence, "root did not converge");
    }
    out.push_back(z);
  }
  return out;
}

}  // namespace

bool rh_check(int q, std::span<const std::int64_t> a, double tolerance) {
  RPoly L;
  for (auto v : a) L.emplace_back(v);
  trim(L);
  if (L.empty()) throw Error(Errc::invalid_argument, "L is zero");
  if (L.size() == 1) return true;
  const Real target = 1 / std::sqrt(static_cast<Real>(q));
  const RPoly simple = squarefree_mod_prime(a.first(L.size())) ? L : squarefree_part(L);
  for (const Complex& z : roots(simple)) {
    if (std::abs(std::abs(z) - target) > static_cast<Real>(tolerance)) return false;
  }
  return true;
}

}  // namespace quadff
