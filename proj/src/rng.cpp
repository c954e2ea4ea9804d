#include "gbv/rng.hpp"

namespace gbv {

namespace {

std::uint64_t splitmix_step(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t v) {
  std::uint64_t s = v;
  return splitmix_step(s);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : text) {
    h ^= std::uint64_t(static_cast<unsigned char>(c));
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view suite, std::uint64_t trial)
    : state_(mix(mix(seed ^ fnv1a64(suite)) + trial)) {}

std::uint64_t Rng::next() { return splitmix_step(state_); }

int Rng::range(int lo, int hi) {
  return lo + int(next() % std::uint64_t(hi - lo + 1));
}

Rational Rng::coeff() { return Rational(range(-3, 3)); }

Monomial Rng::monomial(int m, unsigned max_degree) {
  Monomial mono{std::vector<std::uint32_t>(std::size_t(m), 0)};
  if (m == 0) return mono;
  unsigned degree = unsigned(range(0, int(max_degree)));
  for (unsigned step = 0; step < degree; ++step) mono.e[std::size_t(range(0, m - 1))] += 1;
  return mono;
}

Poly Rng::poly(int m, unsigned max_degree, int terms) {
  Poly p(m);
  for (int t = 0; t < terms; ++t) p.add_term(monomial(m, max_degree), coeff());
  return p;
}

SuperFn Rng::superfn(int m, int n, Parity parity, unsigned max_degree) {
  SuperFn f(m, n);
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    if ((unsigned(odd_degree(OddMask(s))) & 1u) != unsigned(parity)) continue;
    if (!coin()) continue;
    Poly p(m);
    p.add_term(monomial(m, max_degree), coeff());
    p.add_term(monomial(m, max_degree), coeff());
    f.add_term(OddMask(s), p);
  }
  return f;
}

VectorField Rng::vectorfield(int m, int n, Parity parity, unsigned max_degree) {
  VectorField d(m, n, parity);
  for (int i = 0; i < m; ++i) d.set_x_coeff(i, superfn(m, n, parity, max_degree));
  for (int j = 0; j < n; ++j) d.set_s_coeff(j, superfn(m, n, flip(parity), max_degree));
  return d;
}

SuperFn Rng::form_of_degree(int m, int z_degree, unsigned max_degree) {
  SuperFn f(m, m);
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) {
    if (odd_degree(OddMask(s)) != z_degree) continue;
    if (!coin()) continue;
    Poly p(m);
    p.add_term(monomial(m, max_degree), coeff());
    f.add_term(OddMask(s), p);
  }
  return f;
}

std::vector<Poly> Rng::base_field(int m, unsigned max_degree) {
  std::vector<Poly> x;
  for (int i = 0; i < m; ++i) x.push_back(poly(m, max_degree, 2));
  return x;
}

}  // namespace gbv
