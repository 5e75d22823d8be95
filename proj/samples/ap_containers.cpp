// Containers for 3-AP-free subsets of [n], compared against the exact counts.

#include <iostream>

#include "hgc/hgc.hpp"

int main(int argc, char** argv) {
  using namespace hgc;
  const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 12;
  const Rational p(1, 4);

  auto h = ap_hypergraph(n, 3);
  const std::size_t s = independence_number(h) + 1;
  const Rational eps = density_epsilon(h, s);
  const Rational c = minimal_degree_constant(h, p);
  auto family = min_size_family(h.vertex_count(), s, eps);

  auto witnesses = independent_sets(h);
  auto map = build_container_family(h, family, c, p, witnesses);
  std::cout << "n=" << n << " alpha=" << s - 1 << " eps=" << to_string(eps) << " c=" << to_string(c) << '\n';
  std::cout << witnesses.size() << " independent sets, " << map.records.size() << " containers\n";

  auto exact = count_independent_by_size(h);
  std::cout << "m  exact  bound\n";
  for (std::size_t m = 0; m < exact.size(); ++m)
    std::cout << m << "  " << exact[m] << "  " << container_count_bound(map, static_cast<long long>(m)) << '\n';
}
