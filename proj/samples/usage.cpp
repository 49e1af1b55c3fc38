// Library tour: classes of a presentation, its congruence lattices, and the
// condition-e report with the resulting bound.

#include <iostream>

#include <oclattice/oclattice.hpp>

using namespace oclattice;

int main()
{
  auto sigma = parse_presentation("xxy = yxx\nxyz = xzy\n");

  // W_(1,1,1,1) splits by first letter.
  auto phi = phi_lambda(sigma, parse_partition("1,1,1,1").canonical_content());
  std::cout << "classes on W_(1^4): " << phi.classes.class_count() << '\n';
  for (auto const &members : phi.class_members())
    std::cout << "  " << to_string(members.front()) << " (" << members.size() << " words)\n";

  // Con of the free G-set on W_(1,1,1) is Sub(S_3).
  auto con = congruence_lattice(quotient_gset(Presentation{}, parse_partition("1,1,1")));
  std::cout << "Con(W_(1^3)) ~ Sub(S_3): " << std::boolalpha << are_isomorphic(con, subgroup_lattice_sym(3))
            << ", modular " << is_modular(con) << ", distributive " << is_distributive(con) << '\n';

  auto report = check_condition_e(sigma, 6);
  std::cout << "condition e: " << to_string(report.satisfies_e) << '\n';
  if (report.satisfies_e == Verdict::True) {
    auto k = least_pk(sigma, 3);
    auto n = least_lemma_level(sigma, 3);
    if (k && n) {
      auto bound = bound_params(*k, *n);
      std::cout << "k = " << *k << ", n = " << *n << ", N = " << bound.N << ", |Con| <= 2^" << bound.card_bound_exponent
                << '\n';
    }
  }
}
