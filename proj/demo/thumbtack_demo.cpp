// Builds a DRCS set from the Reed hopping pattern over GF(25), sweeps its
// ambiguity functions, and prints the peak magnitudes next to the lower
// bound for the same parameters.

#include <iostream>

#include "drcss/drcss.hpp"

int main() {
  const drcss::FiniteField field(5, 2);
  const auto fhss = drcss::fhss_reed(field);
  std::cout << "Reed pattern: K=" << fhss.set_size() << " N=" << fhss.length()
            << " Q=" << fhss.alphabet
            << " one-coincidence=" << (fhss.one_coincidence() ? "yes" : "no") << "\n";

  const auto c = drcss::drcss_from_ocfhss(fhss);
  const auto v = drcss::certify_claim(c.set, c.claim, drcss::Exec{});
  std::cout << "DRCS set: K=" << c.set.set_size() << " M=" << c.set.flock_size()
            << " N=" << c.set.length() << "\n"
            << "  theta_a = " << drcss::fmt9(v.measured.theta_a) << "\n"
            << "  theta_c = " << drcss::fmt9(v.measured.theta_c) << "\n";
  if (v.optimality) {
    std::cout << "  bound   = " << drcss::fmt9(v.optimality->bound) << "\n"
              << "  rho     = " << drcss::fmt9(v.optimality->rho) << " ("
              << drcss::to_string(v.optimality->cls) << ")\n";
  }
  std::cout << "claim " << (v.confirmed ? "confirmed" : "refuted") << "\n";
  return v.confirmed ? 0 : 1;
}
