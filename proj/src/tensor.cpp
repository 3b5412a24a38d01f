#include "orbitmm/tensor.hpp"

namespace orbitmm {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::lattice: return "lattice";
    case Scheme::orbit: return "orbit";
    case Scheme::strassen_theta: return "strassen-theta";
    case Scheme::s4_family: return "s4-family";
    case Scheme::fixture: return "fixture";
    case Scheme::imported: return "imported";
  }
  return "imported";
}

Scheme parse_scheme(const std::string& name) {
  for (Scheme s : {Scheme::lattice, Scheme::orbit, Scheme::strassen_theta, Scheme::s4_family, Scheme::fixture,
                   Scheme::imported})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown scheme: " + name);
}

}  // namespace orbitmm
