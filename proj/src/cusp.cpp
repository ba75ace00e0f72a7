#include "corank2/cusp.hpp"

namespace corank2 {

std::string to_string(CuspStatus s) {
  switch (s) {
    case CuspStatus::Cusp: return "cusp";
    case CuspStatus::RegularPoint: return "regular-point";
    case CuspStatus::VanishingSecondDerivative: return "vanishing-second-derivative";
    case CuspStatus::VanishingDeterminant: return "vanishing-determinant";
  }
  return "?";
}

template CuspInvariants direct_cusp_invariants(const MapJet2<QuadScalar>&, const ClassifyOptions&);
template CuspInvariants direct_cusp_invariants(const MapJet2<double>&, const ClassifyOptions&);

}  // namespace corank2
