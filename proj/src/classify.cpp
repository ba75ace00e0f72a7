#include "corank2/classify.hpp"

namespace corank2 {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Sharksfin: return "Sharksfin";
    case Verdict::Deltoid: return "Deltoid";
    case Verdict::DegenerateHessian: return "DegenerateHessian";
    case Verdict::NotRecognized: return "NotRecognized";
    case Verdict::NotRankZero: return "NotRankZero";
  }
  return "?";
}

std::string to_string(HessianIndex h) {
  switch (h) {
    case HessianIndex::IndexOne: return "index-1";
    case HessianIndex::Definite: return "definite";
    case HessianIndex::Degenerate: return "degenerate";
  }
  return "?";
}

std::string to_string(RootNormalization r) {
  switch (r) {
    case RootNormalization::LeadingUU: return "leading-uu";
    case RootNormalization::LeadingVV: return "leading-vv";
    case RootNormalization::Axes: return "axes";
  }
  return "?";
}

template Classification<QuadScalar> classify_germ(const MapJet2<QuadScalar>&, const ClassifyOptions&);
template Classification<std::complex<double>> classify_germ(const MapJet2<std::complex<double>>&,
                                                            const ClassifyOptions&);

}  // namespace corank2
