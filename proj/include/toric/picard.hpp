#ifndef TORIC_PICARD_HPP
#define TORIC_PICARD_HPP

#include "toric/fan.hpp"
#include "toric/linalg.hpp"

namespace toric {

struct PicardData {
    int rank = 0;                  // b = n - d
    ZMat class_of_ray;             // image of each boundary divisor class, in Z^b
    std::vector<Vec> effective_cone_generators;
};

// divisor class group of a smooth complete fan: cokernel of the transpose ray
// matrix. Throws if the cokernel has torsion.
PicardData picard(const Fan& f);

// value of the integral of e^{-<v,y>} over the dual of the cone spanned by
// the effective classes: double description of the dual cone, triangulation,
// and exact summation of |det G_k| / prod_j <v, g_kj>.
// Throws if v fails to be strictly positive on some dual generator.
Rat effective_cone_constant(const PicardData& pic, const QVec& v);

// class of the log-anticanonical bundle: sum over rays of (1/m_i) * class
QVec log_anticanonical_class(const Fan& f, const PicardData& pic,
                             const OrbifoldWeights& w);

}  // namespace toric

#endif
