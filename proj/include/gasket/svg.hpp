#pragma once

#include <string>

#include "gasket/gasket.hpp"
#include "gasket/thickness.hpp"

namespace gasket::svg {

inline constexpr int kRenderLevelCap = 8;

// Deterministic emitters: fixed viewBox 0 0 1000 900, fixed palette,
// coordinates printed with six decimals. Identical inputs give
// byte-identical documents.
std::string render_stage(const StageSet& stage);
std::string render_certificate(const thickness::Certificate& cert);
// The two summand segments and their parallelogram, vertices labeled.
std::string render_parallelogram(const geom::ConvexPolygon& para);

}  // namespace gasket::svg
