#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cactus/scheme.hpp"

namespace cactus::fixtures {

// Local algebra zoo (all of dimension <= 6).
LocalAlgebra fat2(FieldSpec f);    // k[x,y]/(x^2,xy,y^2), socle dim 2
LocalAlgebra square(FieldSpec f);  // k[x,y]/(x^2,y^2), Gorenstein
LocalAlgebra fat3(FieldSpec f);    // k[x,y,z]/m^2, socle dim 3
LocalAlgebra curly(FieldSpec f);   // k[x,y]/(x^3,xy,y^2), socle dim 2
LocalAlgebra long6(FieldSpec f);   // k[x,y]/(x^3,y^2), dim 6, Gorenstein

std::vector<LocalAlgebra> bundled_local_algebras(FieldSpec f);

// Embedded schemes used throughout the test suites.
EmbeddedFiniteScheme fat_point_p2(FieldSpec f);        // deg 3, socdim 2, spans P^2
EmbeddedFiniteScheme jet3_conic(FieldSpec f);          // deg 3, Gorenstein
EmbeddedFiniteScheme two_points_p2(FieldSpec f);       // deg 2
EmbeddedFiniteScheme three_points_p2(FieldSpec f);     // deg 3
EmbeddedFiniteScheme triple_socle_p3(FieldSpec f);     // deg 4, socdim 3, spans P^3
EmbeddedFiniteScheme fat_plus_point_p3(FieldSpec f);   // deg 4, two components
EmbeddedFiniteScheme mixed_deg6_p3(FieldSpec f);       // deg 6, three components
EmbeddedFiniteScheme jet4_twisted_cubic(FieldSpec f);  // deg 4, Gorenstein, spans P^3

std::vector<std::pair<std::string, EmbeddedFiniteScheme>> bundled_schemes(FieldSpec f);

}  // namespace cactus::fixtures
