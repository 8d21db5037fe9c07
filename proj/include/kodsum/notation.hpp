#pragma once

#include <string>

#include "kodsum/glue.hpp"
#include "kodsum/homology.hpp"
#include "kodsum/torusbundle.hpp"

namespace kodsum {

/// `CP2`, `CP2#k`, `S2xS2`, `S2xT2`, `S2xT2#k`, `S2~xT2`, `E1`,
/// `S2xSigma<h>[#k]`, `S2~xSigma<h>`. Throws ParseError.
SurfaceFamily parse_family(const std::string& text);

/// `[c1,c2,...]` in the family's basis.
H2Class parse_class(const SurfaceFamily& family, const std::string& text);

/// `[[a,b],[c,d]]`.
SL2Z parse_sl2z(const std::string& text);

/// `M([[a,b],[c,d]],[[e,f],[g,h]];(m,n))`.
TorusBundle parse_bundle(const std::string& text);

/// A bundle literal that is exactly the bundle of some table family.
FamilyTag parse_tag(const std::string& text);

/// Comma-separated integers, e.g. `0,1,1,0,0`.
std::vector<Int> parse_int_list(const std::string& text);

/// `even` or `odd` plus five parameters.
GluingData parse_gluing(const std::string& form, const std::string& params);

} // namespace kodsum
