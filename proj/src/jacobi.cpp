#include "jacrec/jacobi.hpp"

#include <stdexcept>
#include <string>

namespace jacrec {

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::L1: return "L1";
    case IdentityId::L2: return "L2";
    case IdentityId::L3: return "L3";
    case IdentityId::L4: return "L4";
    case IdentityId::L5: return "L5";
    case IdentityId::L6: return "L6";
    case IdentityId::L7: return "L7";
    case IdentityId::ThreeTerm: return "ThreeTerm";
    case IdentityId::Reflect: return "Reflect";
    case IdentityId::HypB: return "HypB";
  }
  return "?";
}

IdentityId identity_from_name(std::string_view name) {
  for (IdentityId id : kAllIdentities) {
    if (identity_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

}  // namespace jacrec
