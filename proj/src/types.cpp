#include "anadof/types.hpp"

namespace anadof {

std::string to_string(CsitMode mode) {
  switch (mode) {
    case CsitMode::Perfect: return "perfect";
    case CsitMode::Delayed: return "delayed";
    case CsitMode::DelayedPartial: return "partial";
    case CsitMode::None: return "no";
  }
  throw std::invalid_argument("to_string: bad CsitMode");
}

CsitMode csit_mode_from_string(const std::string& name) {
  if (name == "perfect") return CsitMode::Perfect;
  if (name == "delayed") return CsitMode::Delayed;
  if (name == "partial") return CsitMode::DelayedPartial;
  if (name == "no" || name == "none") return CsitMode::None;
  throw std::invalid_argument("unknown CSIT mode: " + name);
}

}  // namespace anadof
