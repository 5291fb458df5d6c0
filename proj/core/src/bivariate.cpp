#include "pqb/bivariate.hpp"

#include <string>

namespace pqb {

BiMoment parse_bi_moment(std::string_view text) {
  if (text == "1") return BiMoment::One;
  if (text == "s") return BiMoment::S;
  if (text == "t") return BiMoment::T;
  if (text == "st") return BiMoment::ST;
  if (text == "s2" || text == "s^2") return BiMoment::S2;
  if (text == "t2" || text == "t^2") return BiMoment::T2;
  throw DomainError("unknown bivariate moment selector '" + std::string(text) +
                    "' (expected 1, s, t, st, s2, t2)");
}

std::string_view to_string(BiMoment which) {
  switch (which) {
    case BiMoment::One: return "1";
    case BiMoment::S: return "s";
    case BiMoment::T: return "t";
    case BiMoment::ST: return "st";
    case BiMoment::S2: return "s2";
    case BiMoment::T2: return "t2";
  }
  return "?";
}

std::string_view to_string(Axis axis) { return axis == Axis::X ? "x" : "y"; }

}  // namespace pqb
