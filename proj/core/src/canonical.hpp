#pragma once

#include <optional>

#include "quadff/search.hpp"

namespace quadff {

struct CanonicalForm {
  CanonicalKey key;
  Curve representative;
};

CanonicalForm canonical_form(const Curve& curve, int shift_slack);

}  // namespace quadff
