#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rauzy {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (permutation text, diagram JSON).
struct ParseError : Error {
  using Error::Error;
};

// A Rauzy move or induction step requested outside its domain:
// equal last symbols, or equal last lengths.
struct MoveUndefined : Error {
  using Error::Error;
};

// Seed permutation is reducible; its suspension surface is disconnected.
struct ReducibleInput : Error {
  using Error::Error;
};

// Enumeration hit the vertex budget. `discovered` is the count reached
// before aborting.
struct BudgetExceeded : Error {
  uint64_t discovered;
  explicit BudgetExceeded(uint64_t n)
      : Error("vertex budget exceeded after discovering " + std::to_string(n) +
              " vertices"),
        discovered(n) {}
};

// Two zeros of degree g-1 plus at least two marked regular points: no
// canonical representative family exists, so hyperellipticity of the class
// is not decidable here.
struct UnclassifiedHyperelliptic : Error {
  using Error::Error;
};

// Spin parity requested on a surface with an odd-degree singularity.
struct SpinUndefined : Error {
  using Error::Error;
};

// Heights that are not a suspension datum, or broken lines that cross:
// no embedded polygon exists for this data.
struct BadSuspension : Error {
  using Error::Error;
};

// A proven invariant failed at runtime; always a bug, never bad input.
struct InternalError : Error {
  using Error::Error;
};

}
