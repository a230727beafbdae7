#pragma once

#include <stdexcept>
#include <string>

namespace adsvol {

/// Bad user-supplied value (genus out of range, k = 0, malformed file, ...).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an API precondition, e.g. passed a 2-form where a 1-form is required.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The lifted relator did not land close enough to a multiple of the deck translation.
class IntegralityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace adsvol
