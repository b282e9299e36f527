#ifndef FORGE_ERROR_HPP
#define FORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace forge {

// Machine-readable failure categories, mapped onto CLI exit codes:
// parse errors -> 1, computation errors -> 2, budget exhaustion -> 3.
enum class Errc {
  invalid_input,
  not_a_group,
  cap_exceeded,
  budget_exceeded,
  bound_exhausted,
  not_normal,
  not_stable,
  not_a_hom,
  not_a_cocycle,
  center_nontrivial,
  torsion_present,
  obstruction,
  not_exact,
  mismatch,
  unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

} // namespace forge

#endif
