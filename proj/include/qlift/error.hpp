#pragma once

#include <stdexcept>
#include <string>

namespace qlift {

enum class Errc {
  division_by_zero,
  zero_conductor,
  q_is_one,
  group_mismatch,
  presentation_mismatch,
  unknown_symbol,
  infinite_dimensional,
  inadmissible_spec,
  not_in_domain,
  parse_error,
  bad_input,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace qlift
