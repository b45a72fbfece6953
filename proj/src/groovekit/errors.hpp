#pragma once

#include <stdexcept>
#include <string>

namespace groovekit {

enum class errc {
  ok = 0,
  invalid_argument,
  non_convergence,
  domain,
  truncation,
  quadrature,
  contour,
  stability,
  solve,
  parse,
  unit,
  rank_deficient,
  no_minimum,
  io,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& what) { throw error(code, what); }

} // namespace groovekit
