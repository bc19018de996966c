#pragma once

#include <stdexcept>
#include <string>

namespace rover {

enum class Errc {
  prefix_violation,
  incomplete_code,
  index_out_of_range,
  arity_mismatch,
  unknown_generator,
  input_too_shallow,
  contraction_cap_exceeded,
  rank_gap_too_large,
  not_an_expansion,
  rank_too_small,
  rank_too_large,
  size_cap_exceeded,
  not_a_clique,
  illegal_set,
  parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace rover
