#pragma once

#include <stdexcept>
#include <string>

namespace garside {

enum class Errc {
  index_out_of_range,
  structure_mismatch,
  dimension_mismatch,
  bad_parameter,
  too_large,
  bad_target,
  zero_length_factor,
  not_in_interval,
  none_exists,
  oracle_failed,
  io_error,
  parse_error,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace garside
