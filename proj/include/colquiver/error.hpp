#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colquiver {

enum class Errc {
  invalid_quiver,
  vertex_out_of_range,
  internal_contradiction,
  data_corruption,
  invalid_input,
  bound_exceeded,
  not_found,
  cluster_mismatch,
};

std::string_view errc_name(Errc code);

/// All library failures are reported through this exception; `code()` is the
/// machine-readable part surfaced by the CLI and the HTTP service.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace colquiver
