#ifndef HM_ERROR_HPP
#define HM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hm {

enum class ErrorKind {
  InvalidParams,
  NonUniformEdge,
  VertexOutOfRange,
  TooLarge,
  NotACover,
  InvalidCertificate,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hm

#endif
