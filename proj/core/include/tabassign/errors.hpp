#pragma once

#include <stdexcept>
#include <string>

namespace tabassign {

// Base for all domain errors. Each subclass carries a stable kind tag;
// the CLI prints the tag verbatim so callers can match on it.
class error : public std::runtime_error {
public:
  error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

class invalid_argument : public error {
public:
  explicit invalid_argument(const std::string& m) : error("invalid-argument", m) {}
};

class parse_error : public error {
public:
  explicit parse_error(const std::string& m) : error("parse-error", m) {}
};

class capacity_error : public error {
public:
  explicit capacity_error(const std::string& m) : error("capacity-error", m) {}
};

class shape_error : public error {
public:
  explicit shape_error(const std::string& m) : error("shape-error", m) {}
};

class invalid_filling : public error {
public:
  explicit invalid_filling(const std::string& m) : error("invalid-filling", m) {}
};

class cycle_error : public error {
public:
  explicit cycle_error(const std::string& m) : error("cycle-error", m) {}
};

class row_rate_error : public error {
public:
  explicit row_rate_error(const std::string& m) : error("row-rate-error", m) {}
};

class zero_vector_error : public error {
public:
  explicit zero_vector_error(const std::string& m) : error("zero-vector-error", m) {}
};

class singular_matrix_error : public error {
public:
  explicit singular_matrix_error(const std::string& m) : error("singular-matrix-error", m) {}
};

class io_error : public error {
public:
  explicit io_error(const std::string& m) : error("io-error", m) {}
};

}  // namespace tabassign
