#pragma once

#include <string>
#include <utility>
#include <variant>

namespace lineroot {

/// Failure kinds shared by every operation that can refuse its input.
enum class ErrorKind {
  not_line_graph,
  invalid_input,
  cannot_lift,
};

struct Failure {
  ErrorKind kind;
  std::string message;
};

const char* to_string(ErrorKind kind) noexcept;

/// Minimal value-or-error holder (std::expected is C++23).
template <typename T, typename E = Failure>
class Expected {
 public:
  Expected(T value) : storage_(std::in_place_index<0>, std::move(value)) {}
  Expected(E error) : storage_(std::in_place_index<1>, std::move(error)) {}

  bool has_value() const noexcept { return storage_.index() == 0; }
  explicit operator bool() const noexcept { return has_value(); }

  T& value() & { return std::get<0>(storage_); }
  const T& value() const& { return std::get<0>(storage_); }
  T&& value() && { return std::get<0>(std::move(storage_)); }

  const E& error() const& { return std::get<1>(storage_); }

  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }

 private:
  std::variant<T, E> storage_;
};

}  // namespace lineroot
