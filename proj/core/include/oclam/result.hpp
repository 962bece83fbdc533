#pragma once

#include <utility>
#include <variant>

namespace oclam {

// Minimal expected-style result; value or error, never both.
template <typename T, typename E>
class Expected {
public:
  Expected(T v) : v_(std::in_place_index<0>, std::move(v)) {}
  Expected(E e) : v_(std::in_place_index<1>, std::move(e)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<0>(v_); }
  T& value() & { return std::get<0>(v_); }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const E& error() const& { return std::get<1>(v_); }

private:
  std::variant<T, E> v_;
};

} // namespace oclam
