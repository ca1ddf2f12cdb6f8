// The type-checking monad: either a type error carrying a message, or a
// successful result. Errors short-circuit through and_then chains.
#pragma once

#include <string>
#include <utility>
#include <variant>

namespace mstt {

struct TypeError {
  std::string message;
};

template <class A>
class Tcm {
 public:
  static Tcm ok(A value) { return Tcm(std::variant<TypeError, A>(std::in_place_index<1>, std::move(value))); }
  static Tcm error(std::string message) {
    return Tcm(std::variant<TypeError, A>(std::in_place_index<0>, TypeError{std::move(message)}));
  }

  bool is_ok() const { return state_.index() == 1; }
  bool is_error() const { return state_.index() == 0; }

  const A& value() const& { return std::get<1>(state_); }
  A&& value() && { return std::get<1>(std::move(state_)); }
  const std::string& error_message() const { return std::get<0>(state_).message; }

  template <class F>
  auto and_then(F&& f) const& -> decltype(f(std::declval<const A&>())) {
    using R = decltype(f(std::declval<const A&>()));
    if (is_error()) return R::error(error_message());
    return f(value());
  }

  template <class F>
  auto map(F&& f) const& -> Tcm<decltype(f(std::declval<const A&>()))> {
    using B = decltype(f(std::declval<const A&>()));
    if (is_error()) return Tcm<B>::error(error_message());
    return Tcm<B>::ok(f(value()));
  }

 private:
  explicit Tcm(std::variant<TypeError, A> s) : state_(std::move(s)) {}
  std::variant<TypeError, A> state_;
};

}  // namespace mstt
