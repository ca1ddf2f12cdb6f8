// Host-side values: what extraction produces and what relation-carrying
// types store in their cells. Self-contained so both the semantic layer
// and the extraction bridge can use it.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace mstt {

class HostValue;

/// An infinite stream observed by index. `at` must be total and pure.
struct HostStream {
  std::function<HostValue(std::uint64_t)> at;

  std::vector<HostValue> take(std::uint64_t k) const;
};

/// Dynamically tagged host value. `sym` covers small enumeration tags
/// (e.g. the sign of an integer representation) so values stay printable.
class HostValue {
 public:
  struct Pair;
  struct Fn {
    std::function<HostValue(const HostValue&)> call;
  };

  static HostValue nat(std::uint64_t n);
  static HostValue boolean(bool b);
  static HostValue sym(std::string s);
  static HostValue pair(HostValue a, HostValue b);
  static HostValue fn(std::function<HostValue(const HostValue&)> f);
  static HostValue stream(HostStream s);

  bool is_nat() const;
  bool is_bool() const;
  bool is_sym() const;
  bool is_pair() const;
  bool is_fn() const;
  bool is_stream() const;

  std::uint64_t as_nat() const;
  bool as_bool() const;
  const std::string& as_sym() const;
  const HostValue& first() const;
  const HostValue& second() const;
  HostValue apply(const HostValue& arg) const;
  const HostStream& as_stream() const;

  /// Structural equality; functions and streams are never equal.
  friend bool operator==(const HostValue& a, const HostValue& b);

  std::string show() const;

 private:
  using Node = std::variant<std::uint64_t, bool, std::string, Pair, Fn, HostStream>;
  explicit HostValue(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct HostValue::Pair {
  HostValue first, second;
};

}  // namespace mstt
