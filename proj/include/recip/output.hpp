#ifndef RECIP_OUTPUT_HPP_
#define RECIP_OUTPUT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "recip/dedekind.hpp"
#include "recip/lattice.hpp"
#include "recip/rational.hpp"
#include "recip/scalar.hpp"
#include "recip/symbolic.hpp"

namespace recip {

/// Minimal JSON value with ordered object keys. Reals are written with 17
/// significant digits so that output is reproducible byte for byte.
class Value {
 public:
  enum class Kind { null, boolean, integer, real, string, array, object };

  Value() = default;
  Value(bool b) : kind_(Kind::boolean), bool_(b) {}
  Value(int i) : kind_(Kind::integer), int_(i) {}
  Value(long i) : kind_(Kind::integer), int_(i) {}
  Value(long long i) : kind_(Kind::integer), int_(i) {}
  Value(unsigned i) : kind_(Kind::integer), int_(i) {}
  Value(unsigned long i) : kind_(Kind::integer), int_(static_cast<std::int64_t>(i)) {}
  Value(double d) : kind_(Kind::real), real_(d) {}
  Value(const char* s) : kind_(Kind::string), str_(s) {}
  Value(std::string s) : kind_(Kind::string), str_(std::move(s)) {}

  static Value array() {
    Value v;
    v.kind_ = Kind::array;
    return v;
  }
  static Value object() {
    Value v;
    v.kind_ = Kind::object;
    return v;
  }

  Kind kind() const noexcept { return kind_; }

  /// Appends to an array.
  Value& push(Value v);
  /// Sets a key of an object, keeping first-insertion order.
  Value& set(const std::string& key, Value v);

  const std::vector<Value>& items() const noexcept { return items_; }
  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }

  std::string dump() const;
  /// Plain text for a CSV cell or a human-readable line; nested values are
  /// written as JSON.
  std::string text() const;

 private:
  void dump_to(std::string& out) const;

  Kind kind_ = Kind::null;
  bool bool_ = false;
  std::int64_t int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<Value> items_;
  std::vector<std::pair<std::string, Value>> fields_;
};

std::string format_real(double d);

/// Rationals become "p/q" strings, or 17-digit reals when numeric is set.
Value to_value(const Rational& q, bool numeric = false);
/// Complex values become {"re": x, "im": y}.
Value to_value(const Scalar& s, bool numeric = false);
Value to_value(const SymbolicValue& s);
Value to_value(std::span<const std::int64_t> v);
Value to_value(const Vec3& v);
Value to_value(const ReciprocityReport& report, bool numeric = false);
Value to_value(const HJSequence& hj);
Value to_value(const ConeFan& fan);

enum class OutputFormat { json, csv, human };

/// Writes one object: JSON, a CSV header plus one row, or key: value lines.
std::string render(const Value& object, OutputFormat format);
/// Writes a table of objects sharing the keys of the first row.
std::string render_table(const std::vector<Value>& rows, OutputFormat format);

}  // namespace recip

#endif  // RECIP_OUTPUT_HPP_
