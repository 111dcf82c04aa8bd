#include "recip/output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace recip {

Value& Value::push(Value v) {
  if (kind_ != Kind::array) throw std::logic_error("push on a non-array value");
  items_.push_back(std::move(v));
  return *this;
}

Value& Value::set(const std::string& key, Value v) {
  if (kind_ != Kind::object) throw std::logic_error("set on a non-object value");
  for (auto& [k, existing] : fields_) {
    if (k == key) {
      existing = std::move(v);
      return *this;
    }
  }
  fields_.emplace_back(key, std::move(v));
  return *this;
}

std::string format_real(double d) {
  if (!std::isfinite(d)) return "null";
  if (d == 0.0) d = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

namespace {

void escape(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

void Value::dump_to(std::string& out) const {
  switch (kind_) {
    case Kind::null: out += "null"; break;
    case Kind::boolean: out += bool_ ? "true" : "false"; break;
    case Kind::integer: out += std::to_string(int_); break;
    case Kind::real: out += format_real(real_); break;
    case Kind::string: escape(str_, out); break;
    case Kind::array:
      out += '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i != 0) out += ',';
        items_[i].dump_to(out);
      }
      out += ']';
      break;
    case Kind::object:
      out += '{';
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i != 0) out += ',';
        escape(fields_[i].first, out);
        out += ':';
        fields_[i].second.dump_to(out);
      }
      out += '}';
      break;
  }
}

std::string Value::dump() const {
  std::string out;
  dump_to(out);
  return out;
}

std::string Value::text() const {
  if (kind_ == Kind::string) return str_;
  return dump();
}

Value to_value(const Rational& q, bool numeric) {
  if (numeric) return Value(q.get_d());
  return Value(to_string(q));
}

Value to_value(const Scalar& s, bool numeric) {
  if (const auto* q = std::get_if<Rational>(&s)) return to_value(*q, numeric);
  if (const auto* d = std::get_if<double>(&s)) return Value(*d);
  const auto z = std::get<std::complex<double>>(s);
  Value v = Value::object();
  v.set("re", z.real());
  v.set("im", z.imag());
  return v;
}

Value to_value(const SymbolicValue& s) {
  Value v = Value::object();
  v.set("coeff", to_string(s.coeff()));
  v.set("pi_power", s.pi_power());
  v.set("iota_power", s.iota_power());
  return v;
}

Value to_value(std::span<const std::int64_t> values) {
  Value v = Value::array();
  for (auto x : values) v.push(static_cast<long long>(x));
  return v;
}

Value to_value(const Vec3& v) { return to_value(std::span<const std::int64_t>(v)); }

Value to_value(const ReciprocityReport& report, bool numeric) {
  Value v = Value::object();
  v.set("lhs", to_value(report.lhs, numeric));
  v.set("rhs", to_value(report.rhs, numeric));
  v.set("residual", to_value(report.residual, numeric));
  v.set("method", report.method);
  if (report.bound) v.set("N", *report.bound);
  return v;
}

Value to_value(const HJSequence& hj) {
  Value v = Value::object();
  v.set("m", to_value(std::span<const std::int64_t>(hj.m)));
  v.set("mbar", to_value(std::span<const std::int64_t>(hj.mbar)));
  v.set("k", to_value(std::span<const std::int64_t>(hj.k)));
  return v;
}

Value to_value(const ConeFan& fan) {
  Value v = Value::object();
  v.set("normal", to_value(fan.normal));
  Value gens = Value::array();
  for (const auto& g : fan.generators) gens.push(to_value(g));
  v.set("generators", std::move(gens));
  v.set("hj", to_value(fan.hj));
  return v;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const Value& object, OutputFormat format) { return render_table({object}, format); }

std::string render_table(const std::vector<Value>& rows, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::json:
      if (rows.size() == 1) {
        out = rows.front().dump();
      } else {
        Value arr = Value::array();
        for (const auto& r : rows) arr.push(r);
        out = arr.dump();
      }
      out += '\n';
      return out;
    case OutputFormat::csv: {
      if (rows.empty()) return out;
      const auto& keys = rows.front().fields();
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i != 0) out += ',';
        out += csv_cell(keys[i].first);
      }
      out += '\n';
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.fields().size(); ++i) {
          if (i != 0) out += ',';
          out += csv_cell(r.fields()[i].second.text());
        }
        out += '\n';
      }
      return out;
    }
    case OutputFormat::human:
      for (std::size_t n = 0; n < rows.size(); ++n) {
        if (n != 0) out += '\n';
        for (const auto& [k, v] : rows[n].fields()) out += k + ": " + v.text() + '\n';
      }
      return out;
  }
  return out;
}

}  // namespace recip
