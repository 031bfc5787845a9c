#pragma once

#include <cstdint>
#include <string>

namespace adasat {

// A term is either one of the boolean constants 0/1 or an engine variable.
// Variable ids are dense indices handed out by the constraint store.
class Term {
public:
  Term() : code_(kConstVal0) {}

  static Term constant(int v);     // v must be 0 or 1
  static Term var(int32_t id);     // id must be >= 0

  bool is_const() const { return code_ < 0; }
  bool is_var() const { return code_ >= 0; }
  int const_value() const;         // throws std::logic_error on a variable
  int32_t var_id() const;          // throws std::logic_error on a constant

  bool operator==(const Term&) const = default;

  std::string to_string() const;   // "0", "1" or "v<id>"

private:
  static constexpr int32_t kConstVal0 = -1;
  static constexpr int32_t kConstVal1 = -2;
  explicit Term(int32_t code) : code_(code) {}
  int32_t code_;
};

}  // namespace adasat
