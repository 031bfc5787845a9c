#include "adasat/term.hpp"

#include <stdexcept>

namespace adasat {

Term Term::constant(int v) {
  if (v != 0 && v != 1) throw std::invalid_argument("boolean constant must be 0 or 1");
  return Term(v == 0 ? kConstVal0 : kConstVal1);
}

Term Term::var(int32_t id) {
  if (id < 0) throw std::invalid_argument("negative variable id");
  return Term(id);
}

int Term::const_value() const {
  if (!is_const()) throw std::logic_error("const_value of a variable term");
  return code_ == kConstVal0 ? 0 : 1;
}

int32_t Term::var_id() const {
  if (!is_var()) throw std::logic_error("var_id of a constant term");
  return code_;
}

std::string Term::to_string() const {
  if (is_const()) return std::to_string(const_value());
  return "v" + std::to_string(code_);
}

}  // namespace adasat
