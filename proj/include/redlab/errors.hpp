#pragma once

#include <stdexcept>
#include <string>

namespace redlab {

enum class errc {
  invalid_input,
  invalid_point,
  invalid_exponents,
  oracle_bound_exceeded,
  not_successive,
  not_disjoint,
  domain_mismatch,
  type_mismatch,
  schedule_invalid,
  schedule_mismatch,
  value_outside_p,
  infeasible,
  unknown_node,
  malformed,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid-input";
    case errc::invalid_point: return "invalid-point";
    case errc::invalid_exponents: return "invalid-exponents";
    case errc::oracle_bound_exceeded: return "oracle-bound-exceeded";
    case errc::not_successive: return "not-successive";
    case errc::not_disjoint: return "not-disjoint";
    case errc::domain_mismatch: return "domain-mismatch";
    case errc::type_mismatch: return "type-mismatch";
    case errc::schedule_invalid: return "schedule-invalid";
    case errc::schedule_mismatch: return "schedule-mismatch";
    case errc::value_outside_p: return "value-outside-P";
    case errc::infeasible: return "infeasible";
    case errc::unknown_node: return "unknown-node";
    case errc::malformed: return "malformed";
  }
  return "unknown";
}

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool cond, errc kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace redlab
