#pragma once

#include <stdexcept>
#include <string>

namespace theta {

enum class errc {
  parse_error,
  zero_inversion,
  incompatible_order,
  parent_mismatch,
  infinite_group,
  degenerate_input,
  internal_invariant,
  not_weight_one,
  not_a_representation,
  rank_too_large,
  no_invariant_form,
  non_unique_invariant_form,
  form_degenerate_on_block,
  no_isotropic_splitting,
  domain_error,
  invalid_argument,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace theta
