#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qv/qalg.hpp"

namespace qv {

// Thrown when an identity is evaluated at a point that violates one of its
// side conditions (for example m <= n), or when a derived evaluation needs an
// inner identity outside its own domain.
struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { Base, Watson, Dixon, Whipple, Relation, Equivalence, Example };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// How an identity consumes one of the shift parameters. Free entries iterate
// over the verification grid, fixed entries pin the value, unused entries
// collapse that grid dimension entirely.
enum class ParamMode { Free, Fixed, Unused };

struct IdentitySpec {
  std::string id;
  std::string citation;
  Family family = Family::Base;

  ParamMode ell_mode = ParamMode::Free;
  ParamMode m_mode = ParamMode::Free;
  long ell_fixed = 0;
  long m_fixed = 0;

  // Entries stated through the signed relation slots record which signs the
  // registered evaluation uses (u = sign_u * ell, v = sign_v * m).
  bool uses_uv = false;
  int sign_u = 1;
  int sign_v = 1;

  std::string constraint_text;
  std::function<bool(const ParamPoint&)> constraints;

  std::function<ExactScalar(const ParamPoint&)> lhs;
  std::function<ExactScalar(const ParamPoint&)> rhs_closed;
  // Optional second route: the statement recomposed from the relation it was
  // proved with plus the closed form of the inner identity. Empty when the
  // entry has no such route.
  std::function<ExactScalar(const ParamPoint&)> rhs_derived;

  bool has_derived() const { return static_cast<bool>(rhs_derived); }
};

// Five free parameters plus the terminating index for the balanced series
// transformation used as the outermost reduction step.
struct SearPoint {
  ExactScalar a, b, c, d, e;
  int n = 0;
};

ExactScalar sear_lhs(const SearPoint& s, const ExactScalar& q);
ExactScalar sear_rhs(const SearPoint& s, const ExactScalar& q);
SearPoint sear_embed(const ParamPoint& p);

// All public entries, sorted by id.
const std::vector<IdentitySpec>& roster();

// The same ids in the order the source document presents them.
const std::vector<std::string>& document_order();

// Lookup by exact id. Also resolves intentionally-broken hidden fixtures that
// are excluded from roster(). Returns nullptr when nothing matches.
const IdentitySpec* find_identity(const std::string& id);

// Resolve "all", a family name, or a single id to a list of entries in
// roster order. Unknown selectors yield an empty list.
std::vector<const IdentitySpec*> select_identities(const std::string& selector);

// Evaluation wrappers. They validate the point, re-throw PoleError with the
// identity id attached, and surface ConstraintError unchanged.
ExactScalar eval_lhs(const IdentitySpec& spec, const ParamPoint& p);
ExactScalar eval_rhs_closed(const IdentitySpec& spec, const ParamPoint& p);
ExactScalar eval_rhs_derived(const IdentitySpec& spec, const ParamPoint& p);

}  // namespace qv
