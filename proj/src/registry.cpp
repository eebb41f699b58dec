#include "qv/registry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "registry_detail.hpp"

namespace qv {

const char* family_name(Family f) {
  switch (f) {
    case Family::Base: return "base";
    case Family::Watson: return "watson";
    case Family::Dixon: return "dixon";
    case Family::Whipple: return "whipple";
    case Family::Relation: return "relation";
    case Family::Equivalence: return "equivalence";
    case Family::Example: return "example";
  }
  return "unknown";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::Base, Family::Watson, Family::Dixon, Family::Whipple,
                   Family::Relation, Family::Equivalence, Family::Example}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

namespace {

// Presentation order of the source document. Kept separate from the sorted
// roster so both orderings stay available to reports.
const std::vector<std::string>& presentation_order() {
  static const std::vector<std::string> order = {
      "sear", "andrews-watson", "jain-watson", "bailey-dixon", "another-dixon",
      "andrews-whipple", "jain-whipple",

      "prop-a", "terminating-65", "equation-a", "prop-a-ex-m1", "thm-a", "equation-c",
      "thm-a-ex-l1m0", "thm-a-ex-l1m1", "equivalence-a", "equivalence-b", "equivalence-c",

      "prop-b", "equivalence-d", "prop-b-ex-m1", "prop-c", "prop-c-ex-m1", "thm-b",
      "equation-aa", "thm-b-ex-l1m0", "thm-b-ex-l1m1", "equivalence-e", "thm-c",
      "thm-c-ex-l1m1", "equivalence-f",

      "thm-d", "dixon-relation-a", "thm-d-ex-l0m1", "thm-d-ex-l1m1", "thm-e",
      "thm-e-ex-l0m1", "thm-e-ex-l1m1", "thm-f", "thm-f-ex-l1m1", "thm-g",
      "dixon-relation-b", "thm-g-ex-l0m1", "thm-g-ex-l1m0", "thm-g-ex-l1m1", "thm-h",
      "thm-h-ex-l0m1", "thm-h-ex-l1m1", "thm-i", "thm-i-ex-l1m0", "thm-i-ex-l1m1",
      "thm-j", "thm-j-ex-l1m1",

      "thm-k", "whipple-relation-a", "thm-k-ex-l0m1", "thm-k-ex-l1m0", "thm-k-ex-l1m1",
      "thm-l", "thm-l-ex-l1m0", "thm-l-ex-l1m1", "thm-m", "whipple-relation-b",
      "thm-m-ex-l0m1", "thm-m-ex-l1m0", "thm-m-ex-l1m1", "thm-n", "thm-n-ex-l0m1",
      "thm-n-ex-l1m1", "thm-o", "thm-o-ex-l1m0", "thm-o-ex-l1m1", "thm-p",
      "thm-p-ex-l1m1",
  };
  return order;
}

struct Tables {
  std::vector<IdentitySpec> entries;
  std::vector<IdentitySpec> hidden;
  std::map<std::string, const IdentitySpec*> by_id;
};

const Tables& tables() {
  static const Tables* t = [] {
    auto* tt = new Tables;
    detail::append_base_entries(tt->entries);
    detail::append_watson_entries(tt->entries);
    detail::append_dixon_entries(tt->entries);
    detail::append_whipple_entries(tt->entries);
    detail::append_hidden_fixtures(tt->hidden);

    std::sort(tt->entries.begin(), tt->entries.end(),
              [](const IdentitySpec& x, const IdentitySpec& y) { return x.id < y.id; });

    for (const auto& e : tt->entries) {
      if (!tt->by_id.emplace(e.id, &e).second) {
        throw std::logic_error("duplicate registry id: " + e.id);
      }
    }
    for (const auto& e : tt->hidden) {
      if (!tt->by_id.emplace(e.id, &e).second) {
        throw std::logic_error("duplicate registry id: " + e.id);
      }
    }

    const auto& order = presentation_order();
    if (order.size() != tt->entries.size()) {
      throw std::logic_error("registry order table out of sync with entries");
    }
    for (const auto& id : order) {
      auto it = tt->by_id.find(id);
      if (it == tt->by_id.end()) {
        throw std::logic_error("registry order table names unknown id: " + id);
      }
    }
    return tt;
  }();
  return *t;
}

}  // namespace

const std::vector<IdentitySpec>& roster() { return tables().entries; }

const std::vector<std::string>& document_order() {
  tables();  // force the consistency checks
  return presentation_order();
}

const IdentitySpec* find_identity(const std::string& id) {
  const auto& t = tables();
  auto it = t.by_id.find(id);
  return it == t.by_id.end() ? nullptr : it->second;
}

std::vector<const IdentitySpec*> select_identities(const std::string& selector) {
  std::vector<const IdentitySpec*> out;
  if (selector == "all") {
    for (const auto& e : roster()) out.push_back(&e);
    return out;
  }
  if (auto fam = family_from_name(selector)) {
    for (const auto& e : roster()) {
      if (e.family == *fam) out.push_back(&e);
    }
    return out;
  }
  if (const IdentitySpec* e = find_identity(selector)) out.push_back(e);
  return out;
}

namespace {

ExactScalar eval_side(const IdentitySpec& spec, const ParamPoint& p,
                      const std::function<ExactScalar(const ParamPoint&)>& side,
                      const char* side_name) {
  p.validate();
  if (!side) {
    throw std::logic_error(spec.id + " has no " + side_name + " evaluation");
  }
  try {
    return side(p);
  } catch (const PoleError& e) {
    throw PoleError(spec.id + ": " + std::string(e.what()));
  }
}

}  // namespace

ExactScalar eval_lhs(const IdentitySpec& spec, const ParamPoint& p) {
  return eval_side(spec, p, spec.lhs, "lhs");
}

ExactScalar eval_rhs_closed(const IdentitySpec& spec, const ParamPoint& p) {
  return eval_side(spec, p, spec.rhs_closed, "rhs_closed");
}

ExactScalar eval_rhs_derived(const IdentitySpec& spec, const ParamPoint& p) {
  return eval_side(spec, p, spec.rhs_derived, "rhs_derived");
}

namespace detail {

ExactScalar closed_at(const char* id, const ParamPoint& p, const char* requested_by) {
  const IdentitySpec* spec = find_identity(id);
  if (spec == nullptr) {
    throw std::logic_error(std::string(requested_by) + " composes unknown entry " + id);
  }
  if (spec->constraints && !spec->constraints(p)) {
    throw ConstraintError(std::string(requested_by) + ": inner entry " + id +
                          " rejects the transformed point (" + spec->constraint_text + ")");
  }
  return eval_rhs_closed(*spec, p);
}

}  // namespace detail

}  // namespace qv
