#ifndef HBE_CATALOG_HPP
#define HBE_CATALOG_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbe/exact_param.hpp"
#include "hbe/sym_value.hpp"

namespace hbe {

enum class Ring { Rational, SymValue };

struct IdentityDescriptor {
  std::string id;
  std::string title;
  // Where the identity comes from, e.g. "Rockett's reciprocal binomial sum".
  std::string source;
  bool requires_m = false;
  std::function<bool(const ExactParam &)> m_domain;
  std::int64_t n_min = 0;
  Ring ring = Ring::Rational;

  bool admits(const ExactParam &m) const { return requires_m && m_domain && m_domain(m); }
};

struct EvalPoint {
  std::optional<ExactParam> m;
  std::int64_t n = 0;

  friend bool operator==(const EvalPoint &, const EvalPoint &) = default;
};

// One evaluated side of an identity and the number of summed terms (1 for a
// closed form that is not a sum).
struct SideValue {
  SymValue value;
  std::int64_t terms = 0;
};

struct VerificationReport {
  std::string identity;
  EvalPoint point;
  SymValue lhs;
  SymValue rhs;
  bool equal = false;
  std::int64_t lhs_terms = 0;
  std::chrono::nanoseconds wall_time_lhs{0};
  std::chrono::nanoseconds wall_time_rhs{0};
};

using SideEvaluator = std::function<SideValue(const EvalPoint &)>;

struct Identity {
  IdentityDescriptor descriptor;
  SideEvaluator lhs;
  SideEvaluator rhs;
};

struct CatalogOptions {
  // Admit half-integer m for the order-2 family. Only meaningful once the
  // half-integer H^(2) closed form has passed its numeric gate.
  bool thm51_half_integer = false;
};

/// An ordered collection of identities keyed by id.
class Catalog {
public:
  void add(Identity identity);
  const Identity &get(std::string_view id) const;
  const Identity *find(std::string_view id) const;
  const std::vector<Identity> &identities() const { return items_; }
  std::size_t size() const { return items_.size(); }

  /// Throws DomainError unless `point` lies in the identity's domain.
  void check_point(const Identity &identity, const EvalPoint &point) const;

private:
  std::vector<Identity> items_;
};

/// The full built-in catalog.
Catalog make_catalog(const CatalogOptions &options = {});
const Catalog &default_catalog();

std::vector<IdentityDescriptor> registry();
const IdentityDescriptor &lookup(std::string_view id);

SideValue lhs_direct(std::string_view id, const EvalPoint &point,
                     const Catalog &catalog = default_catalog());
SideValue rhs_closed(std::string_view id, const EvalPoint &point,
                     const Catalog &catalog = default_catalog());

VerificationReport verify_point(std::string_view id, const EvalPoint &point,
                                const Catalog &catalog = default_catalog());

/// Verifies n = n_min..n_max crossed with the admissible members of m_set
/// (ignored when the identity takes no m). Reports come back sorted by
/// (m, n) whatever the thread count; threads == 0 means default_threads().
std::vector<VerificationReport> verify_range(std::string_view id, std::int64_t n_max,
                                             const std::vector<ExactParam> &m_set,
                                             const Catalog &catalog = default_catalog(),
                                             unsigned threads = 0);

/// All exact parameters with 2m in [lo, hi].
std::vector<ExactParam> exact_param_grid(std::int64_t twice_lo, std::int64_t twice_hi);

/// hardware_concurrency, capped by the HBE_THREADS environment variable.
unsigned default_threads();

} // namespace hbe

#endif // HBE_CATALOG_HPP
