#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace eulersum {

// Series with an evaluated closed form.  D* are weight-shifted (H_{n-1})
// series, T* use H_n / Hbar_n; P/M marks the xⁿ vs (−x)ⁿ variant.
enum class series_id {
  d1, d2, d3, d4, d5,
  t2p, t2m, t3p, t3m, t4p, t4m, t5, t6p, t6m,
};

// Integrals of log products with an evaluated closed form.
enum class integral_id { l1, l2, l3a, l3b, l4, l6 };

enum class family_kind { h, hbar };        // H_n^(p) vs alternating H̄_n^(p)
enum class series_sign { plus, minus };    // xⁿ vs (−1)ⁿxⁿ term factor
enum class term_offset { n, n_minus_1 };   // F_n vs F_{n−1} in the numerator

// Σ_{n≥1} (±1)ⁿ F_n^{(p)} xⁿ / n^m with F ∈ {H, H̄}.
struct series_spec {
  family_kind family;
  int p;
  int m;
  series_sign sign;
};

struct series_info {
  series_id id;
  std::string_view name;        // canonical CLI name, e.g. "T3P"
  series_spec spec;
  term_offset offset;
  double oracle_scale;          // closed form = scale × oracle series value
  bool fixed_at_one;            // constant-only entry (evaluated at x = 1)
  std::string_view description; // the series, spelled out
};

struct integral_info {
  integral_id id;
  std::string_view name;        // canonical CLI name, e.g. "L3A"
  std::string_view description; // the integral, spelled out
};

std::span<const series_info> all_series();
std::span<const integral_info> all_integrals();

const series_info& info(series_id id);
const integral_info& info(integral_id id);

// Case-insensitive lookup by CLI name; nullopt when unknown.
std::optional<series_id> series_from_name(std::string_view name);
std::optional<integral_id> integral_from_name(std::string_view name);

}  // namespace eulersum
