#include <eulersum/registry.hpp>

#include <array>
#include <cctype>

namespace eulersum {
namespace {

constexpr std::array<series_info, 14> k_series{{
    {series_id::d1, "D1", {family_kind::h, 1, 1, series_sign::plus},
     term_offset::n_minus_1, 1.0, false,
     "sum_{n>=1} H_{n-1} x^n / n"},
    {series_id::d2, "D2", {family_kind::h, 1, 2, series_sign::plus},
     term_offset::n_minus_1, 1.0, false,
     "sum_{n>=1} H_{n-1} x^n / n^2"},
    {series_id::d3, "D3", {family_kind::h, 1, 2, series_sign::minus},
     term_offset::n_minus_1, 1.0, false,
     "sum_{n>=1} (-1)^n H_{n-1} x^n / n^2"},
    {series_id::d4, "D4", {family_kind::h, 1, 3, series_sign::plus},
     term_offset::n_minus_1, 1.0, true,
     "sum_{n>=1} H_{n-1} / n^3"},
    {series_id::d5, "D5", {family_kind::h, 1, 3, series_sign::minus},
     term_offset::n_minus_1, -1.0, true,
     "sum_{n>=1} (-1)^(n-1) H_{n-1} / n^3"},
    {series_id::t2p, "T2P", {family_kind::h, 1, 3, series_sign::plus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} H_n x^n / n^3"},
    {series_id::t2m, "T2M", {family_kind::h, 1, 3, series_sign::minus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} H_n (-x)^n / n^3"},
    {series_id::t3p, "T3P", {family_kind::h, 2, 1, series_sign::plus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} H_n^(2) x^n / n"},
    {series_id::t3m, "T3M", {family_kind::h, 2, 1, series_sign::minus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} H_n^(2) (-x)^n / n"},
    {series_id::t4p, "T4P", {family_kind::h, 2, 2, series_sign::plus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} H_n^(2) x^n / n^2"},
    {series_id::t4m, "T4M", {family_kind::h, 2, 2, series_sign::minus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} H_n^(2) (-x)^n / n^2"},
    {series_id::t5, "T5", {family_kind::hbar, 1, 1, series_sign::plus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} Hbar_n x^n / n"},
    {series_id::t6p, "T6P", {family_kind::hbar, 2, 1, series_sign::plus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} Hbar_n^(2) x^n / n"},
    {series_id::t6m, "T6M", {family_kind::hbar, 2, 1, series_sign::minus},
     term_offset::n, 1.0, false,
     "sum_{n>=1} Hbar_n^(2) (-x)^n / n"},
}};

constexpr std::array<integral_info, 6> k_integrals{{
    {integral_id::l1, "L1", "integral_0^x log^2(t) log(1-t) / (1-t) dt"},
    {integral_id::l2, "L2", "integral_0^x log^2(t) log(1-t) / t dt"},
    {integral_id::l3a, "L3A", "integral_0^x log^2(1-t) / t dt"},
    {integral_id::l3b, "L3B", "integral_0^x log^2(1+t) / t dt"},
    {integral_id::l4, "L4", "integral_0^x log^2(t) log(1+t) / (1+t) dt"},
    {integral_id::l6, "L6", "integral_0^x log(1-t) log(1+t) / t dt"},
}};

bool iequal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::toupper(static_cast<unsigned char>(a[i])) !=
        std::toupper(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

}  // namespace

std::span<const series_info> all_series() { return k_series; }
std::span<const integral_info> all_integrals() { return k_integrals; }

const series_info& info(series_id id) {
  return k_series[static_cast<size_t>(id)];
}

const integral_info& info(integral_id id) {
  return k_integrals[static_cast<size_t>(id)];
}

std::optional<series_id> series_from_name(std::string_view name) {
  for (const auto& s : k_series)
    if (iequal(s.name, name)) return s.id;
  return std::nullopt;
}

std::optional<integral_id> integral_from_name(std::string_view name) {
  for (const auto& s : k_integrals)
    if (iequal(s.name, name)) return s.id;
  return std::nullopt;
}

}  // namespace eulersum
