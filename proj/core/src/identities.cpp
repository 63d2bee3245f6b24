#include <eulersum/identities.hpp>

#include <eulersum/errors.hpp>

namespace eulersum {
namespace {

bigint ipow(long long base, int e) {
  return pow(bigint(base), static_cast<unsigned>(e));
}

// Σ_{ℓ=1..n} s(ℓ) / (ℓ^a (n+1−ℓ)^b), s = 1 or (−1)^(n+1−ℓ).
rational inner_sum(long long n, int a, int b, bool alternating) {
  rational acc(0);
  for (long long l = 1; l <= n; ++l) {
    rational t(bigint(1), ipow(l, a) * ipow(n + 1 - l, b));
    if (alternating && (n + 1 - l) % 2 != 0) t = -t;
    acc += t;
  }
  return acc;
}

// Σ_{q=1..n−1} n / (q^a (n−q)^b); empty for n = 1.
rational split_sum(long long n, int a, int b) {
  rational acc(0);
  for (long long q = 1; q < n; ++q)
    acc += rational(bigint(n), ipow(q, a) * ipow(n - q, b));
  return acc;
}

void require(bool ok, const char* msg) {
  if (!ok) throw domain_error(msg);
}

}  // namespace

identity_check convolution_check_h(long long n, int p, int k, h_variant variant) {
  require(n >= 1, "convolution_check_h: n must be >= 1");
  require(p >= 1, "convolution_check_h: p must be >= 1");

  identity_check out;
  out.lhs = harmonic_exact(n, p);
  out.parameters = {{"n", n}, {"p", p}};

  switch (variant) {
    case h_variant::general: {
      require(0 <= k && k <= p, "convolution_check_h: need 0 <= k <= p");
      out.name = "h_conv_general";
      out.parameters.emplace_back("k", k);
      rational rhs(0);
      for (int j = 1; j <= k; ++j) {
        rational s = inner_sum(n, j, p + 1 - j, false) * bigint(n + 1);
        rhs += (j % 2 != 0) ? s : -s;
      }
      rational last = inner_sum(n, k, p - k, false);
      rhs += (k % 2 == 0) ? last : -last;
      out.rhs = rhs;
      break;
    }
    case h_variant::odd_particular: {
      require(p % 2 == 1, "convolution_check_h: odd_particular needs odd p");
      out.name = "h_conv_odd";
      const int m = (p - 1) / 2;
      rational rhs(0);
      for (int j = 1; j <= m; ++j) {
        rational s = split_sum(n, j, 2 * m + 2 - j);
        rhs += (j % 2 != 0) ? s : -s;
      }
      rational mid = split_sum(n, m + 1, m + 1) / 2;
      rhs += (m % 2 == 0) ? mid : -mid;
      rhs += rational(bigint(1), ipow(n, p));
      out.rhs = rhs;
      break;
    }
    case h_variant::even_particular: {
      require(p >= 2 && p % 2 == 0, "convolution_check_h: even_particular needs even p");
      out.name = "h_conv_even";
      const int m = p / 2;
      rational rhs(0);
      for (int j = 1; j <= m; ++j) {
        rational s = split_sum(n, j, 2 * m + 1 - j);
        rhs += (j % 2 != 0) ? s : -s;
      }
      // the middle block has no n factor: Σ 1/(q^m (n−q)^m)
      rational mid(0);
      for (long long q = 1; q < n; ++q)
        mid += rational(bigint(1), ipow(q, m) * ipow(n - q, m));
      rhs += (m % 2 == 0) ? mid : -mid;
      rhs += rational(bigint(1), ipow(n, p));
      out.rhs = rhs;
      break;
    }
  }
  out.pass = (out.lhs == out.rhs);
  return out;
}

identity_check convolution_check_hbar(long long n, int p, int k, hbar_variant variant) {
  require(n >= 1, "convolution_check_hbar: n must be >= 1");
  require(p >= 1, "convolution_check_hbar: p must be >= 1");

  identity_check out;
  out.parameters = {{"n", n}, {"p", p}};

  // full signed j-sum shared by both parity cases
  auto full_sum = [&] {
    rational s(0);
    for (int j = 1; j <= p; ++j) {
      rational t = inner_sum(n, j, p + 1 - j, true);
      s += (j % 2 != 0) ? -t : t;  // (−1)^j factor
    }
    return s;
  };

  switch (variant) {
    case hbar_variant::general: {
      require(0 <= k && k <= p, "convolution_check_hbar: need 0 <= k <= p");
      out.name = "hbar_conv_general";
      out.parameters.emplace_back("k", k);
      out.lhs = alt_harmonic_exact(n, p);
      rational rhs(0);
      for (int j = 1; j <= k; ++j) {
        rational s = inner_sum(n, j, p + 1 - j, true) * bigint(n + 1);
        rhs += (j % 2 != 0) ? -s : s;  // (−1)^j
      }
      rational last = inner_sum(n, k, p - k, true);
      rhs += (k % 2 == 0) ? -last : last;  // (−1)^(k+1)
      out.rhs = rhs;
      break;
    }
    case hbar_variant::even_case: {
      require((n + p) % 2 == 0, "convolution_check_hbar: even_case needs p+n even");
      out.name = "hbar_conv_evencase";
      out.lhs = alt_harmonic_exact(n, p);
      out.rhs = full_sum() * rational(bigint(n + 1), bigint(2));
      break;
    }
    case hbar_variant::odd_case: {
      require((n + p) % 2 == 1, "convolution_check_hbar: odd_case needs p+n odd");
      out.name = "hbar_conv_oddcase";
      out.lhs = rational(0);
      out.rhs = full_sum();
      break;
    }
  }
  out.pass = (out.lhs == out.rhs);
  return out;
}

}  // namespace eulersum
