#include <cmath>

#include "xpk/error.hpp"
#include "xpk/rational.hpp"
#include "xpk/rng.hpp"

namespace xpk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::CountTooLarge: return "CountTooLarge";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::PreconditionDensity: return "PreconditionDensity";
    case ErrorCode::PreconditionDegree: return "PreconditionDegree";
    case ErrorCode::InternalInvariantViolated: return "InternalInvariantViolated";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BiasTooLarge: return "BiasTooLarge";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational exact(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidParams, "non-finite value");
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

Rational decimal(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidParams, "non-finite value");
  std::int64_t pow10 = 1;
  for (int k = 0; k <= 15; ++k, pow10 *= 10) {
    const double scaled = x * static_cast<double>(pow10);
    if (std::fabs(scaled) >= 9e15) break;
    const auto num = static_cast<std::int64_t>(std::llround(scaled));
    Rational candidate(num, pow10);
    if (candidate.convert_to<double>() == x) return candidate;
  }
  // Not a short decimal (1/60, 1 + 0.04/7): the first continued-fraction
  // convergent that rounds back to x.
  const Rational target = exact(x);
  Rational rest = target;
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int i = 0; i < 80; ++i) {
    BigInt a = numerator(rest) / denominator(rest);
    if (rest < 0 && Rational(a) != rest) --a;
    BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    Rational candidate(h1, k1);
    if (candidate.convert_to<double>() == x) return candidate;
    if (Rational(a) == rest) break;
    rest = 1 / (rest - a);
  }
  return target;
}

std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t floor_tolerant(double x) {
  return static_cast<std::int64_t>(std::floor(x + 1e-9 * std::max(1.0, std::fabs(x))));
}

std::int64_t ceil_tolerant(double x) {
  return static_cast<std::int64_t>(std::ceil(x - 1e-9 * std::max(1.0, std::fabs(x))));
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  // Rejection sampling on the top of the 64-bit range.
  const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound + 1) % bound;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return x % bound;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace xpk
