#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The lnprob Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cstdint>
#include <initializer_list>
#include <random>

namespace lnprob {

/// splitmix64 finalizer; used to derive independent substream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Folds a list of keys into a seed. Order matters.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) noexcept
{
  std::uint64_t h = mix64(seed);
  for (auto k : keys)
  {
    h = mix64(h ^ mix64(k));
  }
  return h;
}

/**
 * Single-owner pseudo random stream.
 *
 * The integer and real mappings are written out here instead of using the
 * standard distributions, whose output is implementation defined. Given the
 * same seed a stream yields the same values on every platform.
 */
class RandomStream
{
public:
  explicit RandomStream(std::uint64_t seed)
    : engine_(seed)
  {}

  std::uint64_t next()
  {
    return engine_();
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01()
  {
    return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
  }

  /// Uniform integer on the closed range [lo, hi]; lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi)
  {
    auto const span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == ~std::uint64_t{0})
    {
      return static_cast<std::int64_t>(engine_());
    }
    std::uint64_t const range = span + 1;
    // rejection sampling removes modulo bias
    std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x;
    do
    {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
  }

  bool bernoulli(double p)
  {
    return uniform01() < p;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace lnprob
