/*
   Copyright 2026 The homsys Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Constructions turning an s x (n+1) homogeneous system into a square one.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homsys/field.hpp"
#include "homsys/poly.hpp"

namespace homsys {

enum class SquaringMethod { Random, LambdaExt, LambdaInt, Ground };

struct SquaringPlan {
  SquaringMethod method = SquaringMethod::Random;
  std::optional<FieldElem> lambda;
  /// (n+1) x s coefficient matrix for Random.
  std::optional<std::vector<std::vector<FieldElem>>> alpha;
  std::optional<std::uint64_t> seed;
  /// Coefficient field of the output; derived from the input when null.
  FieldRef target_ctx = nullptr;
  /// Sampling field size for Random (default 4 * 3^(n+1)).
  std::optional<std::uint64_t> field_size;
  /// Lets LambdaInt accept lambda <= 2. Only meant for negative tests.
  bool allow_unsound_lambda = false;
};

struct EpsilonVector {
  std::vector<FieldElem> values;
};

inline constexpr const char* kRngName = "mt19937_64";

/// Uniform integer in [0, bound) by rejection sampling.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Independent per-trial seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

std::uint64_t default_field_size(std::size_t num_vars);
/// Smallest field of the input's characteristic with at least `size`
/// elements and containing the input field; Q in characteristic 0.
/// Extension inputs are embedded through the first root of their modulus.
FieldRef sampling_field(FieldRef base, std::uint64_t size);

/// Raises every polynomial to the lcm L of the degrees by replacing f of
/// degree d < L with the family x_i^(L-d) f, i = 0..n.
PolySystem pad_degrees(const PolySystem& sys);

PolySystem random_square(const PolySystem& sys, const SquaringPlan& plan);

/// Rows f_{n+1} + l y1^2, f_{n+i} - y_{i-1}^2 + l y_i^2, f_s - y_{s-n-1}^2.
PolySystem lambda_chain_square(const PolySystem& sys, const SquaringPlan& plan);

/// (-1)^(m-1) (e_1 + e_2 l + ... + e_m l^(m-1)).
FieldElem epsilon_determinant(const EpsilonVector& eps, const FieldElem& lambda);

/// Ground-field construction over F_p with variables (x, y_1..y_{m-1}, lam).
/// When `modulus` is absent the first irreducible of degree s-n is used.
PolySystem ground_field_square(const PolySystem& sys, const std::optional<gf::Coeffs>& modulus = std::nullopt);

/// eps_i = a0^(m-i) f_{n+i}(a) when `ground_scaling`, f_{n+i}(a) otherwise.
/// Throws when `a` violates the square-gadget constraints.
EpsilonVector structured_epsilons(const PolySystem& source, const std::vector<FieldElem>& a, bool ground_scaling = false);

/// Throws std::invalid_argument naming the first violated condition.
void require_gadget_shape(const PolySystem& sys, const std::string& who);

}  // namespace homsys
