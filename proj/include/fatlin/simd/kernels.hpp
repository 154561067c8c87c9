#pragma once

// Modular vector kernels for the oracle's elimination and evaluation loops.
//
// Every kernel has a portable scalar reference implementation. Vector variants
// must produce bit-identical results; tests/test_kernels.cpp checks each
// available variant against the scalar one on random inputs.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace fatlin::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Function table for one instruction set. All element arguments are
/// canonical residues mod p and p < 2^31.
struct ModKernels {
  Isa isa;
  /// y[i] <- (y[i] - f * x[i]) mod p. `f_shoup` is PrimeField::shoup(f).
  void (*submul)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t f, std::uint32_t f_shoup,
                 std::uint32_t p, std::size_t n);
  /// x[i] <- (f * x[i]) mod p.
  void (*scale)(std::uint32_t* x, std::uint32_t f, std::uint32_t f_shoup, std::uint32_t p,
                std::size_t n);
  /// sum_i a[i] * b[i] mod p.
  std::uint32_t (*dot)(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t p,
                       std::size_t n);
};

const ModKernels& scalar_kernels() noexcept;

/// Instruction sets compiled in and supported by the running CPU.
std::vector<Isa> available_isas();

const ModKernels& kernels_for(Isa isa);

/// Best available variant, chosen once at first use.
const ModKernels& kernels() noexcept;

}  // namespace fatlin::simd
