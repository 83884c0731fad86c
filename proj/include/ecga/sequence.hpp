#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ecga/bitstring.hpp"

namespace ecga {

/// Symbols in [0, 2^m - 1], m in [1, 16].
class Sequence {
 public:
  using Symbol = std::uint32_t;

  explicit Sequence(unsigned bits_per_symbol = 8);
  /// Throws InvalidConfig if any symbol is out of range for m.
  Sequence(std::vector<Symbol> symbols, unsigned bits_per_symbol);

  [[nodiscard]] static Sequence from_bytes(std::span<const std::uint8_t> bytes);

  [[nodiscard]] unsigned bits_per_symbol() const noexcept { return m_; }
  [[nodiscard]] std::size_t alphabet_size() const noexcept { return std::size_t{1} << m_; }
  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Unchecked-range mutation for the optimizer's hot loop; callers keep
  /// values below 2^m.
  [[nodiscard]] std::vector<Symbol>& mutable_symbols() noexcept { return symbols_; }

  void push_back(Symbol s);
  void append(const Sequence& other);
  void truncate(std::size_t n);

  /// One byte per symbol; requires m <= 8.
  [[nodiscard]] std::vector<std::uint8_t> to_bytes() const;
  /// Fixed-width m-bit big-endian encoding of each symbol.
  [[nodiscard]] BitString to_bits() const;

  /// Occurrence count of every symbol, indexed by symbol.
  [[nodiscard]] std::vector<std::size_t> histogram() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  unsigned m_;
  std::vector<Symbol> symbols_;
};

}  // namespace ecga
