#include "ecga/sequence.hpp"

#include <string>

#include "ecga/error.hpp"

namespace ecga {

namespace {

void check_m(unsigned m) {
  if (m < 1 || m > 16) throw Error(ErrorCode::InvalidConfig, "bits per symbol must be in [1, 16]");
}

}  // namespace

Sequence::Sequence(unsigned bits_per_symbol) : m_(bits_per_symbol) { check_m(m_); }

Sequence::Sequence(std::vector<Symbol> symbols, unsigned bits_per_symbol)
    : m_(bits_per_symbol), symbols_(std::move(symbols)) {
  check_m(m_);
  const Symbol limit = Symbol{1} << m_;
  for (Symbol s : symbols_) {
    if (s >= limit) {
      throw Error(ErrorCode::InvalidConfig,
                  "symbol " + std::to_string(s) + " exceeds 2^" + std::to_string(m_) + " - 1");
    }
  }
}

Sequence Sequence::from_bytes(std::span<const std::uint8_t> bytes) {
  Sequence out(8);
  out.symbols_.assign(bytes.begin(), bytes.end());
  return out;
}

void Sequence::push_back(Symbol s) {
  if (s >= (Symbol{1} << m_)) throw Error(ErrorCode::InvalidConfig, "symbol out of range");
  symbols_.push_back(s);
}

void Sequence::append(const Sequence& other) {
  if (other.m_ != m_) throw Error(ErrorCode::InvalidConfig, "cannot append sequences of different m");
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

void Sequence::truncate(std::size_t n) {
  if (n < symbols_.size()) symbols_.resize(n);
}

std::vector<std::uint8_t> Sequence::to_bytes() const {
  if (m_ > 8) throw Error(ErrorCode::InvalidConfig, "byte export needs m <= 8");
  return {symbols_.begin(), symbols_.end()};
}

BitString Sequence::to_bits() const {
  std::vector<std::uint8_t> bits;
  bits.reserve(symbols_.size() * m_);
  for (Symbol s : symbols_) {
    for (int shift = static_cast<int>(m_) - 1; shift >= 0; --shift) bits.push_back((s >> shift) & 1U);
  }
  return BitString(std::move(bits));
}

std::vector<std::size_t> Sequence::histogram() const {
  std::vector<std::size_t> counts(alphabet_size(), 0);
  for (Symbol s : symbols_) ++counts[s];
  return counts;
}

}  // namespace ecga
