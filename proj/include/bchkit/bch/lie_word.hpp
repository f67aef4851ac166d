#ifndef BCHKIT_BCH_LIE_WORD_HPP
#define BCHKIT_BCH_LIE_WORD_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bchkit {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

/// Word over {X, Y} read as the right-nested bracket
/// [w1,[w2,[...,[w_{n-1},w_n]...]]]; a single letter denotes itself.
///
/// Letters are packed into 64 bits with the last letter in bit 0, so
/// prefixing a letter (applying an adjoint action) is a shift-free OR.
class LieWord {
public:
  static constexpr int max_length = 63;

  LieWord() = default;

  explicit LieWord(Letter letter) : bits_(static_cast<std::uint64_t>(letter)), length_(1) {}

  static LieWord parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("LieWord: empty word");
    if (text.size() > static_cast<std::size_t>(max_length))
      throw std::invalid_argument("LieWord: word too long");
    LieWord w;
    for (char ch : text) {
      if (ch != 'X' && ch != 'Y')
        throw std::invalid_argument(std::string("LieWord: bad letter '") + ch + "'");
      w.bits_ = (w.bits_ << 1) | (ch == 'Y' ? 1u : 0u);
      ++w.length_;
    }
    return w;
  }

  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::uint64_t bits() const { return bits_; }

  /// Letter at position i counted from the left, 0-based.
  Letter at(int i) const {
    return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1u);
  }
  Letter last() const { return at(length_ - 1); }

  LieWord prefixed(Letter letter, int count = 1) const {
    if (length_ + count > max_length) throw std::length_error("LieWord: word too long");
    LieWord w = *this;
    for (int k = 0; k < count; ++k) {
      w.bits_ |= static_cast<std::uint64_t>(letter) << w.length_;
      ++w.length_;
    }
    return w;
  }

  LieWord appended(Letter letter) const {
    if (length_ + 1 > max_length) throw std::length_error("LieWord: word too long");
    LieWord w;
    w.bits_ = (bits_ << 1) | static_cast<std::uint64_t>(letter);
    w.length_ = length_ + 1;
    return w;
  }

  /// Swaps the last two letters (the innermost bracket's arguments).
  LieWord with_last_pair_swapped() const {
    if (length_ < 2) throw std::logic_error("LieWord: no pair to swap");
    std::uint64_t low = bits_ & 3u;
    std::uint64_t swapped = ((low & 1u) << 1) | (low >> 1);
    LieWord w = *this;
    w.bits_ = (bits_ & ~std::uint64_t{3}) | swapped;
    return w;
  }

  /// Length >= 2 with equal last two letters: the bracket [a,a] vanishes.
  bool denotes_zero() const {
    return length_ >= 2 && ((bits_ & 1u) == ((bits_ >> 1) & 1u));
  }

  bool contains(Letter letter) const {
    std::uint64_t mask = length_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length_) - 1);
    return letter == Letter::Y ? (bits_ & mask) != 0 : (~bits_ & mask) != 0;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < length_; ++i) s += at(i) == Letter::X ? 'X' : 'Y';
    return s;
  }

  /// Shorter words first; equal lengths compare lexicographically with X < Y.
  friend std::strong_ordering operator<=>(LieWord const &a, LieWord const &b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }
  friend bool operator==(LieWord const &, LieWord const &) = default;

  friend std::ostream &operator<<(std::ostream &os, LieWord const &w) {
    return os << w.to_string();
  }

private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

} // namespace bchkit

#endif
