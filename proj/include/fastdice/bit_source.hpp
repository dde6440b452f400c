#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

namespace fastdice {

// A stateful supplier of unbiased bits that counts every bit it serves.
//
// Subclasses implement draw_bit(); the counter is maintained here so that
// bits_consumed() always equals the number of successful next_bit() calls
// since construction or the last reset_counter().
//
// Instances are single-owner: do not share one across threads.
class RandomBitSource {
 public:
  virtual ~RandomBitSource() = default;

  unsigned next_bit() {
    const unsigned bit = draw_bit();
    ++consumed_;
    return bit;
  }

  std::uint64_t bits_consumed() const noexcept { return consumed_; }
  void reset_counter() noexcept { consumed_ = 0; }

 protected:
  virtual unsigned draw_bit() = 0;

 private:
  std::uint64_t consumed_ = 0;
};

// Deterministic stream of 32-bit words feeding a BufferedWordSource.
class WordGenerator {
 public:
  virtual ~WordGenerator() = default;
  virtual std::uint32_t next_word() = 0;
};

// MT19937, the generator used by the reference flip() implementation.
// The 64-bit seed is split into two 32-bit halves fed to std::seed_seq.
class Mt19937Words final : public WordGenerator {
 public:
  explicit Mt19937Words(std::uint64_t seed);
  std::uint32_t next_word() override { return static_cast<std::uint32_t>(engine_()); }

 private:
  std::mt19937 engine_;
};

// SplitMix64; each word is the high half of one 64-bit output.
class SplitMix64Words final : public WordGenerator {
 public:
  explicit SplitMix64Words(std::uint64_t seed) : state_(seed) {}
  std::uint32_t next_word() override;

 private:
  std::uint64_t state_;
};

// Replays a fixed list of words; throws ScriptExhausted past the end.
class ScriptedWords final : public WordGenerator {
 public:
  explicit ScriptedWords(std::vector<std::uint32_t> words) : words_(std::move(words)) {}
  std::uint32_t next_word() override;

 private:
  std::vector<std::uint32_t> words_;
  std::size_t cursor_ = 0;
};

// flip() over buffered 32-bit words: bits are served most-significant
// first and a fresh word is fetched after every 32 bits.
class BufferedWordSource final : public RandomBitSource {
 public:
  // Seeds the default MT19937 word generator.
  explicit BufferedWordSource(std::uint64_t seed);
  explicit BufferedWordSource(std::unique_ptr<WordGenerator> words);

  std::uint64_t words_fetched() const noexcept { return words_fetched_; }

 protected:
  unsigned draw_bit() override {
    if (pos_ == 0) {
      word_ = words_->next_word();
      ++words_fetched_;
      pos_ = 32;
    }
    --pos_;
    return (word_ >> pos_) & 1u;
  }

 private:
  std::unique_ptr<WordGenerator> words_;
  std::uint32_t word_ = 0;
  int pos_ = 0;
  std::uint64_t words_fetched_ = 0;
};

// Serves an explicit bit script in order; throws ScriptExhausted when empty.
class ScriptedBitSource final : public RandomBitSource {
 public:
  explicit ScriptedBitSource(std::vector<std::uint8_t> bits);
  ScriptedBitSource(std::initializer_list<int> bits);

  std::size_t remaining() const noexcept { return bits_.size() - cursor_; }

 protected:
  unsigned draw_bit() override;

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t cursor_ = 0;
};

}  // namespace fastdice
