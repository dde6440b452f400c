#include "fastdice/bit_source.hpp"

#include "fastdice/errors.hpp"

namespace fastdice {

namespace {

std::mt19937 seeded_mt(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937(seq);
}

}  // namespace

Mt19937Words::Mt19937Words(std::uint64_t seed) : engine_(seeded_mt(seed)) {}

std::uint32_t SplitMix64Words::next_word() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<std::uint32_t>(z >> 32);
}

std::uint32_t ScriptedWords::next_word() {
  if (cursor_ >= words_.size()) {
    throw ScriptExhausted("scripted word generator ran out of words");
  }
  return words_[cursor_++];
}

BufferedWordSource::BufferedWordSource(std::uint64_t seed)
    : BufferedWordSource(std::make_unique<Mt19937Words>(seed)) {}

BufferedWordSource::BufferedWordSource(std::unique_ptr<WordGenerator> words)
    : words_(std::move(words)) {
  if (!words_) {
    throw InvalidArgument("BufferedWordSource needs a word generator");
  }
}

ScriptedBitSource::ScriptedBitSource(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw InvalidArgument("scripted bits must be 0 or 1");
  }
}

ScriptedBitSource::ScriptedBitSource(std::initializer_list<int> bits)
    : ScriptedBitSource(std::vector<std::uint8_t>(bits.begin(), bits.end())) {}

unsigned ScriptedBitSource::draw_bit() {
  if (cursor_ >= bits_.size()) {
    throw ScriptExhausted("scripted bit source exhausted after " + std::to_string(bits_.size()) +
                          " bits");
  }
  return bits_[cursor_++];
}

}  // namespace fastdice
