#include "alstat/bitstring.hpp"

namespace alstat {

BitString::BitString(int n, std::uint32_t value) {
  if (n < 1 || n > 32) fail(Errc::ObjectOutOfBounds, "string length must be in [1,32]");
  if (n < 32 && value >> n) fail(Errc::ObjectOutOfBounds, "value wider than length");
  n_ = static_cast<std::uint8_t>(n);
  v_ = value;
}

BitString BitString::parse(const std::string& s) {
  if (s.empty() || s.size() > 32) fail(Errc::ParseError, "bad string literal: " + s);
  std::uint32_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') fail(Errc::ParseError, "bad string literal: " + s);
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitString(static_cast<int>(s.size()), v);
}

std::string BitString::to_string() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + bit(i));
  return s;
}

BitString BitString::concat(const BitString& o) const {
  if (n_ + o.n_ > 32) fail(Errc::ObjectOutOfBounds, "concat exceeds 32 bits");
  return BitString(n_ + o.n_, (v_ << o.n_) | o.v_);
}

BitString BitString::prefix(int len) const {
  if (len < 1 || len > n_) fail(Errc::ObjectOutOfBounds, "bad prefix length");
  return BitString(len, v_ >> (n_ - len));
}

StringTuple::StringTuple(std::vector<BitString> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) fail(Errc::ObjectOutOfBounds, "tuple must have l >= 1");
  for (const auto& e : elems_)
    if (e.length() != elems_[0].length()) fail(Errc::MixedUniverse, "tuple elements differ in length");
}

std::string StringTuple::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s.push_back(',');
    s += elems_[i].to_string();
  }
  return s;
}

bool StringTuple::operator<(const StringTuple& o) const {
  return elems_ < o.elems_;
}

}  // namespace alstat
