#include "borel/root.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <functional>

namespace borel {

namespace {

void require_same_rank(const Root& a, const Root& b) {
  if (a.rank() != b.rank())
    throw InvalidInput("root rank mismatch: " + std::to_string(a.rank()) + " vs " +
                       std::to_string(b.rank()));
}

std::string subscript(int n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string ascii = std::to_string(n);
  std::string out;
  for (char c : ascii) out += digits[c - '0'];
  return out;
}

} // namespace

Root::Root(std::initializer_list<int> coeffs) : coeffs_(static_cast<Eigen::Index>(coeffs.size())) {
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.data());
}

Root Root::simple(int rank, int index) {
  if (index < 0 || index >= rank)
    throw InvalidInput("simple root index " + std::to_string(index + 1) + " out of range 1.." +
                       std::to_string(rank));
  Coefficients c = Coefficients::Zero(rank);
  c(index) = 1;
  return Root(std::move(c));
}

Root Root::zero(int rank) { return Root(Coefficients::Zero(rank)); }

bool Root::is_positive() const {
  return coeffs_.size() > 0 && (coeffs_.array() >= 0).all() && (coeffs_.array() > 0).any();
}

Root operator+(const Root& a, const Root& b) {
  require_same_rank(a, b);
  return Root(Coefficients(a.coeffs_ + b.coeffs_));
}

Root operator-(const Root& a, const Root& b) {
  require_same_rank(a, b);
  return Root(Coefficients(a.coeffs_ - b.coeffs_));
}

Root operator*(int k, const Root& r) { return Root(Coefficients(k * r.coeffs_)); }

Root operator-(const Root& r) { return Root(Coefficients(-r.coeffs_)); }

bool operator==(const Root& a, const Root& b) {
  return a.rank() == b.rank() && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const Root& a, const Root& b) {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  // larger leading coefficients first, so alpha_1 < alpha_2 < ... at height 1
  for (int i = 0; i < a.rank(); ++i)
    if (auto c = b[i] <=> a[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = static_cast<std::size_t>(r.rank());
  for (int i = 0; i < r.rank(); ++i)
    h ^= std::hash<int>{}(r[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string to_string(const Root& r, bool unicode) {
  std::string out;
  for (int i = 0; i < r.rank(); ++i) {
    int c = r[i];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += unicode ? "α" + subscript(i + 1) : "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string to_vector_string(const Root& r) {
  std::string out = "[";
  for (int i = 0; i < r.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(r[i]);
  }
  return out + "]";
}

} // namespace borel
