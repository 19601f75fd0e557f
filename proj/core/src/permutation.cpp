#include "tabassign/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "tabassign/errors.hpp"

namespace tabassign {

Permutation Permutation::identity(int n) {
  if (n < 1) throw invalid_argument("permutation degree must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int image : images) {
    if (image < 1 || image > n) throw invalid_argument("image out of range");
    if (seen[static_cast<std::size_t>(image - 1)]) throw invalid_argument("image list is not a bijection");
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, int n) {
  if (n < 1) throw invalid_argument("permutation degree must be >= 1");

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw parse_error("trailing characters after 'e'");
    return identity(n);
  }

  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = i;
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw parse_error("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw parse_error("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      int value = 0;
      auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc() || next == text.data() + pos)
        throw parse_error("expected integer in cycle");
      pos = static_cast<std::size_t>(next - text.data());
      if (value < 1 || value > n)
        throw parse_error("cycle entry " + std::to_string(value) + " outside {1.." +
                          std::to_string(n) + "}");
      if (used[static_cast<std::size_t>(value - 1)])
        throw parse_error("entry " + std::to_string(value) + " repeated across cycles");
      used[static_cast<std::size_t>(value - 1)] = true;
      cycle.push_back(value);
    }
    any_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  if (!any_cycle) throw parse_error("empty permutation text");
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycle_type(const Partition& type) {
  std::vector<int> images(static_cast<std::size_t>(type.n()));
  int start = 1;
  for (int length : type.parts()) {
    for (int i = 0; i < length; ++i)
      images[static_cast<std::size_t>(start + i - 1)] = start + (i + 1) % length;
    start += length;
  }
  return Permutation(std::move(images));
}

int Permutation::operator()(int x) const {
  if (x < 1 || x > n()) throw invalid_argument("point outside {1..n}");
  return images_[static_cast<std::size_t>(x - 1)];
}

Permutation Permutation::compose(const Permutation& q) const {
  if (n() != q.n()) throw invalid_argument("cannot compose permutations of different degree");
  std::vector<int> images(images_.size());
  for (int x = 1; x <= n(); ++x)
    images[static_cast<std::size_t>(x - 1)] = images_[static_cast<std::size_t>(q.images_[static_cast<std::size_t>(x - 1)] - 1)];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 1; x <= n(); ++x)
    images[static_cast<std::size_t>(images_[static_cast<std::size_t>(x - 1)] - 1)] = x;
  return Permutation(std::move(images));
}

int Permutation::sign() const {
  // (-1)^(n - #cycles), counting fixed points as cycles.
  std::vector<bool> visited(images_.size(), false);
  int cycles = 0;
  for (int start = 1; start <= n(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    ++cycles;
    int x = start;
    while (!visited[static_cast<std::size_t>(x - 1)]) {
      visited[static_cast<std::size_t>(x - 1)] = true;
      x = images_[static_cast<std::size_t>(x - 1)];
    }
  }
  return ((n() - cycles) % 2 == 0) ? 1 : -1;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> visited(images_.size(), false);
  std::vector<int> lengths;
  for (int start = 1; start <= n(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    int length = 0;
    int x = start;
    while (!visited[static_cast<std::size_t>(x - 1)]) {
      visited[static_cast<std::size_t>(x - 1)] = true;
      x = images_[static_cast<std::size_t>(x - 1)];
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= n(); ++x)
    if (images_[static_cast<std::size_t>(x - 1)] != x) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::vector<bool> visited(images_.size(), false);
  std::string out;
  for (int start = 1; start <= n(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    int x = start;
    while (!visited[static_cast<std::size_t>(x - 1)]) {
      visited[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
      x = images_[static_cast<std::size_t>(x - 1)];
    }
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace tabassign
