#include "tabassign/kvector.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "tabassign/errors.hpp"

namespace tabassign {

namespace detail {

namespace {

std::string format_coefficient(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

double BasisCoefficients::coefficient(const StandardAssignmentTabloid& basis) const {
  if (basis.shape() != shape_) throw shape_error("basis tabloid has a different shape");
  const auto it = entries_.find(basis.task_rows().flattened());
  return it == entries_.end() ? 0.0 : it->second;
}

double BasisCoefficients::coefficient(std::string_view term) const {
  return coefficient(decode_tabloid(term, shape_));
}

void BasisCoefficients::accumulate(const StandardAssignmentTabloid& basis, double delta) {
  if (basis.shape() != shape_) throw shape_error("basis tabloid has a different shape");
  double& slot = entries_[basis.task_rows().flattened()];
  slot += delta;
  if (slot == 0.0) entries_.erase(basis.task_rows().flattened());
}

std::vector<std::pair<std::string, double>> BasisCoefficients::terms() const {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(entries_.size());
  for (const auto& [flat, coeff] : entries_) {
    StandardAssignmentTabloid tabloid(shape_, [&] {
      std::vector<std::vector<int>> rows;
      std::size_t pos = 0;
      for (int part : shape_.parts()) {
        rows.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                          flat.begin() + static_cast<std::ptrdiff_t>(pos) + part);
        pos += static_cast<std::size_t>(part);
      }
      return rows;
    }());
    out.emplace_back(tabloid.key(), coeff);
  }
  return out;
}

std::string BasisCoefficients::to_string() const {
  const auto term_list = terms();
  if (term_list.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < term_list.size(); ++i) {
    if (i > 0) out += " + ";
    out += format_coefficient(term_list[i].second);
    out += '*';
    out += term_list[i].first;
  }
  return out;
}

BasisCoefficients BasisCoefficients::parse_text(std::string_view text, const Partition& shape) {
  BasisCoefficients result(shape);
  std::size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    const std::size_t next_plus = text.find('+', pos);
    std::string_view piece = trim(text.substr(
        pos, next_plus == std::string_view::npos ? std::string_view::npos : next_plus - pos));
    if (piece.empty()) throw parse_error("empty term in vector text");

    double coefficient = 1.0;
    std::string_view term = piece;
    const std::size_t star = piece.find('*');
    if (star != std::string_view::npos) {
      const std::string_view coeff_text = trim(piece.substr(0, star));
      const char* begin = coeff_text.data();
      const char* end = begin + coeff_text.size();
      auto [parsed_end, ec] = std::from_chars(begin, end, coefficient);
      if (ec != std::errc() || parsed_end != end)
        throw parse_error("bad coefficient '" + std::string(coeff_text) + "'");
      term = trim(piece.substr(star + 1));
    }
    result.accumulate(decode_tabloid(term, shape), coefficient);
    any = true;

    if (next_plus == std::string_view::npos) break;
    pos = next_plus + 1;
  }
  if (!any) throw parse_error("empty vector text");
  return result;
}

}  // namespace detail

KVector::KVector(Partition shape, const std::vector<std::pair<std::string, double>>& terms)
    : BasisCoefficients(std::move(shape)) {
  for (const auto& [term, coeff] : terms) accumulate(decode_tabloid(term, this->shape()), coeff);
}

KVector KVector::basis(const StandardAssignmentTabloid& tabloid) {
  KVector v(tabloid.shape());
  v.accumulate(tabloid, 1.0);
  return v;
}

KVector KVector::parse(std::string_view text, const Partition& shape) {
  return KVector(BasisCoefficients::parse_text(text, shape));
}

KVector& KVector::operator+=(const KVector& other) {
  if (shape() != other.shape()) throw shape_error("cannot add vectors of different shapes");
  for (const auto& [term, coeff] : other.terms())
    accumulate(decode_tabloid(term, shape()), coeff);
  return *this;
}

KVector& KVector::operator*=(double scalar) {
  KVector scaled(shape());
  for (const auto& [term, coeff] : terms())
    scaled.accumulate(decode_tabloid(term, shape()), coeff * scalar);
  *this = scaled;
  return *this;
}

Functional::Functional(Partition shape, const std::vector<std::pair<std::string, double>>& terms)
    : BasisCoefficients(std::move(shape)) {
  for (const auto& [term, coeff] : terms) accumulate(decode_tabloid(term, this->shape()), coeff);
}

Functional Functional::parse(std::string_view text, const Partition& shape) {
  return Functional(BasisCoefficients::parse_text(text, shape));
}

}  // namespace tabassign
