#include "tabassign/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "tabassign/errors.hpp"

namespace tabassign {

namespace {

std::string canonical_term(std::string_view term, TermKind kind, const Partition& shape) {
  if (kind == TermKind::tabloid) return encode(decode_tabloid(term, shape));
  return encode(decode_tableau(term, shape));
}

std::map<std::string, int> term_counts(const Document& doc) {
  std::map<std::string, int> counts;
  for (const std::string& term : doc) ++counts[term];
  return counts;
}

double norm(const WeightVector& v) {
  double sum = 0.0;
  for (const auto& [term, w] : v.weights) {
    (void)term;
    sum += w * w;
  }
  return std::sqrt(sum);
}

}  // namespace

Corpus Corpus::parse(std::string_view text) {
  std::optional<Partition> shape;
  std::optional<TermKind> kind;
  std::vector<Document> raw_documents;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;

    if (line[first] == '#') {
      std::istringstream header(line.substr(first));
      std::string tag;
      header >> tag;
      if (tag == "#shape") {
        std::string value;
        if (!(header >> value) || (header >> tag))
          throw parse_error("expected '#shape <a,b,...>'");
        if (shape) throw parse_error("duplicate #shape header");
        shape = Partition::parse(value);
      } else if (tag == "#kind") {
        std::string value;
        if (!(header >> value) || (header >> tag)) throw parse_error("expected '#kind <kind>'");
        if (kind) throw parse_error("duplicate #kind header");
        if (value == "tabloid") kind = TermKind::tabloid;
        else if (value == "tableau") kind = TermKind::tableau;
        else throw parse_error("kind must be 'tabloid' or 'tableau', got '" + value + "'");
      }
      continue;  // other '#' lines are comments
    }

    if (!shape || !kind)
      throw parse_error("document before #shape/#kind headers");
    std::istringstream terms(line);
    Document doc;
    std::string term;
    while (terms >> term) doc.push_back(canonical_term(term, *kind, *shape));
    raw_documents.push_back(std::move(doc));
  }

  if (!shape) throw parse_error("missing #shape header");
  if (!kind) throw parse_error("missing #kind header");
  return Corpus{std::move(*shape), *kind, std::move(raw_documents)};
}

double idf(std::string_view term, const Corpus& corpus) {
  if (corpus.documents.empty()) throw invalid_argument("idf over an empty corpus");
  const std::string key = canonical_term(term, corpus.kind, corpus.shape);
  int df = 0;
  for (const Document& doc : corpus.documents)
    if (std::find(doc.begin(), doc.end(), key) != doc.end()) ++df;
  if (df == 0) return 0.0;
  return std::log10(static_cast<double>(corpus.documents.size()) / static_cast<double>(df));
}

WeightVector tfidf_weights(const Document& doc, const Corpus& corpus) {
  WeightVector out{corpus.shape, {}};
  for (const auto& [term, tf] : term_counts(doc)) {
    const std::string key = canonical_term(term, corpus.kind, corpus.shape);
    out.weights[key] += static_cast<double>(tf) * idf(key, corpus);
  }
  return out;
}

double cosine_similarity(const WeightVector& q, const WeightVector& d) {
  if (q.shape != d.shape) throw invalid_argument("weight vectors have different shapes");
  const double nq = norm(q);
  const double nd = norm(d);
  if (nq == 0.0 || nd == 0.0) throw zero_vector_error("cosine of a zero-norm weight vector");
  double dot = 0.0;
  for (const auto& [term, w] : q.weights) {
    const auto it = d.weights.find(term);
    if (it != d.weights.end()) dot += w * it->second;
  }
  return dot / (nq * nd);
}

RankedResult rank(const Document& query, const Corpus& corpus) {
  if (query.empty()) throw invalid_argument("query has no terms");
  for (std::size_t i = 0; i < corpus.documents.size(); ++i)
    if (corpus.documents[i].empty())
      throw invalid_argument("document " + std::to_string(i + 1) + " has no terms");

  const WeightVector q = tfidf_weights(query, corpus);
  if (norm(q) == 0.0)
    throw zero_vector_error("query weight vector is zero (all terms have idf 0)");

  RankedResult result;
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    const WeightVector d = tfidf_weights(corpus.documents[i], corpus);
    result.entries.emplace_back(static_cast<int>(i + 1), cosine_similarity(q, d));
  }
  std::stable_sort(result.entries.begin(), result.entries.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  return result;
}

double average_turnaround(const Document& doc,
                          const std::map<std::string, double>& turnarounds) {
  if (doc.empty()) throw invalid_argument("document has no terms");
  double total = 0.0;
  for (const std::string& term : doc) {
    const auto it = turnarounds.find(term);
    if (it == turnarounds.end())
      throw invalid_argument("no turnaround value for term " + term);
    total += it->second;
  }
  return total / static_cast<double>(doc.size());
}

}  // namespace tabassign
