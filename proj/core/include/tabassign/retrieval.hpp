#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tabassign/assignment.hpp"

namespace tabassign {

enum class TermKind { tabloid, tableau };

/// Ordered list of canonical term keys; duplicates are meaningful
/// (term frequency counts them).
using Document = std::vector<std::string>;

/// Collection of assignment documents sharing one shape and term kind.
///
/// File format: header lines "#shape <a,b,...>" and "#kind tabloid|tableau"
/// first; any other '#' line is a comment; each later non-blank line is one
/// document of whitespace-separated terms.
struct Corpus {
  Partition shape;
  TermKind kind;
  std::vector<Document> documents;

  static Corpus parse(std::string_view text);
};

/// tf-idf weights of one document or query against a corpus.
struct WeightVector {
  Partition shape;
  std::map<std::string, double> weights;
};

/// Ranked documents: (1-based index, score), scores weakly decreasing,
/// ties broken by ascending index.
struct RankedResult {
  std::vector<std::pair<int, double>> entries;
};

/// log10(N / df); 0 when the term appears in no document.
double idf(std::string_view term, const Corpus& corpus);

/// Weight per distinct term: occurrences in the document times idf.
/// Document frequencies come from the corpus only; the scored document
/// (or query) never counts toward df.
WeightVector tfidf_weights(const Document& doc, const Corpus& corpus);

double cosine_similarity(const WeightVector& q, const WeightVector& d);

RankedResult rank(const Document& query, const Corpus& corpus);

/// Mean turnaround over the document's term occurrences.
double average_turnaround(const Document& doc,
                          const std::map<std::string, double>& turnarounds);

}  // namespace tabassign
