#pragma once

#include <string>

#include <json.hpp>

#include "arr4/catalogue.hpp"

namespace arr4 {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits stay numbers; everything else becomes an
/// exact string such as "4913/27".
Json exact(const Rational& x);
Json exact(const Integer& x);

Json to_json(const CheckResult& c);
template <int First>
Json to_json(const WeightVector<First>& w) {
  Json out = Json::object();
  for (const auto& [weight, count] : w.counts()) {
    if (count != 0) out[std::to_string(weight)] = count;
  }
  return out;
}

struct AnalyzeOptions {
  bool force_chambers = false;
  bool skip_chambers = false;
  std::size_t max_chambers = 0;
  long long chamber_threshold = 32;
  unsigned threads = 0;
};

/// Full invariant report for one arrangement.
Json analyze(const Arrangement& a, const AnalyzeOptions& options = {});
/// Plain-text rendering of an analyze() document.
std::string analyze_text(const Json& report);

Json to_json(const RowReport& r);
std::string row_text(const RowReport& r);

/// The embedded table as an array of rows.
Json catalogue_json();

}  // namespace arr4
