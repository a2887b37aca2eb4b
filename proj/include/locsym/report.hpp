#pragma once

#include <string>
#include <vector>

#include "locsym/rational.hpp"

namespace locsym {

struct SiteValue {
  std::string site;
  BigRational value;
};

/// Exact outcome of one reciprocity check. `product` is always the product
/// of the listed site values.
struct ReciprocityReport {
  std::string law;
  std::vector<SiteValue> sites;
  BigRational product{1};
  std::vector<std::string> diagnostics;
  bool hypotheses_ok = true;
  bool pass = false;

  void add(std::string site, const BigRational& value) {
    product *= value;
    sites.push_back({std::move(site), value});
  }
  void violation(std::string what) {
    hypotheses_ok = false;
    diagnostics.push_back(std::move(what));
  }
  void finish() { pass = hypotheses_ok && product == 1; }

  /// 0 pass, 1 reciprocity failure, 2 hypothesis violation.
  int exit_code() const { return !hypotheses_ok ? 2 : (pass ? 0 : 1); }
};

}  // namespace locsym
