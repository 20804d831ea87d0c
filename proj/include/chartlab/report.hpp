#ifndef CHARTLAB_REPORT_HPP
#define CHARTLAB_REPORT_HPP

#include <string>
#include <vector>

#include "chartlab/eq.hpp"

namespace chartlab {

using sym::Tri;

/// One verified condition inside a composite check. Failing items carry
/// a witness (printed in expression-grammar syntax).
struct ReportItem {
  std::string label;
  Tri status = Tri::Yes;
  std::string witness;
};

/// Outcome of a composite verification (axiom checks, PNGC, morphism
/// compatibility, ...). Value object; no has-a behavior beyond folding.
struct CheckReport {
  std::string name;
  std::vector<ReportItem> items;

  void add(std::string label, Tri status, std::string witness = "") {
    items.push_back({std::move(label), status, std::move(witness)});
  }

  Tri overall() const {
    Tri v = Tri::Yes;
    for (const auto& it : items) v = sym::combine(v, it.status);
    return v;
  }
  bool passed() const { return overall() == Tri::Yes; }

  std::string summary() const {
    std::string out = name + ": " + sym::to_cstr(overall());
    for (const auto& it : items) {
      if (it.status == Tri::Yes) continue;
      out += "\n  [" + std::string(sym::to_cstr(it.status)) + "] " + it.label;
      if (!it.witness.empty()) out += " ; witness: " + it.witness;
    }
    return out;
  }
};

} // namespace chartlab

#endif
