#ifndef CHARTLAB_CHART_HPP
#define CHARTLAB_CHART_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace chartlab::sym {

/// A coordinate chart: an ordered list of distinct coordinate names.
/// Charts are immutable values; copies share storage.
class Chart {
public:
  Chart() = default;
  Chart(std::string name, std::vector<std::string> coords);

  int dim() const { return d_ ? static_cast<int>(d_->coords.size()) : 0; }
  const std::string& name() const { return d_->name; }
  const std::string& coord(int i) const { return d_->coords.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& coords() const { return d_->coords; }

  /// Index of a coordinate name, or -1 if absent.
  int index_of(const std::string& coord_name) const;

  bool operator==(const Chart& o) const;
  bool operator!=(const Chart& o) const { return !(*this == o); }

  bool valid() const { return d_ != nullptr; }

private:
  struct Data {
    std::string name;
    std::vector<std::string> coords;
  };
  std::shared_ptr<const Data> d_;
};

/// One coordinate of a chart. The reserved name `pi` is never a Variable.
struct Variable {
  Chart chart;
  int index = -1;

  const std::string& name() const { return chart.coord(index); }
};

/// Raised when two values from different charts are combined.
struct ChartMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_same_chart(const Chart& a, const Chart& b, const char* where) {
  if (!(a == b)) throw ChartMismatch(std::string(where) + ": values live on different charts ('" +
                                     a.name() + "' vs '" + b.name() + "')");
}

} // namespace chartlab::sym

#endif
