#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "carebench/time.hpp"

namespace carebench {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Six-valued turbine operating state. Codes 0 (normal operation) and
// 2 (idling) count as normal; 1 (derated), 3 (service), 4 (fault) and
// 5 (other) do not.
class StatusId {
 public:
  static constexpr int kMin = 0;
  static constexpr int kMax = 5;

  explicit StatusId(int code) : code_(static_cast<std::int8_t>(code)) {
    if (code < kMin || code > kMax) {
      throw ValidationError("status code outside {0..5}: " + std::to_string(code));
    }
  }

  int code() const { return code_; }
  bool is_normal() const { return code_ == 0 || code_ == 2; }

  friend bool operator==(StatusId, StatusId) = default;

 private:
  std::int8_t code_;
};

inline bool is_normal_status(StatusId status) { return status.is_normal(); }

enum class Split : std::uint8_t { train, prediction };
enum class EventLabel : std::uint8_t { normal, anomaly };
enum class FeatureStatistic : std::uint8_t { average, minimum, maximum, std_dev };

std::string_view to_string(Split split);
std::string_view to_string(EventLabel label);
std::string_view to_string(FeatureStatistic statistic);
std::optional<Split> parse_split(std::string_view text);
std::optional<EventLabel> parse_event_label(std::string_view text);
std::optional<FeatureStatistic> parse_statistic(std::string_view text);

// Missing sensor values are explicit (NaN), never silently rewritten to 0.
inline constexpr double kMissingValue = std::numeric_limits<double>::quiet_NaN();
inline bool is_missing(double value) { return value != value; }

struct DataPoint {
  std::int64_t row_id = 0;
  UtcTime timestamp{};
  Split split = Split::train;
  StatusId status{0};
};

struct FeatureDescriptor {
  std::string name;
  std::string description;
  std::string unit;
  bool is_angle = false;
  bool is_counter = false;
  FeatureStatistic statistic = FeatureStatistic::average;
};

struct EventInfo {
  EventLabel label = EventLabel::normal;
  std::optional<UtcTime> event_start;
  std::optional<UtcTime> event_end;
};

// One benchmark unit: a single turbine's labeled multivariate series with a
// train block followed by a prediction block. Sensor values are stored as one
// row-major matrix (points x features); rows are addressed through sensors().
struct TurbineDataset {
  std::string dataset_id;
  std::string farm_id;
  std::string asset_id;
  std::vector<FeatureDescriptor> features;
  std::vector<DataPoint> points;
  std::vector<double> sensor_values;
  EventInfo event;

  std::size_t feature_count() const { return features.size(); }

  std::span<const double> sensors(std::size_t point_index) const {
    return {sensor_values.data() + point_index * features.size(), features.size()};
  }
  std::span<double> sensors(std::size_t point_index) {
    return {sensor_values.data() + point_index * features.size(), features.size()};
  }

  // Points are ordered train block first, so the prediction block starts at
  // the first point with split == prediction.
  std::size_t train_count() const;
  std::size_t prediction_count() const { return points.size() - train_count(); }
  std::span<const DataPoint> train_points() const;
  std::span<const DataPoint> prediction_points() const;

  std::optional<std::size_t> feature_index(std::string_view name) const;
};

// Checks all structural invariants: 10-minute grid, strictly increasing
// timestamps, train-before-prediction ordering, at least one prediction
// point, sensor matrix shape, event window placement and label consistency.
// Throws ValidationError naming the offending row where applicable.
void validate_dataset(const TurbineDataset& ds);

// First and last prediction timestamps. Throws if there are none.
std::pair<UtcTime, UtcTime> prediction_range(const TurbineDataset& ds);

// Per prediction timestamp: the anomaly label (inside the event window,
// boundaries inclusive) and the status-derived normal flag.
struct GroundTruth {
  EventLabel dataset_label = EventLabel::normal;
  std::vector<std::uint8_t> anomalous;
  std::vector<std::uint8_t> status_normal;
};

// Deterministic and independent of sensor values. Throws ValidationError if
// an anomaly event window is absent or falls outside the prediction range.
GroundTruth derive_ground_truth(const TurbineDataset& ds);

}  // namespace carebench
