#include "carebench/data_model.hpp"

#include <algorithm>

namespace carebench {

std::string_view to_string(Split split) {
  return split == Split::train ? "train" : "prediction";
}

std::string_view to_string(EventLabel label) {
  return label == EventLabel::anomaly ? "anomaly" : "normal";
}

std::string_view to_string(FeatureStatistic statistic) {
  switch (statistic) {
    case FeatureStatistic::average: return "average";
    case FeatureStatistic::minimum: return "minimum";
    case FeatureStatistic::maximum: return "maximum";
    case FeatureStatistic::std_dev: return "std_dev";
  }
  return "average";
}

std::optional<Split> parse_split(std::string_view text) {
  if (text == "train") return Split::train;
  if (text == "prediction") return Split::prediction;
  return std::nullopt;
}

std::optional<EventLabel> parse_event_label(std::string_view text) {
  if (text == "anomaly") return EventLabel::anomaly;
  if (text == "normal") return EventLabel::normal;
  return std::nullopt;
}

std::optional<FeatureStatistic> parse_statistic(std::string_view text) {
  if (text == "average") return FeatureStatistic::average;
  if (text == "minimum") return FeatureStatistic::minimum;
  if (text == "maximum") return FeatureStatistic::maximum;
  if (text == "std_dev") return FeatureStatistic::std_dev;
  return std::nullopt;
}

std::size_t TurbineDataset::train_count() const {
  const auto it = std::partition_point(points.begin(), points.end(), [](const DataPoint& p) {
    return p.split == Split::train;
  });
  return static_cast<std::size_t>(it - points.begin());
}

std::span<const DataPoint> TurbineDataset::train_points() const {
  return {points.data(), train_count()};
}

std::span<const DataPoint> TurbineDataset::prediction_points() const {
  const std::size_t n = train_count();
  return {points.data() + n, points.size() - n};
}

std::optional<std::size_t> TurbineDataset::feature_index(std::string_view name) const {
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].name == name) return i;
  }
  return std::nullopt;
}

std::pair<UtcTime, UtcTime> prediction_range(const TurbineDataset& ds) {
  const auto pred = ds.prediction_points();
  if (pred.empty()) {
    throw ValidationError("dataset " + ds.dataset_id + ": no prediction points");
  }
  return {pred.front().timestamp, pred.back().timestamp};
}

void validate_dataset(const TurbineDataset& ds) {
  const auto fail = [&](const std::string& what) {
    throw ValidationError("dataset " + ds.dataset_id + ": " + what);
  };

  if (ds.sensor_values.size() != ds.points.size() * ds.features.size()) {
    fail("sensor matrix shape does not match points x features");
  }
  for (const FeatureDescriptor& f : ds.features) {
    if (f.is_angle && f.is_counter) {
      fail("feature " + f.name + " marked both angle and counter");
    }
  }

  bool seen_prediction = false;
  for (std::size_t i = 0; i < ds.points.size(); ++i) {
    const DataPoint& p = ds.points[i];
    if (!on_sample_grid(p.timestamp)) {
      fail("row " + std::to_string(p.row_id) + " timestamp off the 10-minute grid");
    }
    if (i > 0 && p.timestamp <= ds.points[i - 1].timestamp) {
      fail("row " + std::to_string(p.row_id) + " timestamp not strictly increasing");
    }
    if (p.split == Split::prediction) {
      seen_prediction = true;
    } else if (seen_prediction) {
      fail("row " + std::to_string(p.row_id) + " train point after prediction points");
    }
  }
  if (!seen_prediction) fail("no prediction points");

  const auto pred = prediction_range(ds);
  if (ds.event.label == EventLabel::anomaly) {
    if (!ds.event.event_start || !ds.event.event_end) {
      fail("anomaly event without start/end timestamps");
    }
    if (*ds.event.event_start >= *ds.event.event_end) {
      fail("event_start not before event_end");
    }
    if (*ds.event.event_start < pred.first || *ds.event.event_end > pred.second) {
      fail("event window outside the prediction time range");
    }
  } else if (ds.event.event_start || ds.event.event_end) {
    fail("normal-labeled dataset carries event timestamps");
  }
}

GroundTruth derive_ground_truth(const TurbineDataset& ds) {
  const auto pred = ds.prediction_points();
  const auto [pred_first, pred_last] = prediction_range(ds);

  GroundTruth gt;
  gt.dataset_label = ds.event.label;
  gt.anomalous.assign(pred.size(), 0);
  gt.status_normal.assign(pred.size(), 0);

  if (ds.event.label == EventLabel::anomaly) {
    if (!ds.event.event_start || !ds.event.event_end) {
      throw ValidationError("dataset " + ds.dataset_id + ": anomaly event without timestamps");
    }
    if (*ds.event.event_start < pred_first || *ds.event.event_end > pred_last) {
      throw ValidationError("dataset " + ds.dataset_id +
                            ": event window outside the prediction time range");
    }
  }

  for (std::size_t i = 0; i < pred.size(); ++i) {
    gt.status_normal[i] = pred[i].status.is_normal() ? 1 : 0;
    if (ds.event.label == EventLabel::anomaly &&
        pred[i].timestamp >= *ds.event.event_start &&
        pred[i].timestamp <= *ds.event.event_end) {
      gt.anomalous[i] = 1;
    }
  }
  return gt;
}

}  // namespace carebench
