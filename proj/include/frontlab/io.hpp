#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frontlab/grid.hpp"
#include "frontlab/trajectory.hpp"

/// Plain-file output: CSV tables and a minimal self-contained SVG plotter
/// (polylines, filled polygons, axes). Numeric CSV fields are written with
/// %.17g so archives are bit-faithful and reproducible.
namespace frontlab {

/// Shortest round-trippable decimal form of v.
std::string g17(double v);

/// Line-buffered CSV file; throws std::runtime_error when the file cannot
/// be opened. Rows are written verbatim, one call per line.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(const std::vector<std::string>& fields);

private:
    struct Impl;
    Impl* impl_;
};

/// `t,X[,X_pred]` per recorded sample.
void write_positions_csv(const std::string& path, const FrontTrajectory& traj);

/// `t,x,u` per grid node of one snapshot.
void write_snapshot_csv(const std::string& path, const FieldState& s);

struct PlotSeries {
    std::string label;
    std::string color = "#1f586e";
    std::vector<std::pair<double, double>> points;
    bool markers = false;  ///< draw small circles at the samples
    bool dashed = false;
};

struct PlotPolygon {
    std::string fill = "#9ec5d4";
    double opacity = 0.35;
    std::vector<std::pair<double, double>> points;
};

struct PlotLabel {
    std::string text;
    double x = 0.0, y = 0.0;  ///< data coordinates
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotPolygon> polygons;  ///< drawn under the series
    std::vector<PlotSeries> series;
    std::vector<PlotLabel> labels;
    int width = 800;
    int height = 560;
};

/// Writes the plot as a standalone SVG file. Throws std::runtime_error when
/// the file cannot be opened or no finite data points were supplied.
void write_svg_plot(const std::string& path, const PlotSpec& spec);

}  // namespace frontlab
