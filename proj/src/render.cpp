#include "hperc/render.hpp"

#include <algorithm>
#include <sstream>

namespace hperc {

namespace {

enum class Mark { empty, infected, fresh, edge_infected, edge_empty };

struct Panel {
  std::string title;
  int rows = 0;
  int cols = 0;
  std::vector<Mark> marks;

  Mark at(int row, int col) const { return marks[static_cast<std::size_t>(row * cols + col)]; }
};

Mark mark_of(const Frame& frame, const Vertex& v) {
  const bool in = frame.cells.contains(v);
  if (frame.highlight && frame.highlight->contains(v)) return in ? Mark::edge_infected : Mark::edge_empty;
  if (!in) return Mark::empty;
  if (frame.previous && !frame.previous->contains(v)) return Mark::fresh;
  return Mark::infected;
}

std::vector<Panel> panels_of(const Frame& frame) {
  const auto& shape = frame.cells.shape();
  const int d = shape.dimension();
  if (d > 3) throw InvalidInput("rendering supports sets of dimension at most 3");
  auto fill = [&](Panel& p, auto&& vertex) {
    p.marks.reserve(static_cast<std::size_t>(p.rows * p.cols));
    for (int i = 1; i <= p.rows; ++i)
      for (int j = 1; j <= p.cols; ++j) p.marks.push_back(mark_of(frame, vertex(i, j)));
  };
  std::vector<Panel> out;
  if (d == 1) {
    Panel p{frame.title, 1, shape.extent(0), {}};
    fill(p, [](int, int j) { return Vertex{j}; });
    out.push_back(std::move(p));
  } else if (d == 2) {
    Panel p{frame.title, shape.extent(0), shape.extent(1), {}};
    fill(p, [](int i, int j) { return Vertex{i, j}; });
    out.push_back(std::move(p));
  } else {
    for (int m = 1; m <= shape.extent(0); ++m) {
      Panel p{frame.title + (frame.title.empty() ? "" : " ") + "x1=" + std::to_string(m), shape.extent(1), shape.extent(2), {}};
      fill(p, [m](int i, int j) { return Vertex{m, i, j}; });
      out.push_back(std::move(p));
    }
  }
  return out;
}

char ascii_of(Mark m) {
  switch (m) {
    case Mark::infected:
      return '#';
    case Mark::fresh:
      return '*';
    case Mark::edge_infected:
    case Mark::edge_empty:
      return 'o';
    case Mark::empty:
      break;
  }
  return '.';
}

const char* fill_of(Mark m) {
  switch (m) {
    case Mark::infected:
    case Mark::edge_infected:
      return "#555555";
    case Mark::fresh:
    case Mark::edge_empty:
      return "#bbbbbb";
    case Mark::empty:
      break;
  }
  return "#ffffff";
}

}  // namespace

std::string render_ascii(const std::vector<Frame>& frames) {
  std::ostringstream os;
  bool first = true;
  for (const auto& frame : frames) {
    for (const auto& p : panels_of(frame)) {
      if (!first) os << '\n';
      first = false;
      if (!p.title.empty()) os << p.title << '\n';
      for (int i = 0; i < p.rows; ++i) {
        for (int j = 0; j < p.cols; ++j) os << ascii_of(p.at(i, j));
        os << '\n';
      }
    }
  }
  return os.str();
}

std::string render_svg(const std::vector<Frame>& frames) {
  constexpr int cell = kSvgCell;
  constexpr int label = cell;  // row labels on the left, column labels on top
  constexpr int title_height = cell;
  constexpr int gap = cell;

  std::vector<Panel> panels;
  for (const auto& frame : frames) {
    for (auto& p : panels_of(frame)) panels.push_back(std::move(p));
  }
  int width = gap;
  int height = 0;
  for (const auto& p : panels) {
    width += label + p.cols * cell + gap;
    height = std::max(height, title_height + label + p.rows * cell + gap);
  }

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- hperc grid render, format version " << kSvgFormatVersion << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
     << width << ' ' << height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  int x0 = gap;
  for (const auto& p : panels) {
    const int gx = x0 + label;
    const int gy = title_height + label;
    os << "<g>\n";
    if (!p.title.empty()) {
      os << "<text x=\"" << gx << "\" y=\"" << title_height - 6 << "\" font-family=\"monospace\" font-size=\"12\">" << p.title
         << "</text>\n";
    }
    for (int j = 0; j < p.cols; ++j) {
      os << "<text x=\"" << gx + j * cell + cell / 2 << "\" y=\"" << gy - 6
         << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" << j + 1 << "</text>\n";
    }
    for (int i = 0; i < p.rows; ++i) {
      os << "<text x=\"" << gx - 6 << "\" y=\"" << gy + i * cell + cell / 2 + 4
         << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"end\">" << i + 1 << "</text>\n";
    }
    for (int i = 0; i < p.rows; ++i) {
      for (int j = 0; j < p.cols; ++j) {
        const Mark m = p.at(i, j);
        const bool edge = m == Mark::edge_infected || m == Mark::edge_empty;
        os << "<rect x=\"" << gx + j * cell << "\" y=\"" << gy + i * cell << "\" width=\"" << cell << "\" height=\"" << cell
           << "\" fill=\"" << fill_of(m) << "\" stroke=\"" << (edge ? "#d62728" : "#000000") << "\" stroke-width=\""
           << (edge ? 2 : 1) << "\"/>\n";
      }
    }
    os << "</g>\n";
    x0 += label + p.cols * cell + gap;
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<Frame> phase_frames(const PhaseTrace& trace) {
  std::vector<Frame> frames;
  for (std::size_t i = 0; i < trace.phases.size(); ++i) {
    Frame f{"phase " + std::to_string(i), trace.phases[i], std::nullopt, std::nullopt};
    if (i > 0) f.previous = trace.phases[i - 1];
    frames.push_back(std::move(f));
  }
  return frames;
}

std::vector<Frame> step_frames(const StepTrace& trace) {
  std::vector<Frame> frames;
  frames.push_back({"start", trace.start, std::nullopt, std::nullopt});
  CellSet current = trace.start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    Frame f{"step " + std::to_string(i + 1) + " infects " + to_string(s.infected), current, std::nullopt, s.edge};
    frames.push_back(std::move(f));
    current.insert(s.infected);
  }
  frames.push_back({"terminal", current, trace.start, std::nullopt});
  return frames;
}

}  // namespace hperc
