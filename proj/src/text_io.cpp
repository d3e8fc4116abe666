#include "persp/text_io.hpp"

#include <sstream>

namespace persp {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("parse error: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
  }

  int number() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("parse error: expected number at position " +
                                  std::to_string(pos));
    return std::stoi(s.substr(start, pos - start));
  }
};

}  // namespace

RingSpec parse_ring_spec(const std::string& src) {
  Cursor c{src};
  RingSpec spec;
  while (true) {
    c.expect('M');
    int n = c.number();
    c.expect('(');
    c.expect('F');
    int p = c.number();
    c.expect(')');
    spec.components.push_back({n, static_cast<uint16_t>(p)});
    if (c.pos == src.size()) break;
    c.expect('x');
  }
  spec.validate();
  return spec;
}

std::string ring_spec_to_string(const RingSpec& spec) {
  std::ostringstream os;
  for (size_t i = 0; i < spec.components.size(); ++i) {
    if (i) os << "x";
    os << "M" << spec.components[i].n << "(F" << spec.components[i].p << ")";
  }
  return os.str();
}

std::string mat_to_string(const Mat& m) {
  std::ostringstream os;
  os << m.p << ":" << m.rows << "x" << m.cols << ":[";
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (i) os << ",";
    os << int(m.e[i]);
  }
  os << "]";
  return os.str();
}

Mat parse_mat(const std::string& src) {
  Cursor c{src};
  int p = c.number();
  c.expect(':');
  int rows = c.number();
  c.expect('x');
  int cols = c.number();
  c.expect(':');
  c.expect('[');
  std::vector<int> vals;
  if (!c.eat(']')) {
    while (true) {
      vals.push_back(c.number());
      if (c.eat(']')) break;
      c.expect(',');
    }
  }
  if (c.pos != src.size())
    throw std::invalid_argument("parse error: trailing characters in matrix");
  return Mat::from_entries(rows, cols, static_cast<uint16_t>(p), vals);
}

std::string element_to_string(const RingElement& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.parts.size(); ++i) {
    if (i) os << ";";
    os << mat_to_string(a.parts[i]);
  }
  return os.str();
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

RingElement parse_element(const RingSpec& spec, const std::string& src) {
  auto blocks = split(src, ';');
  if (blocks.size() != spec.components.size())
    throw std::invalid_argument("element parse: expected " +
                                std::to_string(spec.components.size()) +
                                " component blocks");
  RingElement a{spec, {}};
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto& comp = spec.components[i];
    const std::string& b = blocks[i];
    if (b.find(':') != std::string::npos) {
      Mat m = parse_mat(b);
      if (m.rows != comp.n || m.cols != comp.n || m.p != comp.p)
        throw std::invalid_argument("element parse: component shape mismatch");
      a.parts.push_back(std::move(m));
    } else {
      std::vector<int> vals;
      Cursor c{b};
      while (true) {
        while (c.pos < b.size() && std::isspace(static_cast<unsigned char>(b[c.pos])))
          ++c.pos;
        bool negative = c.eat('-');
        int v = c.number();
        vals.push_back(negative ? -v : v);
        while (c.pos < b.size() && std::isspace(static_cast<unsigned char>(b[c.pos])))
          ++c.pos;
        if (c.pos == b.size()) break;
        c.expect(',');
      }
      a.parts.push_back(Mat::from_entries(comp.n, comp.n, comp.p, vals));
    }
  }
  return a;
}

OrderedJson ideal_to_json(const Ideal& a) {
  OrderedJson arr = OrderedJson::array();
  for (size_t i = 0; i < a.spaces.size(); ++i) {
    const Subspace& s = a.spaces[i];
    OrderedJson basis = OrderedJson::array();
    for (int r = 0; r < s.basis.rows; ++r) {
      OrderedJson row = OrderedJson::array();
      for (int c = 0; c < s.basis.cols; ++c) row.push_back(int(s.basis.at(r, c)));
      basis.push_back(row);
    }
    arr.push_back({{"component", i}, {"dim", s.dim()}, {"basis", basis}});
  }
  return arr;
}

OrderedJson trace_to_json(const ReductionTrace& trace) {
  OrderedJson steps = OrderedJson::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"n", s.n},
                     {"g_height", s.mid_height},
                     {"e", element_to_string(s.left)},
                     {"f", element_to_string(s.right)},
                     {"g", element_to_string(s.mid)}});
  }
  OrderedJson status;
  if (trace.status == ReductionStatus::Stabilized)
    status = {{"stabilized_at", trace.stabilized_at}};
  else
    status = {{"exhausted", true}};
  return {{"ring", ring_spec_to_string(trace.a.spec)},
          {"a", element_to_string(trace.a)},
          {"b", element_to_string(trace.b)},
          {"trace", steps},
          {"status", status}};
}

OrderedJson certificate_bundle_to_json(const ReductionTrace& trace,
                                       const Certificate& axis,
                                       const Certificate& unit) {
  OrderedJson j = trace_to_json(trace);
  j["axis"] = element_to_string(axis.payload);
  j["unit"] = element_to_string(unit.payload);
  j["verified"] = {{"axis", axis.ok()}, {"unit", unit.ok()}};
  return j;
}

OrderedJson law_verdict_to_json(const LawVerdict& v) {
  return {{"law", v.law},
          {"passed", v.passed},
          {"failed", v.failed},
          {"first_failure", v.first_failure}};
}

OrderedJson prop_report_to_json(const PropReport& r) {
  return {{"ring", r.ring},
          {"property", r.property},
          {"holds", r.holds},
          {"cases", r.cases},
          {"detail", r.detail}};
}

}  // namespace persp
