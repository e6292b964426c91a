#include "forkred/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace forkred {

namespace {

const Int kJsonSafeMax("9007199254740991");  // 2^53 - 1

IntMatrix matrix_from_json(const nlohmann::json& rows, int n, int cols,
                           const char* name) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError(std::string(name) + " must be an array of " +
                     std::to_string(n) + " rows");
  IntMatrix out(n, cols);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(std::string(name) + " row " + std::to_string(i + 1) +
                       " must have " + std::to_string(cols) + " entries");
    for (int j = 0; j < cols; ++j) out.at(i, j) = int_from_json(row[j]);
  }
  return out;
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json int_to_json(const Int& x) {
  if (abs(x) <= kJsonSafeMax) return nlohmann::json(x.get_si());
  return nlohmann::json(x.get_str());
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("not a decimal integer: \"" + j.get<std::string>() +
                       "\"");
    }
  }
  throw ParseError("matrix entries must be integers or decimal strings");
}

nlohmann::json quiver_to_json(const ExtendedQuiver& q) {
  nlohmann::json out;
  out["n"] = q.n;
  out["m"] = q.m;
  out["b"] = matrix_to_json(q.b);
  out["c"] = matrix_to_json(q.c);
  return out;
}

ExtendedQuiver quiver_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("b"))
    throw ParseError("quiver JSON needs at least \"n\" and \"b\"");
  const int n = j["n"].get<int>();
  const int m = j.contains("m") ? j["m"].get<int>() : 0;
  if (n < 0 || m < 0) throw ParseError("negative vertex count");
  IntMatrix b = matrix_from_json(j["b"], n, n, "b");
  IntMatrix c(n, m);
  if (m > 0) {
    if (!j.contains("c")) throw ParseError("m > 0 but \"c\" is missing");
    c = matrix_from_json(j["c"], n, m, "c");
  }
  return ExtendedQuiver(QuiverMatrix(n, std::move(b)), std::move(c));
}

std::string quiver_to_text(const ExtendedQuiver& q) {
  std::ostringstream out;
  out << q.n << ' ' << q.m << '\n';
  for (int i = 0; i < q.n; ++i) {
    for (int j = 0; j < q.n; ++j) {
      if (j) out << ' ';
      out << q.b.at(i, j).get_str();
    }
    for (int j = 0; j < q.m; ++j) out << ' ' << q.c.at(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

ExtendedQuiver quiver_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = -1, m = -1;
  if (!(in >> n >> m))
    throw ParseError("text quiver: first line must be \"n m\"");
  if (n < 0 || m < 0) throw ParseError("negative vertex count");
  IntMatrix b(n, n), c(n, m);
  std::string tok;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n + m; ++j) {
      if (!(in >> tok))
        throw ParseError("text quiver: row " + std::to_string(i + 1) +
                         " ended after " + std::to_string(j) + " of " +
                         std::to_string(n + m) + " entries");
      Int v;
      try {
        v = Int(tok);
      } catch (const std::invalid_argument&) {
        throw ParseError("text quiver: bad integer \"" + tok + "\" at row " +
                         std::to_string(i + 1) + ", column " +
                         std::to_string(j + 1));
      }
      if (j < n) b.at(i, j) = v;
      else c.at(i, j - n) = v;
    }
  }
  if (in >> tok)
    throw ParseError("text quiver: trailing content \"" + tok + "\"");
  return ExtendedQuiver(QuiverMatrix(n, std::move(b)), std::move(c));
}

ExtendedQuiver parse_quiver(const std::string& content) {
  size_t i = content.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && content[i] == '{') {
    nlohmann::json j = nlohmann::json::parse(content, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON input");
    return quiver_from_json(j);
  }
  return quiver_from_text(content);
}

ExtendedQuiver load_quiver(const std::string& path_or_inline) {
  size_t i = path_or_inline.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && path_or_inline[i] == '{')
    return parse_quiver(path_or_inline);
  std::ostringstream buf;
  if (path_or_inline == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw ParseError("cannot open " + path_or_inline);
    buf << in.rdbuf();
  }
  return parse_quiver(buf.str());
}

nlohmann::json fork_certificate_to_json(const ForkCertificate& cert) {
  nlohmann::json out;
  out["r"] = cert.r;
  out["ordering"] = cert.ordering;
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : cert.witnesses) {
    witnesses.push_back({{"i", w.i},
                         {"j", w.j},
                         {"f_ji", int_to_json(w.f_ji)},
                         {"f_ir", int_to_json(w.f_ir)},
                         {"f_rj", int_to_json(w.f_rj)}});
  }
  out["witnesses"] = std::move(witnesses);
  if (!cert.other_returns.empty()) out["other_returns"] = cert.other_returns;
  return out;
}

std::string to_dot(const ExtendedQuiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  std::vector<VertexColor> colors;
  std::vector<bool> mixed(q.n, false);
  if (q.m > 0) {
    colors.resize(q.n, VertexColor::Blue);
    for (int v = 1; v <= q.n; ++v) {
      switch (c_row_sign(q, v)) {
        case RowSign::Positive: colors[v - 1] = VertexColor::Green; break;
        case RowSign::Negative: colors[v - 1] = VertexColor::Red; break;
        case RowSign::Zero: colors[v - 1] = VertexColor::Blue; break;
        case RowSign::Mixed: mixed[v - 1] = true; break;
      }
    }
  }
  for (int v = 1; v <= q.n; ++v) {
    out << "  v" << v << " [shape=circle, label=\"" << v << "\"";
    if (q.m > 0) {
      const char* fill = "gray";
      if (!mixed[v - 1]) {
        switch (colors[v - 1]) {
          case VertexColor::Green: fill = "green"; break;
          case VertexColor::Red: fill = "red"; break;
          case VertexColor::Blue: fill = "lightblue"; break;
        }
      }
      out << ", style=filled, fillcolor=" << fill;
    }
    out << "];\n";
  }
  for (int f = 1; f <= q.m; ++f)
    out << "  f" << q.n + f << " [shape=square, label=\"" << q.n + f
        << "\"];\n";
  for (int i = 0; i < q.n; ++i)
    for (int j = i + 1; j < q.n; ++j) {
      const int s = sign_of(q.b.at(i, j));
      if (s == 0) continue;
      Int w = abs(q.b.at(i, j));
      if (s > 0)
        out << "  v" << i + 1 << " -> v" << j + 1;
      else
        out << "  v" << j + 1 << " -> v" << i + 1;
      out << " [label=\"" << w.get_str() << "\"];\n";
    }
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.m; ++j) {
      const int s = sign_of(q.c.at(i, j));
      if (s == 0) continue;
      Int w = abs(q.c.at(i, j));
      if (s > 0)
        out << "  v" << i + 1 << " -> f" << q.n + j + 1;
      else
        out << "  f" << q.n + j + 1 << " -> v" << i + 1;
      out << " [label=\"" << w.get_str() << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace forkred
