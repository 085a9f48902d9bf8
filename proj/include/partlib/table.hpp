// Deterministic table emission (CSV, Markdown, JSON) for search grids and
// rank sweeps. All output is byte-stable for a given input: rows are already
// sorted by their producers and formatting uses no locale-dependent pieces.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "partlib/rank.hpp"
#include "partlib/search.hpp"

namespace partlib {

enum class table_format { csv, md, json };

inline table_format parse_table_format(const std::string& s) {
  if (s == "csv") return table_format::csv;
  if (s == "md") return table_format::md;
  if (s == "json") return table_format::json;
  throw error(errc::parse_error, "unknown table format: " + s);
}

// Search grid. CSV schema is fixed: header "m,p,n1,bound"; a miss leaves the
// n1 field empty and keeps the scanned bound in the last column.
inline void emit_search_table(std::ostream& os, const search_report& rep, table_format fmt) {
  switch (fmt) {
    case table_format::csv: {
      os << "m,p,n1,bound\n";
      for (const auto& r : rep.rows) {
        os << r.m << ',' << r.p << ',';
        if (r.n1) os << *r.n1;
        os << ',' << r.bound << '\n';
      }
      break;
    }
    case table_format::md: {
      os << "| m | p | n1 |\n|---|---|---|\n";
      for (const auto& r : rep.rows) {
        os << "| " << r.m << " | " << r.p << " | ";
        if (r.n1) os << *r.n1;
        else os << "-";
        os << " |\n";
      }
      break;
    }
    case table_format::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rep.rows) {
        nlohmann::json row;
        row["m"] = r.m;
        row["p"] = r.p;
        if (r.n1) row["n1"] = *r.n1;
        else row["n1"] = nullptr;
        row["bound"] = r.bound;
        j.push_back(row);
      }
      os << j.dump(2) << '\n';
      break;
    }
  }
}

// Rank sweep over moduli. CSV uses "gt:<cutoff>" for exceeded cells so the
// column stays machine-parseable; Markdown uses ">" for the same cells.
inline void emit_rank_table(std::ostream& os, const std::vector<rank_result>& rows,
                            table_format fmt) {
  switch (fmt) {
    case table_format::csv: {
      os << "h,rank\n";
      for (const auto& r : rows) os << r.h << ',' << r.csv_value() << '\n';
      break;
    }
    case table_format::md: {
      os << "| h | rank |\n|---|---|\n";
      for (const auto& r : rows) os << "| " << r.h << " | " << r.display() << " |\n";
      break;
    }
    case table_format::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json row;
        row["h"] = r.h;
        if (r.exceeded) {
          row["rank"] = nullptr;
          row["exceeds"] = r.cutoff;
        } else {
          row["rank"] = r.rank;
        }
        j.push_back(row);
      }
      os << j.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace partlib
