#include "quadff/record_io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "quadff/error.hpp"

namespace quadff {

namespace {

using Json = nlohmann::ordered_json;

template <typename T>
std::string list(const std::vector<T>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

Json record_json(const ClassificationRecord& r) {
  Json j;
  j["schema"] = kRecordSchema;
  j["q"] = r.q;
  j["g"] = r.g;
  j["t"] = r.t;
  j["h"] = r.h;
  j["expected_h"] = r.expected_h;
  j["exponent_two"] = r.exponent_two;
  j["N"] = r.N;
  j["a"] = r.a;
  j["ramification"] = r.ramification;
  j["equation"] = r.equation;
  return j;
}

}  // namespace

std::string record_jsonl(const ClassificationRecord& r, const CanonicalKey* key) {
  Json j = record_json(r);
  if (key) j["key"] = *key;
  return j.dump();
}

ClassificationRecord record_from_jsonl(std::string_view line, CanonicalKey* key) {
  try {
    const Json j = Json::parse(line);
    if (j.at("schema").get<std::string>() != kRecordSchema) throw Error(Errc::io_error, "unknown schema");
    ClassificationRecord r;
    r.q = j.at("q").get<int>();
    r.g = j.at("g").get<int>();
    r.t = j.at("t").get<int>();
    r.h = j.at("h").get<std::int64_t>();
    r.expected_h = j.at("expected_h").get<std::int64_t>();
    r.exponent_two = j.at("exponent_two").get<bool>();
    r.N = j.at("N").get<std::vector<std::int64_t>>();
    r.a = j.at("a").get<std::vector<std::int64_t>>();
    r.ramification = j.at("ramification").get<std::vector<int>>();
    r.equation = j.at("equation").get<std::string>();
    if (key) *key = j.contains("key") ? j.at("key").get<CanonicalKey>() : CanonicalKey{};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::io_error, std::string("malformed record: ") + e.what());
  }
}

std::string record_text(const ClassificationRecord& r) {
  std::ostringstream os;
  os << std::left;
  os << std::setw(14) << "equation" << r.equation << '\n';
  os << std::setw(14) << "q" << r.q << '\n';
  os << std::setw(14) << "g" << r.g << '\n';
  os << std::setw(14) << "t" << r.t << '\n';
  os << std::setw(14) << "ramification" << list(r.ramification) << '\n';
  os << std::setw(14) << "N" << list(r.N) << '\n';
  os << std::setw(14) << "L" << list(r.a) << '\n';
  os << std::setw(14) << "h" << r.h << '\n';
  os << std::setw(14) << "expected_h" << r.expected_h << '\n';
  os << std::setw(14) << "exponent_two" << (r.exponent_two ? "yes" : "no") << '\n';
  return os.str();
}

std::string zeta_jsonl(const ZetaReport& r) {
  Json j;
  j["schema"] = kZetaSchema;
  j["q"] = r.q;
  j["g"] = r.g;
  j["np"] = r.np;
  j["N"] = r.N;
  j["a"] = r.a;
  j["h"] = r.h;
  return j.dump();
}

std::string zeta_text(const ZetaReport& r) {
  std::ostringstream os;
  os << std::left;
  os << std::setw(4) << "q" << r.q << '\n';
  os << std::setw(4) << "g" << r.g << '\n';
  os << std::setw(4) << "np" << list(r.np) << '\n';
  os << std::setw(4) << "N" << list(r.N) << '\n';
  os << std::setw(4) << "n" << list(r.n) << '\n';
  os << std::setw(4) << "S" << list(r.S) << '\n';
  os << std::setw(4) << "L" << list(r.a) << '\n';
  os << std::setw(4) << "h" << r.h << '\n';
  return os.str();
}

namespace {

void table_rows(std::ostringstream& os, const std::vector<ClassificationRecord>& rows) {
  for (const auto& r : rows) {
    os << "  " << std::left << std::setw(4) << r.h << std::setw(4) << r.q << std::setw(4) << r.g << std::setw(4)
       << r.t << std::setw(18) << list(r.N) << r.equation << '\n';
  }
}

const char* kHeader = "  h   q   g   t   N                 equation\n";

}  // namespace

std::string search_output(const SearchResult& r, Format format) {
  std::ostringstream os;
  if (format == Format::jsonl) {
    for (std::size_t i = 0; i < r.classes.size(); ++i) os << record_jsonl(r.classes[i], &r.keys[i]) << '\n';
    return os.str();
  }
  os << "q=" << r.q << " g=" << r.g << " h=" << r.h << ": " << r.classes.size() << " class"
     << (r.classes.size() == 1 ? "" : "es") << '\n';
  if (!r.classes.empty()) {
    os << kHeader;
    table_rows(os, r.classes);
  }
  return os.str();
}

std::string table_output(const ClassificationTable& t, Format format) {
  std::ostringstream os;
  if (format == Format::jsonl) {
    for (const auto& run : t.runs) os << search_output(run, Format::jsonl);
    return os.str();
  }
  for (std::int64_t h : {2, 4, 8, 16, 32}) {
    std::vector<ClassificationRecord> rows;
    for (const auto& run : t.runs) {
      if (run.h == h) rows.insert(rows.end(), run.classes.begin(), run.classes.end());
    }
    os << "h = " << h << ": " << rows.size() << " class" << (rows.size() == 1 ? "" : "es") << '\n';
    if (!rows.empty()) {
      os << kHeader;
      table_rows(os, rows);
    }
  }
  os << "total: " << t.class_count() << '\n';
  return os.str();
}

}  // namespace quadff
