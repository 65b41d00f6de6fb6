#pragma once

#include <string>
#include <string_view>

#include "quadff/classify.hpp"
#include "quadff/search.hpp"
#include "quadff/zeta.hpp"

namespace quadff {

enum class Format { text, jsonl };

inline constexpr std::string_view kRecordSchema = "quadff.record/1";
inline constexpr std::string_view kZetaSchema = "quadff.zeta/1";

/// One line, fixed key order, no trailing newline. The key is included when
/// non-null.
std::string record_jsonl(const ClassificationRecord& r, const CanonicalKey* key = nullptr);
/// Inverse of record_jsonl. Throws Errc::io_error on malformed input.
ClassificationRecord record_from_jsonl(std::string_view line, CanonicalKey* key = nullptr);
std::string record_text(const ClassificationRecord& r);

std::string zeta_jsonl(const ZetaReport& r);
std::string zeta_text(const ZetaReport& r);

std::string search_output(const SearchResult& r, Format format);
/// Grouped by h, then q, then g.
std::string table_output(const ClassificationTable& t, Format format);

}  // namespace quadff
