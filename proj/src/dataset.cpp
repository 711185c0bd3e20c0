#include "mildisc/dataset.hpp"

#include "mildisc/error.hpp"
#include "mildisc/kernels.hpp"
#include "mildisc/rng.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace mildisc {

const char* to_string(AttributeKind kind) noexcept {
    switch (kind) {
    case AttributeKind::continuous: return "continuous";
    case AttributeKind::nominal: return "nominal";
    case AttributeKind::class_label: return "class";
    }
    return "?";
}

int AttributeSpec::code_of(std::string_view value) const {
    const auto it = std::find(values.begin(), values.end(), value);
    return it == values.end() ? 0 : static_cast<int>(it - values.begin()) + 1;
}

const std::string& AttributeSpec::value_of(int code) const {
    if (code < 1 || static_cast<std::size_t>(code) > values.size())
        fail(ErrorKind::contract, "code " + std::to_string(code) + " not defined for attribute '" + name + "'");
    return values[static_cast<std::size_t>(code) - 1];
}

Dataset::Dataset(std::string name, std::vector<AttributeSpec> attributes,
                 std::vector<std::vector<double>> columns, std::size_t dropped_rows)
    : name_(std::move(name)), attributes_(std::move(attributes)), columns_(std::move(columns)),
      dropped_rows_(dropped_rows) {
    if (attributes_.size() != columns_.size())
        fail(ErrorKind::contract, "attribute list and column list differ in length");
    std::size_t class_attrs = 0;
    for (std::size_t i = 0; i < attributes_.size(); ++i) {
        if (attributes_[i].kind == AttributeKind::class_label) {
            class_index_ = i;
            ++class_attrs;
        }
    }
    if (class_attrs != 1)
        fail(ErrorKind::contract, "dataset needs exactly one class attribute, found " + std::to_string(class_attrs));
    rows_ = columns_.front().size();
    if (rows_ == 0) fail(ErrorKind::empty_dataset, "dataset '" + name_ + "' has no rows");
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].size() != rows_)
            fail(ErrorKind::structural, "column '" + attributes_[i].name + "' has " +
                                            std::to_string(columns_[i].size()) + " cells, expected " +
                                            std::to_string(rows_));
    }
    for (double c : columns_[class_index_]) {
        if (is_missing(c)) fail(ErrorKind::contract, "stored instances may not have a missing class");
    }
}

std::vector<double> Dataset::row(std::size_t r) const {
    std::vector<double> out;
    out.reserve(columns_.size());
    for (const auto& col : columns_) out.push_back(col.at(r));
    return out;
}

std::vector<int> Dataset::class_codes() const {
    const auto& col = columns_[class_index_];
    std::vector<int> out(col.size());
    std::transform(col.begin(), col.end(), out.begin(), [](double v) { return static_cast<int>(v); });
    return out;
}

Dataset Dataset::select_rows(std::span<const std::size_t> rows) const {
    std::vector<std::vector<double>> cols(columns_.size());
    for (std::size_t a = 0; a < columns_.size(); ++a) {
        cols[a].reserve(rows.size());
        for (std::size_t r : rows) cols[a].push_back(columns_[a].at(r));
    }
    return Dataset(name_, attributes_, std::move(cols), 0);
}

Dataset Dataset::with_column(std::size_t attr, AttributeSpec spec, std::vector<double> values) const {
    auto attrs = attributes_;
    auto cols = columns_;
    attrs.at(attr) = std::move(spec);
    cols.at(attr) = std::move(values);
    return Dataset(name_, std::move(attrs), std::move(cols), dropped_rows_);
}

bool Dataset::operator==(const Dataset& other) const {
    if (attributes_ != other.attributes_ || rows_ != other.rows_) return false;
    for (std::size_t a = 0; a < columns_.size(); ++a) {
        const auto& x = columns_[a];
        const auto& y = other.columns_[a];
        for (std::size_t r = 0; r < rows_; ++r) {
            if (is_missing(x[r]) != is_missing(y[r])) return false;
            if (!is_missing(x[r]) && x[r] != y[r]) return false;
        }
    }
    return true;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_missing_token(std::string_view s) { return s.empty() || s == "?"; }

std::optional<double> parse_real(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

struct Record {
    std::vector<std::string> fields;
    std::size_t line = 0;
};

// RFC-4180 reader: quoted fields may contain separators, doubled quotes and
// newlines. Unquoted fields are trimmed. Blank lines are skipped.
std::vector<Record> read_csv_records(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<Record> records;
    Record cur;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;
    std::size_t line = 1;
    cur.line = 1;

    auto end_field = [&] {
        cur.fields.push_back(field_was_quoted ? field : std::string(trim(field)));
        field.clear();
        field_was_quoted = false;
    };
    auto end_record = [&] {
        const bool blank = cur.fields.empty() && !field_was_quoted && trim(field).empty();
        end_field();
        if (!blank) records.push_back(std::move(cur));
        cur = Record{};
        cur.line = line;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++line;
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
        case '"':
            if (!trim(field).empty())
                fail(ErrorKind::structural, "stray quote on line " + std::to_string(line));
            field.clear();
            quoted = true;
            field_was_quoted = true;
            break;
        case ',': end_field(); break;
        case '\n':
            ++line;
            end_record();
            break;
        case '\r': break;
        default: field.push_back(ch);
        }
    }
    if (quoted) fail(ErrorKind::structural, "unterminated quoted field");
    if (!field.empty() || !cur.fields.empty() || field_was_quoted) end_record();
    return records;
}

// Shared back half of both parsers: drops rows with a missing class, infers
// column kinds and assigns nominal codes.
struct RawTable {
    std::string name;
    std::vector<std::string> headers;
    std::vector<std::optional<AttributeKind>> kinds;     // nullopt: infer
    std::vector<std::vector<std::string>> declared;      // declared nominal order (ARFF)
    std::size_t class_index = 0;
    std::vector<std::vector<std::string>> rows;          // cells, already trimmed
};

Dataset build_dataset(RawTable raw) {
    const std::size_t width = raw.headers.size();
    std::size_t dropped = 0;
    std::vector<std::vector<std::string>> kept;
    kept.reserve(raw.rows.size());
    bool any_class = false;
    for (auto& row : raw.rows) {
        if (is_missing_token(row[raw.class_index])) {
            ++dropped;
            continue;
        }
        any_class = true;
        kept.push_back(std::move(row));
    }
    if (raw.rows.empty()) fail(ErrorKind::empty_dataset, "no data rows in '" + raw.name + "'");
    if (!any_class)
        fail(ErrorKind::unusable_dataset, "class column '" + raw.headers[raw.class_index] + "' is entirely missing");

    std::vector<AttributeSpec> attrs(width);
    std::vector<std::vector<double>> columns(width, std::vector<double>(kept.size()));
    for (std::size_t a = 0; a < width; ++a) {
        AttributeSpec& spec = attrs[a];
        spec.name = raw.headers[a];
        AttributeKind kind;
        if (a == raw.class_index) {
            kind = AttributeKind::class_label;
        } else if (raw.kinds[a]) {
            kind = *raw.kinds[a];
        } else {
            kind = AttributeKind::continuous;
            for (const auto& row : kept) {
                if (!is_missing_token(row[a]) && !parse_real(row[a])) {
                    kind = AttributeKind::nominal;
                    break;
                }
            }
        }
        spec.kind = kind;
        auto& col = columns[a];
        if (kind == AttributeKind::continuous) {
            for (std::size_t r = 0; r < kept.size(); ++r) {
                const auto& cell = kept[r][a];
                if (is_missing_token(cell)) {
                    col[r] = missing_value;
                } else if (auto v = parse_real(cell)) {
                    col[r] = *v;
                } else {
                    fail(ErrorKind::structural, "attribute '" + spec.name + "' is numeric but cell '" + cell +
                                                    "' is not a number");
                }
            }
            continue;
        }
        std::unordered_map<std::string, int> codes;
        if (!raw.declared.empty()) spec.values = raw.declared[a];
        for (std::size_t i = 0; i < spec.values.size(); ++i) codes.emplace(spec.values[i], static_cast<int>(i) + 1);
        const bool closed = !raw.declared.empty() && !raw.declared[a].empty();
        for (std::size_t r = 0; r < kept.size(); ++r) {
            const auto& cell = kept[r][a];
            if (is_missing_token(cell)) {
                col[r] = missing_value;
                continue;
            }
            auto it = codes.find(cell);
            if (it == codes.end()) {
                if (closed)
                    fail(ErrorKind::structural, "value '" + cell + "' not declared for attribute '" + spec.name + "'");
                spec.values.push_back(cell);
                it = codes.emplace(cell, static_cast<int>(spec.values.size())).first;
            }
            col[r] = it->second;
        }
    }
    return Dataset(std::move(raw.name), std::move(attrs), std::move(columns), dropped);
}

} // namespace

Dataset parse_csv(std::istream& source, const SchemaHint& hint, std::string name) {
    auto records = read_csv_records(source);
    if (records.empty()) fail(ErrorKind::empty_dataset, "missing header row");
    RawTable raw;
    raw.name = std::move(name);
    raw.headers = std::move(records.front().fields);
    const std::size_t width = raw.headers.size();
    if (width < 1) fail(ErrorKind::structural, "header has no columns");
    raw.kinds.assign(width, std::nullopt);
    raw.class_index = hint.class_index.value_or(width - 1);
    for (const auto& [idx, kind] : hint.kinds) {
        if (idx >= width) fail(ErrorKind::parameter, "schema hint names column " + std::to_string(idx));
        if (kind == AttributeKind::class_label) raw.class_index = idx;
        else raw.kinds[idx] = kind;
    }
    if (raw.class_index >= width) fail(ErrorKind::parameter, "class index out of range");
    for (std::size_t i = 1; i < records.size(); ++i) {
        auto& rec = records[i];
        if (rec.fields.size() != width)
            fail(ErrorKind::structural, "row " + std::to_string(i) + " (line " + std::to_string(rec.line) + ") has " +
                                            std::to_string(rec.fields.size()) + " fields, expected " +
                                            std::to_string(width));
        raw.rows.push_back(std::move(rec.fields));
    }
    return build_dataset(std::move(raw));
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

std::string unquote(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && (s.front() == '\'' || s.front() == '"') && s.back() == s.front())
        return std::string(s.substr(1, s.size() - 2));
    return std::string(s);
}

// Splits on commas outside single or double quotes.
std::vector<std::string> split_arff_values(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    char quote = 0;
    for (char ch : line) {
        if (quote) {
            cur.push_back(ch);
            if (ch == quote) quote = 0;
        } else if (ch == '\'' || ch == '"') {
            quote = ch;
            cur.push_back(ch);
        } else if (ch == ',') {
            out.push_back(unquote(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(unquote(cur));
    return out;
}

// Reads the attribute name token (possibly quoted) and returns the rest.
std::pair<std::string, std::string_view> take_name(std::string_view rest, std::size_t line) {
    rest = trim(rest);
    if (rest.empty()) fail(ErrorKind::structural, "@attribute without a name on line " + std::to_string(line));
    if (rest.front() == '\'' || rest.front() == '"') {
        const auto close = rest.find(rest.front(), 1);
        if (close == std::string_view::npos)
            fail(ErrorKind::structural, "unterminated attribute name on line " + std::to_string(line));
        return {std::string(rest.substr(1, close - 1)), rest.substr(close + 1)};
    }
    const auto sp = rest.find_first_of(" \t{");
    if (sp == std::string_view::npos)
        fail(ErrorKind::structural, "@attribute without a type on line " + std::to_string(line));
    return {std::string(rest.substr(0, sp)), rest.substr(sp)};
}

} // namespace

Dataset parse_arff(std::istream& source) {
    RawTable raw;
    raw.name = "arff";
    bool seen_relation = false;
    bool in_data = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(source, line)) {
        ++lineno;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '%') continue;
        if (!in_data) {
            if (s.front() != '@')
                fail(ErrorKind::structural, "expected a header directive on line " + std::to_string(lineno));
            const auto sp = s.find_first_of(" \t");
            const std::string_view keyword = s.substr(0, sp);
            const std::string_view rest = sp == std::string_view::npos ? std::string_view{} : s.substr(sp);
            if (iequals(keyword, "@relation")) {
                raw.name = unquote(rest);
                seen_relation = true;
            } else if (iequals(keyword, "@attribute")) {
                if (!seen_relation)
                    fail(ErrorKind::structural, "@attribute before @relation on line " + std::to_string(lineno));
                auto [name, type] = take_name(rest, lineno);
                type = trim(type);
                raw.headers.push_back(name);
                if (!type.empty() && type.front() == '{') {
                    const auto close = type.rfind('}');
                    if (close == std::string_view::npos)
                        fail(ErrorKind::structural, "unterminated nominal list on line " + std::to_string(lineno));
                    raw.declared.push_back(split_arff_values(type.substr(1, close - 1)));
                    raw.kinds.emplace_back(AttributeKind::nominal);
                } else {
                    const std::string_view word = type.substr(0, type.find_first_of(" \t["));
                    if (iequals(word, "numeric") || iequals(word, "real") || iequals(word, "integer")) {
                        raw.declared.emplace_back();
                        raw.kinds.emplace_back(AttributeKind::continuous);
                    } else {
                        fail(ErrorKind::unsupported_feature,
                             "attribute '" + name + "' has unsupported type '" + std::string(word) + "'");
                    }
                }
            } else if (iequals(keyword, "@data")) {
                if (raw.headers.empty()) fail(ErrorKind::structural, "@data before any @attribute");
                in_data = true;
            } else {
                fail(ErrorKind::structural, "unknown directive '" + std::string(keyword) + "' on line " +
                                                std::to_string(lineno));
            }
            continue;
        }
        if (s.front() == '{') fail(ErrorKind::unsupported_feature, "sparse ARFF rows are not supported");
        auto values = split_arff_values(s);
        if (values.size() != raw.headers.size())
            fail(ErrorKind::structural, "data line " + std::to_string(lineno) + " has " + std::to_string(values.size()) +
                                            " values, expected " + std::to_string(raw.headers.size()));
        raw.rows.push_back(std::move(values));
    }
    if (!in_data) fail(ErrorKind::structural, "missing @data section");
    raw.class_index = raw.headers.size() - 1;
    return build_dataset(std::move(raw));
}

Dataset load_dataset(const std::string& path, const SchemaHint& hint) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open '" + path + "'");
    const bool arff = path.size() >= 5 && iequals(std::string_view(path).substr(path.size() - 5), ".arff");
    if (arff) return parse_arff(in);
    std::string stem = path.substr(path.find_last_of('/') + 1);
    stem = stem.substr(0, stem.find_last_of('.'));
    return parse_csv(in, hint, stem);
}

namespace {

void write_field(std::ostream& out, std::string_view s) {
    const bool needs_quotes = s.find_first_of(",\"\n\r") != std::string_view::npos ||
                              (!s.empty() && (s.front() == ' ' || s.back() == ' ')) || s == "?";
    if (!needs_quotes) {
        out << s;
        return;
    }
    out << '"';
    for (char ch : s) {
        if (ch == '"') out << '"';
        out << ch;
    }
    out << '"';
}

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace

void write_csv(const Dataset& dataset, std::ostream& out) {
    const auto& attrs = dataset.attributes();
    for (std::size_t a = 0; a < attrs.size(); ++a) {
        if (a) out << ',';
        write_field(out, attrs[a].name);
    }
    out << '\n';
    for (std::size_t r = 0; r < dataset.rows(); ++r) {
        for (std::size_t a = 0; a < attrs.size(); ++a) {
            if (a) out << ',';
            const double v = dataset.cell(r, a);
            if (is_missing(v)) out << '?';
            else if (attrs[a].is_continuous()) out << format_real(v);
            else write_field(out, attrs[a].value_of(static_cast<int>(v)));
        }
        out << '\n';
    }
}

SchemaHint schema_of(const Dataset& dataset) {
    SchemaHint hint;
    for (std::size_t a = 0; a < dataset.attribute_count(); ++a) hint.kinds[a] = dataset.attribute(a).kind;
    hint.class_index = dataset.class_index();
    return hint;
}

AttributeStats attribute_stats(const Dataset& dataset, std::size_t attr_index) {
    const auto& spec = dataset.attribute(attr_index);
    if (!spec.is_continuous())
        fail(ErrorKind::type, "attribute '" + spec.name + "' is " + to_string(spec.kind) + ", not continuous");
    const auto stats = kernels::column_stats(dataset.column(attr_index));
    if (stats.present == 0) fail(ErrorKind::all_missing, "attribute '" + spec.name + "' has no values");
    return {stats.d_min, stats.d_max, stats.missing};
}

std::vector<std::size_t> stratified_allocation(std::span<const std::size_t> class_sizes, double train_fraction) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        fail(ErrorKind::parameter, "train fraction must lie in (0, 1)");
    const std::size_t m = std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
    // The epsilon absorbs representation error in products like 50 * 0.3.
    constexpr long double eps = 1e-9L;
    const long double f = train_fraction;
    const auto target = static_cast<std::size_t>(std::floor(static_cast<long double>(m) * f + 0.5L + eps));
    std::vector<std::size_t> alloc(class_sizes.size());
    std::vector<long double> remainder(class_sizes.size());
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < class_sizes.size(); ++c) {
        const long double exact = static_cast<long double>(class_sizes[c]) * f;
        alloc[c] = static_cast<std::size_t>(std::floor(exact + eps));
        remainder[c] = std::max(0.0L, exact - static_cast<long double>(alloc[c]));
        assigned += alloc[c];
    }
    std::vector<std::size_t> order(class_sizes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b] + eps; });
    for (std::size_t i = 0; assigned < target && i < order.size(); ++i) {
        const std::size_t c = order[i];
        if (alloc[c] < class_sizes[c]) {
            ++alloc[c];
            ++assigned;
        }
    }
    return alloc;
}

SplitPair stratified_split(const Dataset& dataset, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        fail(ErrorKind::parameter, "train fraction must lie in (0, 1)");
    const std::size_t s = dataset.class_count();
    if (dataset.rows() < s)
        fail(ErrorKind::parameter, "dataset has fewer rows than class values");

    std::vector<std::vector<std::size_t>> by_class(s);
    const auto codes = dataset.class_codes();
    for (std::size_t r = 0; r < codes.size(); ++r) by_class[static_cast<std::size_t>(codes[r]) - 1].push_back(r);
    std::vector<std::size_t> sizes(s);
    for (std::size_t c = 0; c < s; ++c) sizes[c] = by_class[c].size();
    const auto alloc = stratified_allocation(sizes, train_fraction);

    std::vector<char> in_train(dataset.rows(), 0);
    for (std::size_t c = 0; c < s; ++c) {
        auto& rows = by_class[c];
        KeyedStream rng(mix_key(seed, c + 1));
        // partial Fisher-Yates: the first alloc[c] slots become the sample
        for (std::size_t i = 0; i < alloc[c]; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(rows.size() - i));
            std::swap(rows[i], rows[j]);
            in_train[rows[i]] = 1;
        }
    }
    std::vector<std::size_t> train_rows, test_rows;
    for (std::size_t r = 0; r < dataset.rows(); ++r) (in_train[r] ? train_rows : test_rows).push_back(r);
    if (train_rows.empty() || test_rows.empty())
        fail(ErrorKind::parameter, "train fraction leaves an empty train or test set");
    return SplitPair{dataset.select_rows(train_rows), dataset.select_rows(test_rows), seed, train_fraction,
                     std::move(train_rows), std::move(test_rows)};
}

} // namespace mildisc
