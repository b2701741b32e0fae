#pragma once

// Report builder: every entry lands in the text form and the JSON form at
// the same time, so the two never drift apart.

#include <bimatrix/io.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bimat {

using json = nlohmann::ordered_json;

struct Field {
    std::string key;
    std::string shown;
    json value;
};

template <typename T>
std::string tuple_text(const std::vector<T>& v, bool compact = false)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += compact ? "," : ", ";
        out += v[i].str();
    }
    return out + ")";
}

template <typename T>
json tuple_json(const std::vector<T>& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

template <typename T>
std::string matrix_text(const bimatrix::Matrix<T>& m)
{
    std::string out = "(";
    for (bimatrix::Index i = 0; i < m.rows(); ++i) {
        if (i) out += ",";
        out += tuple_text(m.row(i), true);
    }
    return out + ")";
}

template <typename T>
json matrix_json(const bimatrix::Matrix<T>& m)
{
    json out = json::array();
    for (bimatrix::Index i = 0; i < m.rows(); ++i) out.push_back(tuple_json(m.row(i)));
    return out;
}

inline std::string index_set_text(const bimatrix::IndexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

inline json index_set_json(const bimatrix::IndexSet& s)
{
    json out = json::array();
    for (auto i : s) out.push_back(i + 1);
    return out;
}

class Report {
public:
    Report() { stack_.push_back(&root_); }
    Report(const Report&) = delete;
    Report& operator=(const Report&) = delete;

    void begin(const std::string& section)
    {
        text_ += "[" + section + "]\n";
        (*stack_.back())[section] = json::object();
        stack_.push_back(&(*stack_.back())[section]);
    }
    void end() { stack_.pop_back(); }

    void kv(const std::string& key, const std::string& shown, json value)
    {
        text_ += key + "=" + shown + "\n";
        (*stack_.back())[key] = std::move(value);
    }
    void kv(const std::string& key, const std::string& value) { kv(key, value, json(value)); }
    void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
    void kv(const std::string& key, bool value) { kv(key, value ? "true" : "false", json(value)); }

    // Repeated line; collected as a JSON array under `key`.
    void push(const std::string& key, const std::string& shown, json value)
    {
        text_ += key + "=" + shown + "\n";
        auto& arr = (*stack_.back())[key];
        if (arr.is_null()) arr = json::array();
        arr.push_back(std::move(value));
    }

    // One text line of space-separated key=value pairs; a JSON array of
    // objects under `group`.
    void record(const std::string& group, const std::vector<Field>& fields)
    {
        json obj = json::object();
        std::string line;
        for (const auto& f : fields) {
            if (!line.empty()) line += ' ';
            line += f.key + "=" + f.shown;
            obj[f.key] = f.value;
        }
        text_ += line + "\n";
        auto& arr = (*stack_.back())[group];
        if (arr.is_null()) arr = json::array();
        arr.push_back(std::move(obj));
    }

    template <typename T>
    void bimatrix(const std::string& key, const bimatrix::BiMatrix<T>& b,
                  const std::optional<std::string>& field1 = std::nullopt,
                  const std::optional<std::string>& field2 = std::nullopt)
    {
        text_ += bimatrix::format_bimatrix(b, field1, field2);
        json obj = json::object();
        obj["ring"] = bimatrix::to_string(bimatrix::RingOf<T>::value);
        obj["first"] = matrix_json(b.first());
        obj["second"] = matrix_json(b.second());
        if (field1) obj["field1"] = *field1;
        if (field2) obj["field2"] = *field2;
        (*stack_.back())[key] = std::move(obj);
    }

    const std::string& text() const { return text_; }
    std::string json_text() const { return root_.dump(2) + "\n"; }

private:
    std::string text_;
    json root_ = json::object();
    std::vector<json*> stack_;
};

} // namespace bimat
