#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "psiflat/search.hpp"

namespace psiflat {

namespace {

using nlohmann::json;

void sort_records(std::vector<SearchRecord>& records) {
  std::sort(records.begin(), records.end(), [](const SearchRecord& x, const SearchRecord& y) {
    return std::tie(x.p, x.q, x.r) < std::tie(y.p, y.q, y.r);
  });
}

json to_json(const SearchRecord& rec) {
  json j;
  j["p"] = rec.p;
  j["q"] = rec.q;
  j["r"] = rec.r;
  j["alpha"] = rec.alpha;
  j["beta"] = rec.beta;
  j["p_prime"] = rec.p_prime;
  j["q_prime"] = rec.q_prime;
  j["C_formula"] = rec.c_formula;
  j["C_oracle"] = rec.c_oracle ? json(*rec.c_oracle) : json(nullptr);
  j["flat"] = rec.flat ? 1 : 0;
  j["cond_a"] = rec.conditions[0] ? 1 : 0;
  j["cond_b"] = rec.conditions[1] ? 1 : 0;
  j["cond_c"] = rec.conditions[2] ? 1 : 0;
  j["cond_d"] = rec.conditions[3] ? 1 : 0;
  j["ratio_num"] = rec.ratio_num;
  j["ratio_den"] = rec.ratio_den;
  return j;
}

bool flag(const json& j, const char* key) {
  const int v = j.at(key).get<int>();
  if (v != 0 && v != 1) throw std::runtime_error(std::string("field ") + key + " must be 0 or 1");
  return v == 1;
}

SearchRecord from_json(const json& j) {
  SearchRecord rec;
  rec.p = j.at("p").get<Int>();
  rec.q = j.at("q").get<Int>();
  rec.r = j.at("r").get<Int>();
  rec.alpha = j.at("alpha").get<Int>();
  rec.beta = j.at("beta").get<Int>();
  rec.p_prime = j.at("p_prime").get<Int>();
  rec.q_prime = j.at("q_prime").get<Int>();
  rec.c_formula = j.at("C_formula").get<Int>();
  if (!j.at("C_oracle").is_null()) rec.c_oracle = j.at("C_oracle").get<Int>();
  rec.flat = flag(j, "flat");
  rec.conditions = {flag(j, "cond_a"), flag(j, "cond_b"), flag(j, "cond_c"), flag(j, "cond_d")};
  rec.ratio_num = j.at("ratio_num").get<Int>();
  rec.ratio_den = j.at("ratio_den").get<Int>();
  return rec;
}

}  // namespace

void write_csv(std::vector<SearchRecord> records, std::ostream& os) {
  sort_records(records);
  os << kCsvHeader << '\n';
  for (const SearchRecord& r : records) {
    os << r.p << ',' << r.q << ',' << r.r << ',' << r.alpha << ',' << r.beta << ',' << r.p_prime << ','
       << r.q_prime << ',' << r.c_formula << ',';
    if (r.c_oracle) os << *r.c_oracle;
    os << ',' << int(r.flat);
    for (bool c : r.conditions) os << ',' << int(c);
    os << ',' << r.ratio_num << ',' << r.ratio_den << '\n';
  }
}

void write_json(std::vector<SearchRecord> records, std::ostream& os) {
  sort_records(records);
  json arr = json::array();
  for (const SearchRecord& r : records) arr.push_back(to_json(r));
  os << arr.dump(2) << '\n';
}

void export_records(const std::vector<SearchRecord>& records, ExportFormat format, std::ostream& os) {
  if (format == ExportFormat::Csv)
    write_csv(records, os);
  else
    write_json(records, os);
}

void export_records(const std::vector<SearchRecord>& records, ExportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  export_records(records, format, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<SearchRecord> records_from_json(const std::string& text) {
  std::vector<SearchRecord> out;
  for (const json& j : json::parse(text)) out.push_back(from_json(j));
  return out;
}

std::vector<SearchRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("missing or unexpected CSV header");

  std::vector<SearchRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    if (f.size() != 16) throw std::runtime_error("expected 16 fields in CSV row: " + line);

    auto num = [&](std::size_t i) { return static_cast<Int>(std::stoll(f[i])); };
    auto bit = [&](std::size_t i) {
      if (f[i] != "0" && f[i] != "1") throw std::runtime_error("expected 0/1 in CSV row: " + line);
      return f[i] == "1";
    };
    SearchRecord r;
    r.p = num(0);
    r.q = num(1);
    r.r = num(2);
    r.alpha = num(3);
    r.beta = num(4);
    r.p_prime = num(5);
    r.q_prime = num(6);
    r.c_formula = num(7);
    if (!f[8].empty()) r.c_oracle = num(8);
    r.flat = bit(9);
    r.conditions = {bit(10), bit(11), bit(12), bit(13)};
    r.ratio_num = num(14);
    r.ratio_den = num(15);
    out.push_back(r);
  }
  return out;
}

}  // namespace psiflat
