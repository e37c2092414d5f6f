#include "hetpref/dataset_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace hetpref {

namespace {

using nlohmann::json;

DatasetHeader parse_header_line(const std::string& line) {
  json j = json::parse(line);
  DatasetHeader h;
  h.format = j.at("format").get<std::string>();
  if (h.format != "hetpref-v1") {
    throw std::runtime_error("dataset: unsupported format '" + h.format + "'");
  }
  h.kind = dataset_kind_from_string(j.at("kind").get<std::string>());
  h.seed = j.at("seed").get<std::uint64_t>();
  h.config_hash = j.at("config_hash").get<std::string>();
  return h;
}

void write_header_line(std::ostream& os, const DatasetHeader& h) {
  os << "{\"format\":\"" << h.format << "\",\"kind\":\"" << to_string(h.kind)
     << "\",\"seed\":" << h.seed << ",\"config_hash\":\"" << h.config_hash << "\"}\n";
}

void write_anonymous_record(std::ostream& os, const AnonymousSample& r) {
  os << "{\"x\":" << r.x << ",\"y1\":" << r.y1 << ",\"y2\":" << r.y2
     << ",\"o\":" << static_cast<int>(r.o) << "}";
}

AnonymousSample parse_anonymous_record(const json& j) {
  AnonymousSample r;
  r.x = j.at("x").get<std::uint32_t>();
  r.y1 = j.at("y1").get<std::uint32_t>();
  r.y2 = j.at("y2").get<std::uint32_t>();
  int o = j.at("o").get<int>();
  if (o != 0 && o != 1) throw std::runtime_error("dataset: label must be 0 or 1");
  r.o = static_cast<std::uint8_t>(o);
  return r;
}

std::string next_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) return line;
  }
  return {};
}

}  // namespace

std::string to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::anonymous:
      return "anonymous";
    case DatasetKind::paired:
      return "paired";
    case DatasetKind::full:
      return "full";
  }
  throw std::logic_error("unknown dataset kind");
}

DatasetKind dataset_kind_from_string(const std::string& s) {
  if (s == "anonymous") return DatasetKind::anonymous;
  if (s == "paired") return DatasetKind::paired;
  if (s == "full") return DatasetKind::full;
  throw std::runtime_error("dataset: unknown kind '" + s + "'");
}

std::string config_hash_hex(const std::string& canonical_config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_config) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

void write_jsonl(std::ostream& os, const DatasetHeader& header, const AnonymousDataset& data) {
  DatasetHeader h = header;
  h.kind = DatasetKind::anonymous;
  write_header_line(os, h);
  for (const auto& r : data.records) {
    write_anonymous_record(os, r);
    os << "\n";
  }
}

void write_jsonl(std::ostream& os, const DatasetHeader& header, const PairedDataset& data) {
  DatasetHeader h = header;
  h.kind = DatasetKind::paired;
  write_header_line(os, h);
  for (const auto& r : data.records) {
    os << "{\"first\":";
    write_anonymous_record(os, r.first);
    os << ",\"second\":";
    write_anonymous_record(os, r.second);
    os << "}\n";
  }
}

void write_jsonl(std::ostream& os, const DatasetHeader& header, const FullDataset& data) {
  DatasetHeader h = header;
  h.kind = DatasetKind::full;
  write_header_line(os, h);
  for (const auto& r : data.records) {
    os << "{\"x\":" << r.x << ",\"y1\":" << r.y1 << ",\"y2\":" << r.y2 << ",\"o_vec\":[";
    for (std::size_t u = 0; u < r.o_vec.size(); ++u) {
      if (u > 0) os << ",";
      os << static_cast<int>(r.o_vec[u]);
    }
    os << "]}\n";
  }
}

DatasetHeader read_header(std::istream& is) {
  std::string line = next_line(is);
  if (line.empty()) throw std::runtime_error("dataset: missing header line");
  return parse_header_line(line);
}

AnonymousDataset read_anonymous_jsonl(std::istream& is, DatasetHeader* header) {
  DatasetHeader h = read_header(is);
  if (h.kind != DatasetKind::anonymous) {
    throw std::runtime_error("dataset: expected kind 'anonymous'");
  }
  if (header) *header = h;
  AnonymousDataset out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.records.push_back(parse_anonymous_record(json::parse(line)));
  }
  return out;
}

PairedDataset read_paired_jsonl(std::istream& is, DatasetHeader* header) {
  DatasetHeader h = read_header(is);
  if (h.kind != DatasetKind::paired) throw std::runtime_error("dataset: expected kind 'paired'");
  if (header) *header = h;
  PairedDataset out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    PairedSample r;
    r.first = parse_anonymous_record(j.at("first"));
    r.second = parse_anonymous_record(j.at("second"));
    out.records.push_back(r);
  }
  return out;
}

FullDataset read_full_jsonl(std::istream& is, DatasetHeader* header) {
  DatasetHeader h = read_header(is);
  if (h.kind != DatasetKind::full) throw std::runtime_error("dataset: expected kind 'full'");
  if (header) *header = h;
  FullDataset out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    FullAnnotationSample r;
    r.x = j.at("x").get<std::uint32_t>();
    r.y1 = j.at("y1").get<std::uint32_t>();
    r.y2 = j.at("y2").get<std::uint32_t>();
    for (const auto& bit : j.at("o_vec")) {
      int b = bit.get<int>();
      if (b != 0 && b != 1) throw std::runtime_error("dataset: o_vec entries must be 0 or 1");
      r.o_vec.push_back(static_cast<std::uint8_t>(b));
    }
    if (out.records.empty()) {
      out.num_types = r.o_vec.size();
    } else if (r.o_vec.size() != out.num_types) {
      throw std::runtime_error("dataset: inconsistent o_vec length");
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace hetpref
