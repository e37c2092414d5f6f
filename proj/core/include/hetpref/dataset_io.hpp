#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hetpref/datasets.hpp"

namespace hetpref {

enum class DatasetKind { anonymous, paired, full };

std::string to_string(DatasetKind kind);
DatasetKind dataset_kind_from_string(const std::string& s);

// First line of every dataset file. Remaining lines hold one record each.
struct DatasetHeader {
  std::string format = "hetpref-v1";
  DatasetKind kind = DatasetKind::anonymous;
  std::uint64_t seed = 0;
  std::string config_hash;
};

// FNV-1a over a canonical config string, hex-encoded.
std::string config_hash_hex(const std::string& canonical_config);

void write_jsonl(std::ostream& os, const DatasetHeader& header, const AnonymousDataset& data);
void write_jsonl(std::ostream& os, const DatasetHeader& header, const PairedDataset& data);
void write_jsonl(std::ostream& os, const DatasetHeader& header, const FullDataset& data);

AnonymousDataset read_anonymous_jsonl(std::istream& is, DatasetHeader* header = nullptr);
PairedDataset read_paired_jsonl(std::istream& is, DatasetHeader* header = nullptr);
FullDataset read_full_jsonl(std::istream& is, DatasetHeader* header = nullptr);

// Peeks the header without consuming records.
DatasetHeader read_header(std::istream& is);

}  // namespace hetpref
