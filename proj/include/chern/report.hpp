#pragma once

// Machine-readable renderings of the index, audit, witness, ku and sweep
// results. JSON keys come out in a fixed order; CSV follows RFC 4180.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chern/indices.hpp"
#include "chern/kulattice.hpp"

namespace chern {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, text };

/// Integers that fit in a signed 64-bit value are JSON numbers, larger ones
/// decimal strings.
Json json_int(const ExactInt& x);

/// One row of a parameter sweep.
struct SweepRow {
  GroupParams params;
  long bound;
  ExactInt h4_index;
  ExactInt chow2_generator;
  std::optional<ExactInt> chow3_generator;  // needs bound >= 3
  bool counterexample;
  bool stabilized;
};

SweepRow sweep_cell(const GroupParams& params, long max_size);

Json to_json(const IndexReport& r);
Json to_json(const AuditReport& r);
Json to_json(const WitnessResult& r);
Json to_json(const KuReport& r);
Json to_json(const SweepRow& r);

std::string csv_field(const std::string& s);

void write(std::ostream& out, const IndexReport& r, OutputFormat fmt);
void write(std::ostream& out, const AuditReport& r, OutputFormat fmt);
void write(std::ostream& out, const WitnessResult& r, OutputFormat fmt);
void write(std::ostream& out, const KuReport& r, OutputFormat fmt);
void write(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat fmt);

/// Column names of the sweep CSV, in order.
const std::vector<std::string>& sweep_csv_columns();

}  // namespace chern
