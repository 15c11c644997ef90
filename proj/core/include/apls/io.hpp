#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "apls/errors.hpp"
#include "apls/graph.hpp"
#include "apls/hyperfinite.hpp"
#include "apls/labeling.hpp"
#include "apls/measures.hpp"
#include "apls/separators.hpp"
#include "apls/verifier.hpp"

// Line-oriented text formats. Every reader throws FormatError on any
// deviation, including trailing garbage.
namespace apls::io {

// graph <n> <m> <d>
// <u> <v>            (u < v, ascending)
void write_graph(std::ostream& os, const BoundedDegreeGraph& g);
BoundedDegreeGraph read_graph(std::istream& is);

// witness <n> <r>
// <x> <D> <z>:<num> ...   (x = 0..n-1, z ascending)
void write_witness(std::ostream& os, const WitnessFunction& w);
WitnessFunction read_witness(std::istream& is);

// sepdist <n> <K> <support_size>
// <num>/<den> <|Y|> <y> ...
void write_sepdist(std::ostream& os, const SeparatorDistribution& dist);
SeparatorDistribution read_sepdist(std::istream& is, const BoundedDegreeGraph& g);

// labels <n> <r> <alpha> <palette> <num>/<den> [<K>]
// <x> <color> <t_0> ... <t_{palette-1}>
void write_labels(std::ostream& os, const ProofLabeling& labeling);
ProofLabeling read_labels(std::istream& is);

// verdict accept|reject
// reject <x> <check>
void write_verdict(std::ostream& os, const Verdict& verdict);

// partition <n> <num_blocks> <|W|>
// <size> <v> ...
// removed
// <u> <v>
void write_partition(std::ostream& os, Vertex n, const PartitionResult& partition);
PartitionResult read_partition(std::istream& is);

std::string to_string(const BoundedDegreeGraph& g);

/// Opens `path` and applies `read`; missing files raise FormatError.
template <class Reader>
auto read_file(const std::filesystem::path& path, Reader read) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read(in);
}

/// Writes through `write` to `path`, or to stdout when path is "-" or empty.
template <class Writer>
void write_file(const std::filesystem::path& path, Writer write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  write(out);
  if (!out) throw FormatError("write failed for " + path.string());
}

}  // namespace apls::io
