#pragma once

// Hand transcriptions of the published A3 exchange quivers (path algebra of
// 1 -> 2 -> 3). Modules are written by dimension vector; uniserial modules
// over A3 are determined by it.

#include <set>
#include <string>
#include <vector>

namespace fixtures::a3 {

struct Vertex {
  std::set<std::string> tilting;    // module part of the support tau-tilting pair
  std::set<std::string> cotilting;  // module part of the dual pair
  std::set<std::string> degree0;    // simple-minded collection
  std::set<std::string> shifted;
};

struct Arrow {
  int source;  // 1-based, as printed
  int target;
  std::string label;
};

inline const std::vector<Vertex>& vertices() {
  static const std::vector<Vertex> v = {
      {{"001", "011", "111"}, {}, {"001", "010", "100"}, {}},
      {{"011", "111", "010"}, {"001"}, {"011", "100"}, {"001"}},
      {{"001", "111", "100"}, {"010"}, {"001", "110"}, {"010"}},
      {{"001", "011"}, {"100"}, {"001", "010"}, {"100"}},
      {{"111", "010", "110"}, {"001", "011"}, {"111", "010"}, {"011"}},
      {{"011", "010"}, {"001", "100"}, {"011"}, {"001", "100"}},
      {{"111", "110", "100"}, {"011", "010"}, {"111"}, {"001", "010"}},
      {{"001", "100"}, {"010", "110"}, {"001", "100"}, {"110"}},
      {{"010", "110"}, {"001", "011", "111"}, {"010", "100"}, {"111"}},
      {{"110", "100"}, {"011", "111", "010"}, {"110"}, {"111", "010"}},
      {{"001"}, {"110", "100"}, {"001"}, {"010", "100"}},
      {{"010"}, {"001", "111", "100"}, {"010"}, {"011", "100"}},
      {{"100"}, {"010", "111", "110"}, {"100"}, {"001", "110"}},
      {{}, {"111", "110", "100"}, {}, {"001", "010", "100"}},
  };
  return v;
}

inline const std::vector<Arrow>& arrows() {
  static const std::vector<Arrow> a = {
      {1, 2, "001"},  {1, 3, "010"},   {1, 4, "100"},  {2, 5, "011"},  {2, 6, "100"},
      {3, 7, "001"},  {3, 8, "110"},   {4, 6, "001"},  {4, 11, "010"}, {5, 7, "010"},
      {5, 9, "111"},  {6, 12, "011"},  {7, 10, "111"}, {8, 11, "100"}, {8, 13, "001"},
      {9, 10, "010"}, {9, 12, "100"},  {10, 13, "110"}, {11, 14, "001"}, {12, 14, "010"},
      {13, 14, "100"},
  };
  return a;
}

}  // namespace fixtures::a3
