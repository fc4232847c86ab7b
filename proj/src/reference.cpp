#include "st3/reference.hpp"

namespace st3 {

const std::vector<CharRow>& reference_characters() {
  static const std::vector<CharRow> rows = {
      {{0,0,0}, "1"},
      {{1,0,0}, "-a1"},
      {{1,1,0}, "a2-1"},
      {{1,1,1}, "-a3+a1"},
      {{2,0,0}, "a1^2-a2"},
      {{2,1,0}, "-a1a2+a1+a3"},
      {{2,1,1}, "a1a3-a1^2-a2+1"},
      {{2,2,0}, "a2^2-a1a3-a2"},
      {{2,2,1}, "-a2a3+2a1a2-a1"},
      {{2,2,2}, "a3^2-a2^2-a1a3+2a2-1"},
      {{3,0,0}, "-a1^3 + 2a1a2 - a3"},
      {{3,1,0}, "a1^2a2 - a1^2 - a1a3 - a2^2 + 2a2"},
      {{3,1,1}, "a1^3 - a1^2a3 - 2a1 + a2a3"},
      {{3,2,0}, "a1^2a3 - a1a2^2 + a2a3 - a3"},
      {{3,2,1}, "-2a1^2a2 + 2a1^2 + a1a2a3 + a1a3 - a3^2"},
      {{3,2,2}, "-a1^2a3 - a1a2^2 + 4a1a2 + a1a3^2 - 2a1 - a2a3"},
      {{3,3,0}, "a1^2a2 - 2a1a2a3 + a1a3 + a2^3 - 2a2^2 + a3^2"},
      {{3,3,1}, "-a1^3 - a1^2a3 + 2a1a2^2 + a1a3^2 - a2^2a3 - a2a3 + a3"},
      {{3,3,2}, "2a1^2a2 - a1^2 - 2a1a2a3 - a1a3 - a2^3 + 3a2^2 + a2a3^2 - 2a2"},
      {{3,3,3}, "a1^2a3 - 3a1a2^2 + 2a1a2 + a1a3^2 + 2a2^2a3 - 2a2a3 - a3^3 + a3"},
  };
  return rows;
}

const std::vector<DiagonalRow>& reference_connected_diagonals() {
  static const std::vector<DiagonalRow> rows = {
      {{0,0,0}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {{1,0,0}, {1, 2, 2, 3, 3, 4, 5, 6, 5, 6, 9, 10, 9, 18}},
      {{1,1,0}, {1, 3, 3, 4, 7, 9, 12, 16, 14, 18, 26, 34, 34, 82}},
      {{1,1,1}, {1, 4, 2, 3, 4, 6, 9, 14, 9, 14, 19, 30, 26, 74}},
      {{2,0,0}, {1, 4, 3, 6, 6, 10, 17, 27, 15, 23, 43, 61, 45, 153}},
      {{2,1,0}, {1, 8, 6, 13, 22, 44, 84, 152, 76, 140, 240, 416, 320, 1280}},
      {{2,1,1}, {1, 9, 5, 11, 19, 39, 78, 154, 70, 140, 228, 444, 334, 1450}},
      {{2,2,0}, {1, 9, 6, 10, 27, 47, 96, 204, 96, 186, 304, 636, 486, 2250}},
      {{2,2,1}, {1, 12, 6, 13, 30, 66, 149, 342, 133, 302, 485, 1122, 810, 4194}},
      {{2,2,2}, {1, 10, 3, 6, 10, 22, 52, 132, 44, 110, 170, 446, 300, 1740}},
      {{3,0,0}, {1, 6, 4, 10, 10, 20, 45, 92, 35, 68, 147, 264, 164, 848}},
      {{3,1,0}, {1, 17, 9, 27, 45, 121, 313, 741, 235, 571, 1099, 2435, 1539, 9027}},
      {{3,1,1}, {1, 22, 8, 24, 45, 124, 333, 852, 251, 656, 1187, 2924, 1836, 11376}},
      {{3,2,0}, {1, 26, 12, 34, 88, 244, 689, 1886, 535, 1450, 2603, 6898, 4325, 28550}},
      {{3,2,1}, {1, 40, 16, 50, 140, 420, 1240, 3600, 940, 2752, 4768, 13696, 8448, 59136}},
      {{3,2,2}, {1, 24, 8, 24, 57, 174, 537, 1686, 399, 1262, 2123, 6734, 4023, 30654}},
      {{3,3,0}, {1, 19, 10, 20, 77, 179, 537, 1695, 449, 1269, 2205, 6859, 4191, 31515}},
      {{3,3,1}, {1, 40, 12, 34, 118, 358, 1177, 3956, 887, 2880, 4909, 16500, 9680, 78320}},
      {{3,3,2}, {1, 30, 9, 27, 78, 258, 894, 3210, 642, 2288, 3824, 14000, 7920, 69696}},
      {{3,3,3}, {1, 20, 4, 10, 20, 62, 221, 862, 155, 590, 965, 3906, 2101, 20350}},
  };
  return rows;
}

std::string connected_label(int column) {
  return std::string("1.6.") + static_cast<char>('A' + column) + ".1.1a";
}

const std::vector<std::string>& reference_single_classes() {
  static const std::vector<std::string> v = {
      "0,0,0",
      "0,1/3,2/3",
      "1/3,1/3,1/3",
      "1/4,1/4,1/2",
      "0,1/6,5/6",
      "1/6,1/3,1/2",
      "1/7,2/7,4/7",
      "1/8,3/8,1/2",
      "1/9,1/9,7/9",
      "1/12,1/12,5/6",
      "1/12,1/6,3/4",
      "1/12,5/12,1/2",
      "1/18,1/18,8/9",
      "1/21,4/21,16/21",
      "1/24,1/6,19/24",
      "1/90,19/90,7/9",
  };
  return v;
}

const std::vector<std::string>& reference_cyclic_classes() {
  static const std::vector<std::string> v = {
      "0,0,0",
      "0,1/2,1/2",
      "0,1/3,2/3",
      "1/3,1/3,1/3",
      "0,1/4,3/4",
      "1/4,1/4,1/2",
      "0,1/6,5/6",
      "1/6,1/6,2/3",
      "1/6,1/3,1/2",
      "1/7,2/7,4/7",
      "1/8,1/4,5/8",
      "1/8,3/8,1/2",
      "1/9,1/9,7/9",
      "1/12,1/12,5/6",
      "1/12,1/6,3/4",
      "1/12,1/3,7/12",
      "1/12,5/12,1/2",
      "1/18,1/18,8/9",
      "1/18,7/18,5/9",
      "1/21,4/21,16/21",
      "1/24,1/6,19/24",
      "1/24,5/12,13/24",
      "1/36,4/9,19/36",
  };
  return v;
}

}  // namespace st3
