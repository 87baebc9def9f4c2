#ifndef BINFORM_REFERENCE_TABLES_HPP
#define BINFORM_REFERENCE_TABLES_HPP

/* Reference tables transcribed verbatim, typos included. A leading '*'
 * marks a bold entry; '±' on the first term of b stands for both signs. */

struct reference_row {
    long disc;
    char const * forms;
    long n;
};

inline constexpr reference_row reference_table_1[] = {
    {-3, "[1, 1, 1]", 1},
    {-7, "[1, 1, 2]", 1},
    {-11, "[1, 1, 3]", 1},
    {-15, "[1, 1, 4], *[2, 1, 2]", 2},
    {-19, "[1, 1, 5]", 1},
    {-23, "[1, 1, 6], *[2, ±1, 3]", 3},
    {-27, "[1, 1, 7]", 1},
    {-31, "[1, 1, 8], *[2, ±1, 4]", 3},
    {-35, "[1, 1, 9], *[3, 1, 3]", 2},
    {-39, "[1, 1, 10], [2, ±1, 5], *[3, 3, 4]", 4},
    {-43, "[1, 1, 11]", 1},
    {-47, "[1, 1, 12], [2, ±1, 6], *[3, ±1, 4]", 5},
    {-51, "[1, 1, 13], *[3, 3, 5]", 2},
    {-55, "[1, 1, 14], [2, ±1, 7], *[4, 3, 4]", 4},
    {-59, "[1, 1, 15], *[3, ±1, 5]", 3},
    {-63, "[1, 1, 16], [2, ±1, 8], *[4, 1, 4]", 4},
    {-67, "[1, 1, 17]", 1},
    {-71, "[1, 1, 18], [2, ±1, 9], [3, ±1, 6], *[4, ±3, 5]", 7},
    {-75, "[1, 1, 19], *[3, 3, 7]", 2},
    {-79, "[1, 1, 20], [2, ±1, 10], *[4, ±1, 5]", 5},
    {-83, "[1, 1, 21], *[3, ±1, 7]", 3},
    {-87, "[1, 1, 22], [2, ±1, 11], [3, 3, 8], *[4, ±3, 6]", 6},
    {-91, "[1, 1, 23], *[5, 3, 5]", 2},
    {-95, "[1, 1, 24], [2, ±1, 12], [3, ±1, 8], *[4, ±1, 6], *[5, 5, 6]", 8},
    {-99, "[1, 1, 25], *[5, 1, 5]", 2},
    {-103, "[1, 1, 26], [2, ±1, 13], *[4, ±3, 7]", 5},
    {-107, "[1, 1, 27], *[3, ±1, 9]", 3},
    {-111, "[1, 1, 28], [2, ±1, 14], [4, ±1, 7], [3, 3, 10], *[5, ±3, 6]", 8},
    {-115, "[1, 1, 29], *[5, 5, 7]", 2},
    {-119, "[1, 1, 30], [2, ±1, 15], [3, ±1, 10], *[5, ±1, 6], [4, ±3, 8], *[6, 5, 6]", 10},
    {-123, "[1, 1, 31], *[3, 3, 11]", 2},
    {-127, "[1, 1, 32], [2, ±1, 16], *[4, ±1, 8]", 5},
    {-131, "[1, 1, 33], [3, ±1, 11], *[5, ±3, 7]", 5},
    {-135, "[1, 1, 34], [2, ±1, 17], [4, ±1, 9], *[5, 5, 8]", 6},
    {-139, "[1, 1, 35], *[5, ±1, 7]", 3},
    {-143, "[1, 1, 36], [2, ±1, 18], [3, ±1, 12], [4, ±1, 9], *[6, 1, 6], [6, ±5, 7]", 10},
    {-147, "[1, 1, 37], *[3, 3, 13]", 2},
    {-151, "[1, 1, 38], [2, ±1, 19], [4, ±1, 10], *[5, ±1, 8]", 7},
    {-155, "[1, 1, 39], [3, ±1, 13], *[5, 5, 9]", 4},
    {-159, "[1, 1, 40], [2, ±1, 20], [3, 3, 14], [4, ±1, 10], [5, ±1, 8], *[6, ±3, 7]", 10},
    {-163, "[1, 1, 41]", 1},
};

inline constexpr reference_row reference_table_2[] = {
    {1, "[1, 0, 1]", 1},
    {2, "[1, 0, 2], [2, 0, 2], [2, ±1-i, 2]", 4},
    {3, "[1, 0, 3], [2, ±1, 2], [2, -i, 2]", 4},
    {4, "[1, 0, 4], [2, 0, 2], [2, ±1-i, 3]", 4},
    {5, "[1, 0, 5], [2, ±1, 3], [2, -i, 3]", 4},
    {6, "[1, 0, 6], [2, 0, 3], [2, ±1-i, 4]", 4},
    {7, "[1, 0, 7], [2, ±1, 4], [2, -i, 4], [3, ±1-i, 3]", 6},
    {8, "[1, 0, 8], [2, 0, 4], [2, ±1-i, 5], [3, ±1, 3], [3, -i, 3], [4, ±2-2i, 4]", 9},
    {9, "[1, 0, 9], [2, ±1, 5], [2, -i, 5], [3, 0, 3]", 5},
    {10, "[1, 0, 10], [2, 0, 5], [2, ±1-i, 6], [3, ±1-i, 4]", 6},
    {11, "[1, 0, 11], [2, ±1, 6], [2, -i, 6], [3, ±1, 4], [3, -i, 4], [4, ±2-i, 4], [4, ±1-2i, 4]", 11},
    {12, "[1, 0, 12], [2, 0, 6], [2, ±1-i, 7], [3, 0, 4]", 5},
    {13, "[1, 0, 13], [2, ±1, 7], [2, -i, 7], [3, ±1-i, 5]", 6},
    {14, "[1, 0, 14], [2, 0, 7], [2, ±1-i, 8], [3, ±1, 5], [3, -i, 5], [4, ±1-i, 4]", 9},
    {15, "[1, 0, 15], [2, ±1, 8], [2, -i, 8], [3, 0, 5], [4, ±2, 4], [4, -2i, 4], [4, ±1-2i, 5], [4, ±2-i, 5]", 12},
    {16, "[1, 0, 16], [2, 0, 8], [2, ±1-i, 9], [2, ±1-i, 6], [4, 0, 4], [4, ±2, 5], [4, -2i, 5]", 12},
    {17, "[1, 0, 17], [2, ±1, 9], [2, -i, 9], [3, ±1, 6], [3, ±i, 6], [5, ±2-2i, 5]", 10},
    {18, "[1, 0, 18], [2, 0, 9], [2, ±1-i, 10], [3, 0, 6], [4, ±1-i, 5], [4, ±2, 5], [4, -2i, 5]", 10},
    {19, "[1, 0, 19], [2, ±1, 10], [2, -i, 10], [3, ±1-i, 7], [4, ±1, 5], [4, -i, 5], [4, ±1-2i, 6], [4, ±2-i, 6]", 13},
};

#endif
