#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bruhat/partition.hpp"
#include "bruhat/polyring.hpp"

namespace bruhat {

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {});

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    int rows() const { return outer_.length(); }
    // Cells (row, column), 0-based, row by row.
    std::vector<std::pair<int, int>> cells() const;
    bool contains_cell(int r, int c) const;
    // "outer/inner" part lists, e.g. "5,4,2,1/3,2".
    std::string str() const;

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

SkewShape parse_skew_shape(const std::string& text);

class Tableau {
public:
    Tableau() = default;
    // rows[r] lists the entries of row r left to right.
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows);
    static Tableau straight(const std::vector<std::vector<int>>& rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int r, int c) const;

    bool is_semistandard() const;
    bool is_standard() const;

    std::string str() const;
    std::string json() const;

    bool operator==(const Tableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

Coeff f_lambda(const Partition& lambda);
// Maximal chains from the empty partition to lambda in Young's lattice.
Coeff young_chain_count(const Partition& lambda);

std::pair<Tableau, Tableau> schensted(const std::vector<int>& word);
Tableau insertion_tableau(const std::vector<int>& word);

std::vector<int> diagonal_word(const Tableau& R);
std::vector<int> column_word(const Tableau& R);
bool knuth_equivalent(const std::vector<int>& a, const std::vector<int>& b);

std::vector<Tableau> standard_tableaux(const SkewShape& shape);
Coeff count_standard_tableaux(const SkewShape& shape);
Tableau row_superstandard(const Partition& nu);

Coeff lrc_classical(const Partition& mu, const Partition& nu, const Partition& lambda);
// Littlewood-Richardson tableaux of shape lambda/mu and content nu.
Coeff lrc_ballot(const Partition& mu, const Partition& nu, const Partition& lambda);
// Standard skew tableaux of the shape whose column word inserts to T.
Coeff skew_lrc(const SkewShape& shape, const Partition& nu, const Tableau& T);
Coeff skew_lrc(const SkewShape& shape, const Partition& nu);

std::vector<Partition> horizontal_strips(const Partition& mu, int m, int row_bound);

} // namespace bruhat
