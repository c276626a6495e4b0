#include "vamp/grid.hpp"

#include <iterator>

namespace vamp {

RegionSet region_union(const RegionSet& a, const RegionSet& b) {
    std::vector<CellCoord> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return RegionSet::from_sorted_unique(std::move(out));
}

RegionSet region_difference(const RegionSet& a, const RegionSet& b) {
    std::vector<CellCoord> out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return RegionSet::from_sorted_unique(std::move(out));
}

RegionSet region_intersection(const RegionSet& a, const RegionSet& b) {
    std::vector<CellCoord> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return RegionSet::from_sorted_unique(std::move(out));
}

}  // namespace vamp
