#include "cpstrata/sparse.hpp"

namespace cpstrata::linalg {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x)
{
    if (sgn(a) == 0)
        return;
    for (const auto& [i, v] : x) {
        auto [it, inserted] = y.try_emplace(i, a * v);
        if (!inserted) {
            it->second += a * v;
            if (sgn(it->second) == 0)
                y.erase(it);
        }
    }
}

SparseVector Echelon::reduce(SparseVector v) const
{
    SparseVector out;
    while (!v.empty()) {
        auto top = std::prev(v.end());
        const int col = top->first;
        Rational c = std::move(top->second);
        v.erase(top);
        auto row = rows_.find(col);
        if (row == rows_.end()) {
            out.emplace_hint(out.begin(), col, std::move(c));
            continue;
        }
        for (const auto& [j, a] : row->second) {
            if (j == col)
                continue;
            auto [it, inserted] = v.try_emplace(j, -c * a);
            if (!inserted) {
                it->second -= c * a;
                if (sgn(it->second) == 0)
                    v.erase(it);
            }
        }
    }
    return out;
}

int Echelon::insert(SparseVector v)
{
    auto r = reduce(std::move(v));
    if (r.empty())
        return -1;
    auto top = std::prev(r.end());
    const int pivot = top->first;
    const Rational inv = 1 / top->second;
    for (auto& [j, a] : r)
        a *= inv;
    rows_.emplace(pivot, std::move(r));
    return pivot;
}

KernelResult kernel_and_image(const std::vector<SparseVector>& images)
{
    // Augment image_i with e_i placed below every image index, so pivots are
    // taken in the image part whenever possible.
    const int n = static_cast<int>(images.size());
    KernelResult res;
    Echelon combined;
    for (int i = 0; i < n; ++i) {
        SparseVector v;
        for (const auto& [j, a] : images[static_cast<std::size_t>(i)])
            v.emplace(n + j, a);
        v.emplace(i, 1);
        auto r = combined.reduce(std::move(v));
        if (!r.empty() && std::prev(r.end())->first >= n) {
            combined.insert(std::move(r));
            continue;
        }
        // remainder lives in the identity block: a kernel vector whose top index is i
        res.kernel.push_back(std::move(r));
    }
    for (const auto& img : images)
        res.image.insert(img);
    res.rank = res.image.rank();
    return res;
}

}  // namespace cpstrata::linalg
