#include "glorder/projcohom.hpp"

#include "glorder/errors.hpp"

namespace glorder {

long long h(int i, long long ell, int d)
{
    if (i < 0 || i > d)
        throw input_error("cohomological degree out of range");
    if (i == 0)
        return ell >= 0 ? binomial(ell + d, d) : 0;
    if (i == d)
        return ell <= -d - 1 ? binomial(-ell - 1, d) : 0;
    return 0;
}

long long hom_dim(const LElement& x, const LElement& y, const GLType& t)
{
    return h(0, l_sub(y, x, t).ell, t.d);
}

CohomologyVector ext_dims(const LElement& x, const LElement& y, const GLType& t)
{
    long long ell = l_sub(y, x, t).ell;
    CohomologyVector v;
    v.dims.reserve(t.d + 1);
    for (int i = 0; i <= t.d; ++i)
        v.dims.push_back(h(i, ell, t.d));
    return v;
}

} // namespace glorder
