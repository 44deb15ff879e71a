#include "dpva/pva.h"

namespace dpva {

void LambdaSeries::add(int p, const DiffPoly &f)
{
	if (f.is_zero())
		return;
	auto it = c_.find(p);
	if (it == c_.end())
		c_.emplace(p, f);
	else
	{
		it->second += f;
		if (it->second.is_zero())
			c_.erase(it);
	}
}

LambdaSeries LambdaSeries::operator+(const LambdaSeries &o) const
{
	LambdaSeries r = *this;
	for (auto &[p, f] : o.c_)
		r.add(p, f);
	return r;
}

LambdaSeries LambdaSeries::operator-(const LambdaSeries &o) const
{
	LambdaSeries r = *this;
	for (auto &[p, f] : o.c_)
		r.add(p, -f);
	return r;
}

LambdaSeries LambdaSeries::mul_left(const DiffPoly &f) const
{
	LambdaSeries r;
	for (auto &[p, c] : c_)
		r.add(p, f * c);
	return r;
}

LambdaSeries LambdaSeries::lambda_shift(int k) const
{
	LambdaSeries r;
	for (auto &[p, c] : c_)
		r.add(p + k, shift_apply(k, c));
	return r;
}

void BiSeries::add(int p, int q, const DiffPoly &f)
{
	if (f.is_zero())
		return;
	auto key = std::make_pair(p, q);
	auto it = c_.find(key);
	if (it == c_.end())
		c_.emplace(key, f);
	else
	{
		it->second += f;
		if (it->second.is_zero())
			c_.erase(it);
	}
}

LambdaSeries bracket_generators(const MatDiffOp &K, int i, int j)
{
	LambdaSeries r;
	for (auto &[l, c] : K.entry(j, i))
		r.add(l, c);
	return r;
}

LambdaSeries bracket_master(const MatDiffOp &K, const DiffPoly &f,
                            const DiffPoly &g)
{
	LambdaSeries r;
	int n = K.arity();
	for (auto &vf : f.support())
	{
		if (vf.comp > n)
			throw ArityError("element outside the operator's components");
		// (lambda S)^{-n} d f / d u^i_n
		LambdaSeries base =
		    LambdaSeries(partial_u(vf.comp, vf.shift, f)).lambda_shift(-vf.shift);
		for (auto &vg : g.support())
		{
			if (vg.comp > n)
				throw ArityError("element outside the operator's components");
			// K^{ji}(lambda S) applied to base
			LambdaSeries mid;
			for (auto &[l, c] : K.entry(vg.comp, vf.comp))
				mid += base.lambda_shift(l).mul_left(c);
			r += mid.lambda_shift(vg.shift)
			         .mul_left(partial_u(vg.comp, vg.shift, g));
		}
	}
	return r;
}

bool check_skewsymmetry(const MatDiffOp &K)
{
	// on generators: K^{ij}(lambda) = -sum_l lambda^{-l} S^{-l}(K^{ji}_l)
	int n = K.arity();
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
		{
			LambdaSeries lhs = bracket_generators(K, j, i);
			LambdaSeries rhs;
			for (auto &[l, c] : K.entry(j, i))
				rhs.add(-l, -shift_apply(-l, c));
			if (!(lhs == rhs))
				return false;
		}
	return true;
}

BiSeries jacobi_residual(const MatDiffOp &H, int i, int j, int k)
{
	BiSeries r;
	int n = H.arity();
	// d H^{kj}(mu) / d u^s_m (lambda S)^m H^{si}(lambda)
	for (auto &[l, c] : H.entry(k, j))
		for (auto &v : c.support())
		{
			if (v.comp > n)
				continue; // spectator variable, no generator row
			DiffPoly d = partial_u(v.comp, v.shift, c);
			for (auto &[p, a] : H.entry(v.comp, i))
				r.add(v.shift + p, l, d * shift_apply(v.shift, a));
		}
	// - d H^{ki}(lambda) / d u^s_m (mu S)^m H^{sj}(mu)
	for (auto &[l, c] : H.entry(k, i))
		for (auto &v : c.support())
		{
			if (v.comp > n)
				continue;
			DiffPoly d = partial_u(v.comp, v.shift, c);
			for (auto &[p, a] : H.entry(v.comp, j))
				r.add(l, v.shift + p, -(d * shift_apply(v.shift, a)));
		}
	// - H^{ks}(lambda mu S)(lambda mu S)^{-m} d H^{ji}(lambda) / d u^s_m
	for (auto &[l, c] : H.entry(j, i))
		for (auto &v : c.support())
		{
			if (v.comp > n)
				continue;
			DiffPoly d = partial_u(v.comp, v.shift, c);
			for (auto &[p, a] : H.entry(k, v.comp))
				r.add(l + p - v.shift, p - v.shift,
				      -(a * shift_apply(p - v.shift, d)));
		}
	return r;
}

JacobiVerdict check_jacobi(const MatDiffOp &K)
{
	if (!check_skewsymmetry(K))
		throw NotSkewError("jacobi check requires a skewsymmetric bracket");
	JacobiVerdict v;
	int n = K.arity();
	bool plain_fail = false;
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (int k = 1; k <= n; ++k)
			{
				BiSeries r = jacobi_residual(K, i, j, k);
				if (r.is_zero())
					continue;
				for (auto &[pw, c] : r.coeffs())
				{
					v.residuals.push_back(c);
					if (c.symbols().empty())
						plain_fail = true;
				}
				if (v.kind == JacobiVerdict::Pass)
				{
					v.i = i;
					v.j = j;
					v.k = k;
					v.residual = r;
					v.kind = JacobiVerdict::Residuals;
				}
			}
	if (v.kind != JacobiVerdict::Pass && plain_fail)
		v.kind = JacobiVerdict::Fail;
	return v;
}

MatDiffOp assemble_order11(const std::vector<std::vector<DiffPoly>> &A,
                           const std::vector<std::vector<DiffPoly>> &B)
{
	int n = int(A.size());
	MatDiffOp k(n);
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
		{
			k.add(i, j, 1, A[i - 1][j - 1]);
			k.add(i, j, 0, B[i - 1][j - 1]);
			k.add(i, j, -1, -shift_apply(-1, A[j - 1][i - 1]));
		}
	return k;
}

void split_order11(const MatDiffOp &K, std::vector<std::vector<DiffPoly>> &A,
                   std::vector<std::vector<DiffPoly>> &B)
{
	int n = K.arity();
	A.assign(n, std::vector<DiffPoly>(n));
	B.assign(n, std::vector<DiffPoly>(n));
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
		{
			A[i - 1][j - 1] = K.coeff(i, j, 1);
			B[i - 1][j - 1] = K.coeff(i, j, 0);
		}
}

namespace {

void require_profile(const std::vector<std::vector<DiffPoly>> &A,
                     const std::vector<std::vector<DiffPoly>> &B)
{
	for (auto &row : A)
		for (auto &c : row)
			for (auto &v : c.support())
				if (v.shift != 0 && v.shift != 1)
					throw DependencyError(
					    "leading coefficient depends on a far shift");
	for (auto &row : B)
		for (auto &c : row)
			for (auto &v : c.support())
				if (v.shift != 0)
					throw DependencyError(
					    "constant coefficient depends on a shifted variable");
}

} // namespace

Order11Verdict check_order11_conditions(
    const std::vector<std::vector<DiffPoly>> &A,
    const std::vector<std::vector<DiffPoly>> &B)
{
	require_profile(A, B);
	int n = int(A.size());
	auto a = [&](int i, int j) { return A[i - 1][j - 1]; };
	auto b = [&](int i, int j) { return B[i - 1][j - 1]; };
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			if (!(b(i, j) + b(j, i)).is_zero())
				throw DependencyError("constant coefficient not skewsymmetric");
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (int k = 1; k <= n; ++k)
			{
				DiffPoly c1, c2, c3, c4;
				for (int s = 1; s <= n; ++s)
				{
					c1 += partial_u(s, 1, a(k, j)) * shift_apply(1, a(s, i)) -
					      a(k, s) * shift_apply(1, partial_u(s, 0, a(j, i)));
					c2 += partial_u(s, 0, a(k, j)) * a(s, i) +
					      partial_u(s, 1, a(k, j)) * shift_apply(1, b(s, i)) -
					      partial_u(s, 0, a(k, i)) * a(s, j) -
					      partial_u(s, 1, a(k, i)) * shift_apply(1, b(s, j)) -
					      a(k, s) * shift_apply(1, partial_u(s, 0, b(j, i)));
					c3 += partial_u(s, 1, a(k, j)) * a(i, s) +
					      partial_u(s, 0, a(k, j)) * b(i, s) -
					      partial_u(s, 1, a(i, j)) * a(k, s) -
					      partial_u(s, 0, a(i, j)) * b(k, s) +
					      partial_u(s, 0, b(k, i)) * a(s, j);
					c4 += partial_u(s, 0, b(k, j)) * b(s, i) +
					      partial_u(s, 0, b(i, k)) * b(s, j) +
					      partial_u(s, 0, b(j, i)) * b(s, k);
				}
				if (!c1.is_zero())
					return {false, 1, i, j, k};
				if (!c2.is_zero())
					return {false, 2, i, j, k};
				if (!c3.is_zero())
					return {false, 3, i, j, k};
				if (!c4.is_zero())
					return {false, 4, i, j, k};
			}
	return {};
}

bool check_ultralocal(const std::vector<std::vector<DiffPoly>> &B)
{
	int n = int(B.size());
	auto b = [&](int i, int j) { return B[i - 1][j - 1]; };
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (int k = 1; k <= n; ++k)
			{
				// pointwise Jacobi
				DiffPoly c4;
				std::set<int> shifts;
				for (int s = 1; s <= n; ++s)
				{
					c4 += partial_u(s, 0, b(k, j)) * b(s, i) +
					      partial_u(s, 0, b(i, k)) * b(s, j) +
					      partial_u(s, 0, b(j, i)) * b(s, k);
					for (auto &v : b(i, j).support())
						shifts.insert(v.shift);
				}
				if (!c4.is_zero())
					return false;
				// shifted cross terms must vanish
				for (int m : shifts)
				{
					if (m == 0)
						continue;
					DiffPoly t;
					for (int s = 1; s <= n; ++s)
						t += partial_u(s, m, b(i, j)) * shift_apply(m, b(s, k));
					if (!t.is_zero())
						return false;
				}
			}
	return true;
}

std::vector<DependencyViolation> check_dependency_profile(const MatDiffOp &K)
{
	std::vector<DependencyViolation> out;
	int n = K.arity();
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
		{
			for (auto &v : K.coeff(i, j, 1).support())
				if (v.shift != 0 && v.shift != 1)
					out.push_back({i, j, v});
			for (auto &v : K.coeff(i, j, 0).support())
				if (v.shift != 0)
					out.push_back({i, j, v});
		}
	return out;
}

} // namespace dpva
