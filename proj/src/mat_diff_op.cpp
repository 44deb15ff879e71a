#include "dpva/mat_diff_op.h"
#include <json.hpp>

namespace dpva {

MatDiffOp MatDiffOp::identity(int arity)
{
	MatDiffOp k(arity);
	for (int i = 1; i <= arity; ++i)
		k.add(i, i, 0, DiffPoly(1));
	return k;
}

void MatDiffOp::add(int i, int j, int l, const DiffPoly &c)
{
	if (c.is_zero())
		return;
	auto &m = e_.at(i - 1).at(j - 1);
	auto it = m.find(l);
	if (it == m.end())
		m.emplace(l, c);
	else
	{
		it->second += c;
		if (it->second.is_zero())
			m.erase(it);
	}
}

std::pair<int, int> MatDiffOp::order() const
{
	bool any = false;
	int lo = 0, hi = 0;
	for (auto &row : e_)
		for (auto &m : row)
			for (auto &[l, c] : m)
			{
				if (!any || l < lo)
					lo = l;
				if (!any || l > hi)
					hi = l;
				any = true;
			}
	return {lo, hi};
}

MatDiffOp MatDiffOp::operator-() const
{
	MatDiffOp r(arity_);
	for (int i = 1; i <= arity_; ++i)
		for (int j = 1; j <= arity_; ++j)
			for (auto &[l, c] : entry(i, j))
				r.add(i, j, l, -c);
	return r;
}

MatDiffOp MatDiffOp::operator+(const MatDiffOp &o) const
{
	if (arity_ != o.arity_)
		throw ArityError("operator arity mismatch");
	MatDiffOp r = *this;
	for (int i = 1; i <= arity_; ++i)
		for (int j = 1; j <= arity_; ++j)
			for (auto &[l, c] : o.entry(i, j))
				r.add(i, j, l, c);
	return r;
}

MatDiffOp MatDiffOp::operator-(const MatDiffOp &o) const
{
	return *this + (-o);
}

MatDiffOp MatDiffOp::operator*(const Q &c) const
{
	MatDiffOp r(arity_);
	for (int i = 1; i <= arity_; ++i)
		for (int j = 1; j <= arity_; ++j)
			for (auto &[l, f] : entry(i, j))
				r.add(i, j, l, f * c);
	return r;
}

std::vector<DiffPoly> MatDiffOp::apply(const std::vector<DiffPoly> &q) const
{
	if (int(q.size()) != arity_)
		throw ArityError("tuple length does not match operator arity");
	std::vector<DiffPoly> r(arity_);
	for (int i = 1; i <= arity_; ++i)
		for (int j = 1; j <= arity_; ++j)
			for (auto &[l, c] : entry(i, j))
				r[i - 1] += c * shift_apply(l, q[j - 1]);
	return r;
}

MatDiffOp op_compose(const MatDiffOp &K, const MatDiffOp &L)
{
	if (K.arity() != L.arity())
		throw ArityError("operator arity mismatch");
	int n = K.arity();
	MatDiffOp r(n);
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (int s = 1; s <= n; ++s)
				for (auto &[l, a] : K.entry(i, s))
					for (auto &[m, b] : L.entry(s, j))
						r.add(i, j, l + m, a * shift_apply(l, b));
	return r;
}

MatDiffOp op_adjoint(const MatDiffOp &K)
{
	int n = K.arity();
	MatDiffOp r(n);
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (auto &[l, c] : K.entry(j, i))
				r.add(i, j, -l, shift_apply(-l, c));
	return r;
}

SkewReport check_skewadjoint(const MatDiffOp &K)
{
	MatDiffOp d = op_adjoint(K) + K;
	int n = K.arity();
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (auto &[l, c] : d.entry(i, j))
				if (!c.is_zero())
					return {false, i, j, l};
	return {true};
}

LocalPolyVector op_to_bivector(const MatDiffOp &K)
{
	if (!check_skewadjoint(K).skew)
		throw NotSkewError("bivector of a non-skewadjoint operator");
	SuperPoly p;
	int n = K.arity();
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (auto &[l, c] : K.entry(i, j))
				p += graded_mul(
				    graded_mul(SuperPoly::odd(i, 0), SuperPoly(c)),
				    SuperPoly::odd(j, l)) *
				    Q(1, 2);
	return canonicalize(p);
}

MatDiffOp bivector_to_op(const LocalPolyVector &P, int arity)
{
	if (!P.is_zero() && !P.homogeneous(2))
		throw DegreeError("not a bivector");
	MatDiffOp k(arity);
	for (int i = 1; i <= arity; ++i)
	{
		SuperPoly row = variational_odd(i, P.density());
		for (auto &[word, c] : row.parts())
		{
			if (word.size() != 1)
				throw DegreeError("bivector recovery: unexpected degree");
			k.add(i, word[0].comp, word[0].shift, c);
		}
	}
	return k;
}

MatDiffOp frechet(const std::vector<DiffPoly> &phi, int arity)
{
	if (int(phi.size()) != arity)
		throw ArityError("frechet: tuple length must equal arity");
	MatDiffOp d(arity);
	for (int i = 1; i <= arity; ++i)
		for (auto &v : phi[i - 1].support())
			d.add(i, v.comp, v.shift, partial_u(v.comp, v.shift, phi[i - 1]));
	return d;
}

MatDiffOp frechet_adjoint(const std::vector<DiffPoly> &phi, int arity)
{
	return op_adjoint(frechet(phi, arity));
}

MatDiffOp point_transform(const MatDiffOp &K, const std::vector<DiffPoly> &phi)
{
	if (int(phi.size()) != K.arity())
		throw ArityError("point transform: tuple length must equal arity");
	for (auto &f : phi)
		for (auto &v : f.support())
			if (v.shift != 0)
				throw NotPointTransform("image depends on a shifted variable");
	MatDiffOp d = frechet(phi, K.arity());
	return op_compose(op_compose(d, K), op_adjoint(d));
}

MatDiffOp substitute_syms(const MatDiffOp &K, const std::map<std::string, Q> &vals)
{
	int n = K.arity();
	MatDiffOp r(n);
	for (int i = 1; i <= n; ++i)
		for (int j = 1; j <= n; ++j)
			for (auto &[l, c] : K.entry(i, j))
				r.add(i, j, l, substitute_syms(c, vals));
	return r;
}

MatDiffOp op_from_json(const std::string &text, VarTable &vt_out)
{
	nlohmann::json j = nlohmann::json::parse(text);
	VarTable vt;
	for (auto &c : j.at("components"))
		vt.comps.push_back(c.get<std::string>());
	int n = int(vt.comps.size());
	MatDiffOp k(n);
	if (j.contains("entries"))
		for (auto &[key, val] : j.at("entries").items())
		{
			auto comma = key.find(',');
			if (comma == std::string::npos)
				throw ParseError("entry key must be \"i,j\": " + key);
			int i = std::stoi(key.substr(0, comma));
			int jj = std::stoi(key.substr(comma + 1));
			if (i < 1 || i > n || jj < 1 || jj > n)
				throw ArityError("entry index out of range: " + key);
			for (auto &item : val)
				k.add(i, jj, item.at("shift").get<int>(),
				      parse_poly(item.at("coeff").get<std::string>(), vt));
		}
	vt_out = vt;
	return k;
}

std::string op_to_json(const MatDiffOp &K, const VarTable &vt)
{
	nlohmann::json j;
	j["components"] = vt.comps;
	std::set<std::string> syms;
	for (int i = 1; i <= K.arity(); ++i)
		for (int jj = 1; jj <= K.arity(); ++jj)
			for (auto &[l, c] : K.entry(i, jj))
				for (auto &s : c.symbols())
					syms.insert(s);
	j["symbols"] = syms;
	nlohmann::json entries = nlohmann::json::object();
	for (int i = 1; i <= K.arity(); ++i)
		for (int jj = 1; jj <= K.arity(); ++jj)
		{
			if (K.entry(i, jj).empty())
				continue;
			nlohmann::json lst = nlohmann::json::array();
			for (auto &[l, c] : K.entry(i, jj))
				lst.push_back({{"shift", l}, {"coeff", to_string(c, vt)}});
			entries[std::to_string(i) + "," + std::to_string(jj)] = lst;
		}
	j["entries"] = entries;
	return j.dump(2);
}

} // namespace dpva
