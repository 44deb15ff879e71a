#include "dpva/super_poly.h"

namespace dpva {

namespace {

// merge two sorted words, counting the transpositions; returns sign 0 on a
// repeated generator
int merge_words(const OddWord &a, const OddWord &b, OddWord &out)
{
	out.clear();
	out.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	int inversions = 0;
	while (i < a.size() && j < b.size())
	{
		if (a[i] == b[j])
			return 0;
		if (a[i] < b[j])
			out.push_back(a[i++]);
		else
		{
			// b[j] jumps over the remaining a-factors
			inversions += int(a.size() - i);
			out.push_back(b[j++]);
		}
	}
	while (i < a.size())
		out.push_back(a[i++]);
	while (j < b.size())
		out.push_back(b[j++]);
	return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

void SuperPoly::add_part(const OddWord &w, const DiffPoly &f)
{
	if (f.is_zero())
		return;
	auto it = parts_.find(w);
	if (it == parts_.end())
		parts_.emplace(w, f);
	else
	{
		it->second += f;
		if (it->second.is_zero())
			parts_.erase(it);
	}
}

SuperPoly SuperPoly::operator-() const
{
	SuperPoly r;
	for (auto &[w, f] : parts_)
		r.parts_.emplace(w, -f);
	return r;
}

SuperPoly SuperPoly::operator+(const SuperPoly &o) const
{
	SuperPoly r = *this;
	for (auto &[w, f] : o.parts_)
		r.add_part(w, f);
	return r;
}

SuperPoly SuperPoly::operator-(const SuperPoly &o) const
{
	SuperPoly r = *this;
	for (auto &[w, f] : o.parts_)
		r.add_part(w, -f);
	return r;
}

SuperPoly SuperPoly::operator*(const Q &c) const
{
	SuperPoly r;
	if (c == 0)
		return r;
	for (auto &[w, f] : parts_)
		r.parts_.emplace(w, f * c);
	return r;
}

bool SuperPoly::homogeneous(int deg) const
{
	for (auto &[w, f] : parts_)
		if (int(w.size()) != deg)
			return false;
	return true;
}

int SuperPoly::degree() const
{
	if (parts_.empty())
		return -1;
	int d = int(parts_.begin()->first.size());
	if (!homogeneous(d))
		throw DegreeError("non-homogeneous super polynomial");
	return d;
}

DiffPoly SuperPoly::even_part() const
{
	auto it = parts_.find(OddWord{});
	return it == parts_.end() ? DiffPoly{} : it->second;
}

SuperPoly graded_mul(const SuperPoly &a, const SuperPoly &b)
{
	SuperPoly r;
	OddWord merged;
	for (auto &[wa, fa] : a.parts())
		for (auto &[wb, fb] : b.parts())
		{
			int sign = merge_words(wa, wb, merged);
			if (sign == 0)
				continue;
			r.add_part(merged, fa * fb * Q(sign));
		}
	return r;
}

SuperPoly shift_apply(int k, const SuperPoly &w)
{
	SuperPoly r;
	for (auto &[word, f] : w.parts())
	{
		OddWord sw;
		sw.reserve(word.size());
		for (auto &v : word)
			sw.push_back({v.comp, v.shift + k});
		r.add_part(sw, shift_apply(k, f));
	}
	return r;
}

SuperPoly partial_u(int comp, int shift, const SuperPoly &w)
{
	SuperPoly r;
	for (auto &[word, f] : w.parts())
		r.add_part(word, partial_u(comp, shift, f));
	return r;
}

SuperPoly variational_u(int comp, const SuperPoly &w)
{
	SuperPoly r;
	std::set<int> shifts;
	for (auto &[word, f] : w.parts())
		for (auto &v : f.support())
			if (v.comp == comp)
				shifts.insert(v.shift);
	for (int n : shifts)
		r += shift_apply(-n, partial_u(comp, n, w));
	return r;
}

SuperPoly partial_odd(int comp, int shift, const SuperPoly &w)
{
	SuperPoly r;
	VarRef ref{comp, shift};
	for (auto &[word, f] : w.parts())
	{
		for (size_t k = 0; k < word.size(); ++k)
			if (word[k] == ref)
			{
				OddWord rest = word;
				rest.erase(rest.begin() + k);
				r.add_part(rest, k % 2 == 0 ? f : -f);
				break;
			}
	}
	return r;
}

SuperPoly variational_odd(int comp, const SuperPoly &w)
{
	SuperPoly r;
	std::set<int> shifts;
	for (auto &[word, f] : w.parts())
		for (auto &v : word)
			if (v.comp == comp)
				shifts.insert(v.shift);
	for (int n : shifts)
		r += shift_apply(-n, partial_odd(comp, n, w));
	return r;
}

SuperPoly integrate_u(int comp, int shift, const SuperPoly &w)
{
	SuperPoly r;
	for (auto &[word, f] : w.parts())
		r.add_part(word, integrate_u(comp, shift, f));
	return r;
}

SuperPoly substitute_syms(const SuperPoly &w, const std::map<std::string, Q> &vals)
{
	SuperPoly r;
	for (auto &[word, f] : w.parts())
		r.add_part(word, substitute_syms(f, vals));
	return r;
}

} // namespace dpva
