#include "dpva/parser.h"
#include <cctype>

namespace dpva {

VarTable VarTable::standard(int arity)
{
	static const char *names[] = {"u", "v", "w", "x", "y", "z"};
	VarTable vt;
	for (int i = 0; i < arity; ++i)
		vt.comps.push_back(i < 6 ? names[i] : "x" + std::to_string(i + 1));
	return vt;
}

int VarTable::find(const std::string &name) const
{
	for (size_t i = 0; i < comps.size(); ++i)
		if (comps[i] == name)
			return int(i) + 1;
	return 0;
}

const std::string &VarTable::name(int comp) const
{
	if (comp < 1 || comp > int(comps.size()))
		throw ArityError("component index out of range");
	return comps[comp - 1];
}

namespace {

class Parser
{
	const std::string &s_;
	size_t pos_ = 0;
	const VarTable &vt_;

  public:
	Parser(const std::string &s, const VarTable &vt) : s_(s), vt_(vt) {}

	SuperPoly run()
	{
		SuperPoly r = expr();
		skip_ws();
		if (pos_ != s_.size())
			fail("trailing input");
		return r;
	}

  private:
	[[noreturn]] void fail(const std::string &what)
	{
		throw ParseError(what + " at position " + std::to_string(pos_) +
		                 " in \"" + s_ + "\"");
	}

	void skip_ws()
	{
		while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
			++pos_;
	}

	bool eat(char c)
	{
		skip_ws();
		if (pos_ < s_.size() && s_[pos_] == c)
		{
			++pos_;
			return true;
		}
		return false;
	}

	char peek()
	{
		skip_ws();
		return pos_ < s_.size() ? s_[pos_] : '\0';
	}

	SuperPoly expr()
	{
		SuperPoly r = term();
		for (;;)
		{
			if (eat('+'))
				r += term();
			else if (eat('-'))
				r -= term();
			else
				return r;
		}
	}

	SuperPoly term()
	{
		int sign = 1;
		for (;;)
		{
			if (eat('-'))
				sign = -sign;
			else if (eat('+'))
				;
			else
				break;
		}
		SuperPoly r = factor();
		while (eat('*'))
			r = graded_mul(r, factor());
		return sign == 1 ? r : -r;
	}

	SuperPoly factor()
	{
		SuperPoly a = atom();
		if (eat('^'))
		{
			long e = integer();
			if (e < 0)
			{
				// only Laurent powers of a single even monomial make sense
				if (a.parts().size() != 1 ||
				    !a.parts().begin()->first.empty() ||
				    a.parts().begin()->second.terms().size() != 1)
					fail("negative power of a non-monomial");
				auto &[m, c] = *a.parts().begin()->second.terms().begin();
				Monomial inv;
				for (auto &[v, x] : m.vars)
					inv.vars[v] = -x;
				for (auto &[s, x] : m.syms)
					inv.syms[s] = -x;
				DiffPoly p;
				p.add_term(inv, Q(1) / c);
				SuperPoly r(p);
				a = r;
				e = -e;
			}
			SuperPoly r{Q(1)};
			for (long i = 0; i < e; ++i)
				r = graded_mul(r, a);
			return r;
		}
		return a;
	}

	long integer()
	{
		skip_ws();
		size_t start = pos_;
		if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
			++pos_;
		if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
			fail("expected integer");
		while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
			++pos_;
		return std::stol(s_.substr(start, pos_ - start));
	}

	SuperPoly atom()
	{
		skip_ws();
		if (eat('('))
		{
			SuperPoly r = expr();
			if (!eat(')'))
				fail("expected ')'");
			return r;
		}
		char c = peek();
		if (std::isdigit((unsigned char)c))
		{
			mpz_class num(digits());
			if (eat('/'))
			{
				mpz_class den(digits());
				if (den == 0)
					fail("zero denominator");
				Q q(num, den);
				q.canonicalize();
				return SuperPoly{q};
			}
			return SuperPoly{Q(num)};
		}
		bool is_odd = eat('$');
		if (!std::isalpha((unsigned char)peek()) && peek() != '_')
			fail("expected atom");
		std::string id = ident();
		int shift = 0;
		if (eat('['))
		{
			shift = int(integer());
			if (!eat(']'))
				fail("expected ']'");
		}
		int comp = vt_.find(id);
		if (is_odd)
		{
			if (!comp)
				fail("odd partner of undeclared variable " + id);
			return SuperPoly::odd(comp, shift);
		}
		if (comp)
			return SuperPoly{DiffPoly::var(comp, shift)};
		return SuperPoly{DiffPoly::sym(id)};
	}

	std::string digits()
	{
		skip_ws();
		size_t start = pos_;
		while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
			++pos_;
		if (start == pos_)
			fail("expected digits");
		return s_.substr(start, pos_ - start);
	}

	std::string ident()
	{
		size_t start = pos_;
		while (pos_ < s_.size() &&
		       (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
			++pos_;
		return s_.substr(start, pos_ - start);
	}
};

void append_ref(std::string &out, const std::string &name, int shift, int exp)
{
	out += name;
	if (shift != 0)
		out += "[" + std::to_string(shift) + "]";
	if (exp != 1)
		out += "^" + std::to_string(exp);
}

std::string term_body(const OddWord &word, const Monomial &m, const Q &c,
                      const VarTable &vt)
{
	std::string out;
	Q a = abs(c);
	bool unit = a == 1 && !(m.is_one() && word.empty());
	if (!unit)
		out += a.get_str();
	bool first = unit;
	auto sep = [&] {
		if (!first)
			out += "*";
		first = false;
	};
	for (auto &[s, e] : m.syms)
	{
		sep();
		append_ref(out, s, 0, e);
	}
	for (auto &[v, e] : m.vars)
	{
		sep();
		append_ref(out, vt.name(v.comp), v.shift, e);
	}
	for (auto &v : word)
	{
		sep();
		append_ref(out, "$" + vt.name(v.comp), v.shift, 1);
	}
	return out;
}

} // namespace

SuperPoly parse_super(const std::string &text, const VarTable &vt)
{
	return Parser(text, vt).run();
}

DiffPoly parse_poly(const std::string &text, const VarTable &vt)
{
	SuperPoly w = parse_super(text, vt);
	for (auto &[word, f] : w.parts())
		if (!word.empty())
			throw ParseError("odd generator in an even expression");
	return w.even_part();
}

std::string to_string(const SuperPoly &w, const VarTable &vt)
{
	if (w.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (auto &[word, f] : w.parts())
		for (auto &[m, c] : f.terms())
		{
			if (first)
			{
				if (c < 0)
					out += "-";
			}
			else
				out += c < 0 ? " - " : " + ";
			first = false;
			out += term_body(word, m, c, vt);
		}
	return out;
}

std::string to_string(const DiffPoly &f, const VarTable &vt)
{
	return to_string(SuperPoly(f), vt);
}

} // namespace dpva
