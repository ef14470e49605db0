#pragma once

// Tokenizer shared by the polynomial and Lie-expression parsers.

#include "metlie/errors.hpp"
#include "metlie/integer.hpp"

#include <string>
#include <string_view>

namespace metlie::detail {

enum class Tok
{
	integer,
	generator,
	plus,
	minus,
	star,
	caret,
	lbracket,
	rbracket,
	comma,
	lparen,
	rparen,
	end,
};

struct Token
{
	Tok kind;
	Integer value;     // integer literal
	int index = 0;     // generator index (1-based)
	int line = 1;
	int column = 1;
};

class Lexer
{
  public:
	explicit Lexer(std::string_view text) : text_(text) { advance(); }

	Token const &peek() const { return current_; }
	Token take()
	{
		Token t = current_;
		advance();
		return t;
	}

	[[noreturn]] void fail(std::string const &message, Token const &at) const
	{
		throw ParseError(message, at.line, at.column);
	}

	Token expect(Tok kind, char const *what)
	{
		if (current_.kind != kind)
			fail(std::string("expected ") + what, current_);
		return take();
	}

  private:
	void advance();

	std::string_view text_;
	std::size_t pos_ = 0;
	int line_ = 1;
	int column_ = 1;
	Token current_{Tok::end, 0};
};

inline void Lexer::advance()
{
	auto bump = [&] {
		if (text_[pos_] == '\n')
		{
			++line_;
			column_ = 1;
		}
		else
			++column_;
		++pos_;
	};
	while (pos_ < text_.size() &&
	       (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
	        text_[pos_] == '\r'))
		bump();

	Token t{Tok::end, 0};
	t.line = line_;
	t.column = column_;
	if (pos_ >= text_.size())
	{
		current_ = t;
		return;
	}

	char c = text_[pos_];
	auto is_digit = [](char ch) { return ch >= '0' && ch <= '9'; };
	if (is_digit(c))
	{
		std::size_t start = pos_;
		while (pos_ < text_.size() && is_digit(text_[pos_]))
			bump();
		t.kind = Tok::integer;
		t.value = Integer(std::string(text_.substr(start, pos_ - start)));
		current_ = t;
		return;
	}
	if (c == 'x')
	{
		bump();
		std::size_t start = pos_;
		while (pos_ < text_.size() && is_digit(text_[pos_]))
			bump();
		if (start == pos_)
			throw ParseError("generator name must be 'x' followed by digits", t.line,
			                 t.column);
		auto digits = text_.substr(start, pos_ - start);
		if (digits.size() > 6)
			throw ParseError("generator index too large", t.line, t.column);
		t.kind = Tok::generator;
		t.index = std::stoi(std::string(digits));
		current_ = t;
		return;
	}

	switch (c)
	{
	case '+': t.kind = Tok::plus; break;
	case '-': t.kind = Tok::minus; break;
	case '*': t.kind = Tok::star; break;
	case '^': t.kind = Tok::caret; break;
	case '[': t.kind = Tok::lbracket; break;
	case ']': t.kind = Tok::rbracket; break;
	case ',': t.kind = Tok::comma; break;
	case '(': t.kind = Tok::lparen; break;
	case ')': t.kind = Tok::rparen; break;
	default:
		throw ParseError(std::string("unexpected character '") + c + "'", t.line,
		                 t.column);
	}
	bump();
	current_ = t;
}

} // namespace metlie::detail
