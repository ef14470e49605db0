#pragma once

#include "metlie/errors.hpp"
#include "metlie/integer.hpp"

#include <concepts>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace metlie {

class LieExpr;

namespace expr {

struct Zero
{};

struct Generator
{
	int index; // 1-based
};

struct Bracket
{
	std::shared_ptr<LieExpr const> left;
	std::shared_ptr<LieExpr const> right;
};

struct Sum
{
	std::vector<std::shared_ptr<LieExpr const>> terms;
};

struct ScalarMul
{
	Integer coefficient;
	std::shared_ptr<LieExpr const> operand;
};

} // namespace expr

/// Immutable AST of a Lie polynomial in x1..xn. Subtrees are shared.
class LieExpr
{
  public:
	using Node = std::variant<expr::Zero, expr::Generator, expr::Bracket, expr::Sum,
	                          expr::ScalarMul>;
	using Ptr = std::shared_ptr<LieExpr const>;

	static Ptr zero();
	static Ptr generator(int index);
	static Ptr bracket(Ptr left, Ptr right);
	/// Requires a non-empty term list.
	static Ptr sum(std::vector<Ptr> terms);
	static Ptr scalar(Integer c, Ptr operand);

	Node const &node() const { return node_; }

	/// Largest generator index occurring in the tree (0 if none).
	int max_generator() const;

	explicit LieExpr(Node node) : node_(std::move(node)) {}

  private:
	Node node_;
};

using LieExprPtr = LieExpr::Ptr;

/// Parses the bracket syntax:
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := integer '*' factor | factor | '0'
///   factor := 'x' digits | '[' expr ',' expr ']' | '(' expr ')'
///
/// Generator indices must lie in 1..n.
LieExprPtr parse_lie(std::string_view text, int n);

std::string format(LieExpr const &e);

// ---------------------------------------------------------------------------
// Evaluation in an arbitrary Lie ring over ℤ.

template <class R>
concept LieRing = requires(R const &r, typename R::Element const &a, Integer const &c) {
	{ r.zero() } -> std::convertible_to<typename R::Element>;
	{ r.add(a, a) } -> std::convertible_to<typename R::Element>;
	{ r.neg(a) } -> std::convertible_to<typename R::Element>;
	{ r.scale(c, a) } -> std::convertible_to<typename R::Element>;
	{ r.bracket(a, a) } -> std::convertible_to<typename R::Element>;
};

/// Substitutes images[i-1] for x_i and evaluates e in the target ring.
template <LieRing R>
typename R::Element eval_in_ring(LieExpr const &e,
                                 std::span<typename R::Element const> images,
                                 R const &ring)
{
	using E = typename R::Element;
	struct Visitor
	{
		std::span<E const> images;
		R const &ring;

		E operator()(expr::Zero const &) const { return ring.zero(); }
		E operator()(expr::Generator const &g) const
		{
			if (g.index < 1 || g.index > static_cast<int>(images.size()))
				throw DomainError("generator index outside the substitution");
			return images[g.index - 1];
		}
		E operator()(expr::Bracket const &b) const
		{
			return ring.bracket(std::visit(*this, b.left->node()),
			                    std::visit(*this, b.right->node()));
		}
		E operator()(expr::Sum const &s) const
		{
			E acc = ring.zero();
			for (auto const &t : s.terms)
				acc = ring.add(acc, std::visit(*this, t->node()));
			return acc;
		}
		E operator()(expr::ScalarMul const &m) const
		{
			return ring.scale(m.coefficient, std::visit(*this, m.operand->node()));
		}
	};
	return std::visit(Visitor{images, ring}, e.node());
}

/// The abelian Lie ring ℤ_m (zero bracket); used for abelianization checks.
struct ZmAbelian
{
	using Element = std::uint64_t;
	std::uint64_t m;

	Element zero() const { return 0; }
	Element add(Element a, Element b) const { return (a + b) % m; }
	Element neg(Element a) const { return (m - a % m) % m; }
	Element scale(Integer const &c, Element a) const
	{
		return static_cast<Element>((unsigned __int128)mod_u64(c, m) * a % m);
	}
	Element bracket(Element, Element) const { return 0; }
};

} // namespace metlie
