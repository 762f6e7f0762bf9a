"""Prefix expression trees for catalog coefficients.

Formulas are written as infix strings (``^`` is a power) and stored as nested
lists.  Node kinds:

    ["const", "p/q"]          rational constant
    ["param", name]           variable lookup
    ["qpow", e]               q ** e, e must evaluate to an integer
    ["pow", b, e]             b ** e, e must evaluate to an integer
    ["add", a, b, ...]        sum
    ["mul", a, b, ...]        product
    ["div", a, b]             quotient
    ["poch", a, k]            rising factorial (a)_k
    ["pochq", a, k]           q-shifted factorial (a; q)_k
    ["ref", name]             another formula of the same relation
    ["ref", name, e]          that formula with x replaced by e
"""

from __future__ import annotations

import ast
from typing import Callable, Mapping

from ..scalar import fmt, pochhammer, q_pochhammer, rational

Tree = list


class ExprError(ValueError):
    pass


def parse(src: str) -> Tree:
    try:
        node = ast.parse(src.replace("^", "**"), mode="eval").body
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {src!r}: {exc}") from None
    return _convert(node)


def _flatten(kind: str, left: Tree, right: Tree) -> Tree:
    items = []
    for part in (left, right):
        if part[0] == kind:
            items.extend(part[1:])
        else:
            items.append(part)
    return [kind, *items]


def _neg(tree: Tree) -> Tree:
    if tree[0] == "const":
        return ["const", fmt(-rational(tree[1]))]
    return _flatten("mul", ["const", "-1"], tree)


def _convert(node) -> Tree:
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ExprError(f"only integer literals are allowed, got {node.value!r}")
        return ["const", str(node.value)]
    if isinstance(node, ast.Name):
        return ["param", node.id]
    if isinstance(node, ast.UnaryOp):
        inner = _convert(node.operand)
        if isinstance(node.op, ast.USub):
            return _neg(inner)
        if isinstance(node.op, ast.UAdd):
            return inner
    if isinstance(node, ast.BinOp):
        left, right = _convert(node.left), _convert(node.right)
        if isinstance(node.op, ast.Add):
            return _flatten("add", left, right)
        if isinstance(node.op, ast.Sub):
            return _flatten("add", left, _neg(right))
        if isinstance(node.op, ast.Mult):
            return _flatten("mul", left, right)
        if isinstance(node.op, ast.Div):
            return ["div", left, right]
        if isinstance(node.op, ast.Pow):
            if left == ["param", "q"]:
                return ["qpow", right]
            return ["pow", left, right]
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        name = node.func.id
        if name in ("poch", "pochq") and len(node.args) == 2:
            return [name, _convert(node.args[0]), _convert(node.args[1])]
        if name == "ref" and 1 <= len(node.args) <= 2 and isinstance(node.args[0], ast.Constant):
            out = ["ref", str(node.args[0].value)]
            if len(node.args) == 2:
                out.append(_convert(node.args[1]))
            return out
    raise ExprError(f"unsupported syntax: {ast.dump(node)}")


def _as_int(value) -> int:
    value = rational(value)
    if value.denominator != 1:
        raise ExprError(f"exponent {fmt(value)} is not an integer")
    return int(value.numerator)


Env = Mapping[str, object]
Resolver = Callable[[str, Env], object]


def compile_tree(tree: Tree, resolve: Resolver | None = None) -> Callable[[Env], object]:
    """Turn a tree into a function of an environment mapping names to values."""
    kind = tree[0]
    if kind == "const":
        value = rational(tree[1])
        return lambda env: value
    if kind == "param":
        name = tree[1]
        return lambda env: env[name]
    if kind == "qpow":
        e = compile_tree(tree[1], resolve)
        return lambda env: env["q"] ** _as_int(e(env))
    if kind == "pow":
        b, e = compile_tree(tree[1], resolve), compile_tree(tree[2], resolve)
        return lambda env: b(env) ** _as_int(e(env))
    if kind in ("add", "mul"):
        parts = [compile_tree(t, resolve) for t in tree[1:]]
        if kind == "add":
            def add(env):
                total = parts[0](env)
                for f in parts[1:]:
                    total = total + f(env)
                return total
            return add

        def mul(env):
            total = parts[0](env)
            for f in parts[1:]:
                if total == 0:
                    return total
                total = total * f(env)
            return total
        return mul
    if kind == "div":
        a, b = compile_tree(tree[1], resolve), compile_tree(tree[2], resolve)
        return lambda env: rational(a(env)) / b(env)
    if kind == "poch":
        a, k = compile_tree(tree[1], resolve), compile_tree(tree[2], resolve)
        return lambda env: pochhammer(a(env), _as_int(k(env)))
    if kind == "pochq":
        a, k = compile_tree(tree[1], resolve), compile_tree(tree[2], resolve)
        return lambda env: q_pochhammer(a(env), env["q"], _as_int(k(env)))
    if kind == "ref":
        if resolve is None:
            raise ExprError("reference outside a relation")
        name = tree[1]
        if len(tree) == 2:
            return lambda env: resolve(name, env)
        at = compile_tree(tree[2], resolve)

        def ref_at(env):
            inner = dict(env)
            inner["x"] = at(env)
            return resolve(name, inner)
        return ref_at
    raise ExprError(f"unknown node kind {kind!r}")


def evaluate(tree: Tree, env: Env, resolve: Resolver | None = None):
    return compile_tree(tree, resolve)(env)


def names(tree: Tree) -> set:
    """Variables referenced by a tree."""
    if tree[0] == "param":
        return {tree[1]}
    if tree[0] in ("const", "ref"):
        return set() if tree[0] == "const" or len(tree) == 2 else names(tree[2])
    out = {"q"} if tree[0] in ("qpow", "pochq") else set()
    for child in tree[1:]:
        out |= names(child)
    return out
