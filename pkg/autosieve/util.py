# autosieve - large sieve and zero density toolkit
# Copyright (C) 2024 autosieve contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Miscellaneous functions and classes for general purpose usage."""

import ast
import operator
import typing as T


def eval_expr(expr: str) -> float:
    """Evaluate simple arithmetic expression such as "10**6" or "2^10".

    :param expr: expression to evaluate
    :return: scalar result
    """
    op_map = {
        ast.Add: operator.add,
        ast.Sub: operator.sub,
        ast.Mult: operator.mul,
        ast.Div: operator.truediv,
        ast.Pow: operator.pow,
        ast.BitXor: operator.pow,
        ast.USub: operator.neg,
        ast.UAdd: operator.pos,
    }

    def _eval(node: ast.expr) -> T.Any:
        if isinstance(node, ast.Constant) and isinstance(
            node.value, (int, float)
        ):
            return node.value
        if isinstance(node, ast.BinOp) and type(node.op) in op_map:
            return op_map[type(node.op)](_eval(node.left), _eval(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in op_map:
            return op_map[type(node.op)](_eval(node.operand))
        raise ValueError(f'invalid expression: "{expr}"')

    try:
        tree = ast.parse(str(expr).strip(), mode="eval")
    except SyntaxError as ex:
        raise ValueError(f'invalid expression: "{expr}"') from ex
    return _eval(tree.body)


def number(text: str) -> float:
    """Parse a command line number, allowing simple expressions.

    :param text: text to parse
    :return: float value
    """
    return float(eval_expr(text))


def integer(text: str) -> int:
    """Parse a command line integer, allowing simple expressions.

    :param text: text to parse
    :return: integer value
    """
    value = eval_expr(text)
    if int(value) != value:
        raise ValueError(f'"{text}" is not an integer')
    return int(value)
