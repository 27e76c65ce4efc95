# 多项式表达式的递归下降解析器
#
# expr     → ( "-" )? term ( ( "+" | "-" ) term )* ;
# term     → factor ( "*" factor )* ;
# factor   → base ( "^" NAT )? ;
# base     → rational | IDENT | "(" expr ")" ;
# rational → INT ( "/" NAT )? ;
#
# 语法树用 dict 表示，例如 {"op": "PLUS", "left": ..., "right": ...}

import re
from fractions import Fraction
from typing import Dict, List, NamedTuple

from errors import PolynomialSyntaxError, UnknownVariable
from polyring import Polynomial, VariableSet


class Token(NamedTuple):
    type: str
    value: str
    position: int


_TOKEN_SPEC = [
    ('INT', r'\d+'),
    ('ID', r'[A-Za-z][A-Za-z0-9_]*'),
    ('PLUS', r'\+'),
    ('MINUS', r'-'),
    ('TIMES', r'\*'),
    ('DIVIDE', r'/'),
    ('POWER', r'\^'),
    ('LPAREN', r'\('),
    ('RPAREN', r'\)'),
    ('SKIP', r'\s+'),
    ('MISMATCH', r'.'),
]
_TOKEN_RE = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in _TOKEN_SPEC))

_DESCRIBE = {
    'INT': 'integer', 'ID': 'identifier', 'PLUS': "'+'", 'MINUS': "'-'", 'TIMES': "'*'",
    'DIVIDE': "'/'", 'POWER': "'^'", 'LPAREN': "'('", 'RPAREN': "')'", 'EOF': 'end of input',
}


def tokenize(text: str) -> List[Token]:
    tokens = []
    for mo in _TOKEN_RE.finditer(text):
        kind = mo.lastgroup
        if kind == 'SKIP':
            continue
        if kind == 'MISMATCH':
            raise PolynomialSyntaxError(text, mo.start(), "a number, identifier, operator or parenthesis")
        tokens.append(Token(kind, mo.group(), mo.start()))
    tokens.append(Token('EOF', '', len(text)))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.current_token = 0

    # advance to the next token
    def advance(self):
        self.current_token += 1

    def next(self) -> Token:
        return self.tokens[min(self.current_token, len(self.tokens) - 1)]

    def check(self, types) -> bool:
        return self.next().type in types

    def match(self, types) -> bool:
        if self.check(types):
            self.advance()
            return True
        return False

    def expect(self, types, expected: str) -> Token:
        token = self.next()
        if token.type not in types:
            raise PolynomialSyntaxError(self.text, token.position, expected)
        self.advance()
        return token

    def parse(self) -> Dict:
        result = self.expression()
        if not self.check(['EOF']):
            raise PolynomialSyntaxError(self.text, self.next().position,
                                        "'+', '-', '*', '^', ')' or end of input")
        return result

    def expression(self) -> Dict:
        if self.match(['MINUS']):
            result = {"op": "NEG", "left": self.term()}
        else:
            result = self.term()
        while self.check(['PLUS', 'MINUS']):
            op = self.next().type
            self.advance()
            result = {"op": op, "left": result, "right": self.term()}
        return result

    def term(self) -> Dict:
        result = self.factor()
        while self.match(['TIMES']):
            result = {"op": "TIMES", "left": result, "right": self.factor()}
        return result

    def factor(self) -> Dict:
        base = self.base()
        if self.match(['POWER']):
            exponent = self.expect(['INT'], "a natural-number exponent")
            return {"op": "POWER", "left": base, "exponent": int(exponent.value)}
        return base

    def base(self) -> Dict:
        token = self.next()
        if token.type == 'INT':
            self.advance()
            if self.match(['DIVIDE']):
                den = self.expect(['INT'], "a natural-number denominator")
                if int(den.value) == 0:
                    raise PolynomialSyntaxError(self.text, den.position, "a nonzero denominator")
                return {"RATIONAL": Fraction(int(token.value), int(den.value))}
            return {"RATIONAL": Fraction(int(token.value))}
        if token.type == 'ID':
            self.advance()
            return {"ID": token.value, "position": token.position}
        if token.type == 'LPAREN':
            self.advance()
            result = self.expression()
            self.expect(['RPAREN'], "')'")
            return result
        raise PolynomialSyntaxError(self.text, token.position, "a number, identifier or '('")


def evaluate(node: Dict, variables: VariableSet) -> Polynomial:
    """语法树求值为规范多项式"""
    if "RATIONAL" in node:
        return Polynomial.constant(variables, node["RATIONAL"])
    if "ID" in node:
        name = node["ID"]
        if name not in variables:
            raise UnknownVariable(name, node.get("position"))
        return Polynomial.variable(variables, name)
    op = node["op"]
    if op == "NEG":
        return -evaluate(node["left"], variables)
    if op == "POWER":
        return evaluate(node["left"], variables) ** node["exponent"]
    left = evaluate(node["left"], variables)
    right = evaluate(node["right"], variables)
    if op == "PLUS":
        return left + right
    if op == "MINUS":
        return left - right
    if op == "TIMES":
        return left * right
    raise ValueError(f"unknown operator {op}")


def parse(text: str, variables: VariableSet) -> Polynomial:
    return evaluate(Parser(text).parse(), variables)


def parse_many(texts, variables: VariableSet) -> List[Polynomial]:
    return [parse(text, variables) for text in texts]
