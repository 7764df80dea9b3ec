"""
Tokenizer shared by the feature-expression and CTL formula parsers
"""

import re
from dataclasses import dataclass
from typing import Callable, List

# Atoms are opaque names; comparison-looking atoms such as x>=1 are one token.
ATOM_PATTERN = r"[A-Za-z_][A-Za-z0-9_.]*(?:(?:>=|<=|==|!=|=|>|<)[A-Za-z0-9_.]+)?"

_TOKEN_RE = re.compile(
    rf"\s*(?:(?P<atom>{ATOM_PATTERN})|(?P<punct>[()\[\]!&|]))"
)


@dataclass(frozen=True)
class Token:
    """A lexical token with its 0-based column"""
    kind: str  # "atom", "punct" or "end"
    text: str
    position: int


def tokenize(text: str, error: Callable[[str, str, int], Exception]) -> List[Token]:
    """
    Split text into tokens.

    Args:
        text: Source text
        error: Factory for the exception raised on an unexpected character,
            called as error(message, text, position)

    Returns:
        Tokens followed by a single "end" token
    """
    tokens: List[Token] = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = _TOKEN_RE.match(text, position)
        if match is None or match.end() == position:
            raise error(f"unexpected character {text[position]!r}", text, position)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class TokenStream:
    """Cursor over a token list with one-token lookahead"""

    def __init__(self, text: str, tokens: List[Token], error: Callable[[str, str, int], Exception]):
        self.text = text
        self.tokens = tokens
        self.index = 0
        self._error = error

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def at(self, text: str) -> bool:
        token = self.current
        return token.kind != "end" and token.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.current.text or "end of input"
            raise self.fail(f"expected {text!r}, found {found!r}")
        return self.advance()

    def fail(self, message: str) -> Exception:
        return self._error(message, self.text, self.current.position)

    def expect_end(self) -> None:
        if self.current.kind != "end":
            raise self.fail(f"unexpected {self.current.text!r}")
