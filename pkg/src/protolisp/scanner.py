"""Character-level cursor shared by the S-expression and F-expression readers."""

from dataclasses import dataclass


@dataclass(frozen=True)
class SourcePosition:
    """1-based line and column of a character in the input text."""

    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}"


class Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def peek(self):
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def advance(self):
        c = self.peek()
        if c is None:
            return None
        self.pos += 1
        if c == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return c

    def position(self) -> SourcePosition:
        return SourcePosition(self.line, self.column)

    def skip_blank(self):
        """Skip whitespace and '#' comments, which run to end of line."""
        while True:
            c = self.peek()
            if c is None:
                return
            if c.isspace():
                self.advance()
            elif c == "#":
                while self.peek() not in (None, "\n"):
                    self.advance()
            else:
                return
